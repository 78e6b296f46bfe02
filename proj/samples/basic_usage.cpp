// Minimal library walkthrough: generate an instance, run the grid solver,
// certify the answer against the exact oracle.
#include "lmis/lmis.hpp"

#include <iostream>

int main() {
    lmis::GenConfig cfg;
    cfg.n = 18;
    cfg.seed = 2024;
    cfg.mode = lmis::GenMode::Equilateral;
    cfg.length_min = 2;
    cfg.length_max = 8;
    cfg.coord_min = 0;
    cfg.coord_max = 30;

    const lmis::Instance inst = lmis::make_instance(lmis::generate(cfg));
    const lmis::Solution sol = lmis::solve_equilateral(inst);

    std::cout << "n = " << inst.stats.n << ", d = " << inst.stats.overall_ratio().str() << "\n";
    std::cout << "variant: " << lmis::variant_name(sol.variant) << "\n";
    std::cout << "solution size: " << sol.indices.size()
              << " (factor " << sol.guaranteed_factor.str() << ")\n";
    std::cout << "independent: " << std::boolalpha
              << lmis::verify_independent(inst.shapes, sol.indices) << "\n";

    const auto graph = lmis::build_conflict_graph(inst.shapes);
    const auto exact = lmis::brute_force_mis(graph);
    std::cout << "optimum: " << exact.size() << "\n";
    return 0;
}
