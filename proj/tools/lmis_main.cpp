// Command-line front end: solve / check / oracle / gen / render / bench.
#include "lmis/lmis.hpp"

#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string class_key_string(const lmis::ClassKey& key) {
    std::ostringstream os;
    os << "i=" << key.bucket_x << " j=" << key.bucket_y << " kr=" << key.row_residue
       << " kc=" << key.col_residue << " mod=" << key.modulus;
    return os.str();
}

lmis::Solution solve_with_variant(const lmis::Instance& inst, const std::string& variant) {
    if (variant == "equilateral") {
        return lmis::solve_equilateral(inst);
    }
    if (variant == "general") {
        return lmis::solve_general(inst);
    }
    if (variant == "uniform") {
        return lmis::solve_uniform(inst);
    }
    // auto: the most specific variant whose precondition holds
    if (inst.stats.uniform()) {
        return lmis::solve_uniform(inst);
    }
    if (inst.stats.all_equilateral) {
        return lmis::solve_equilateral(inst);
    }
    return lmis::solve_general(inst);
}

void print_instance_stats(const lmis::Instance& inst) {
    const auto& st = inst.stats;
    std::cout << "n = " << st.n << '\n';
    std::cout << "d = " << st.overall_ratio().str() << '\n';
    std::cout << "d_x = " << st.horizontal_ratio().str() << '\n';
    std::cout << "d_y = " << st.vertical_ratio().str() << '\n';
    std::cout << "equilateral = " << (st.all_equilateral ? "true" : "false") << '\n';
    std::cout << "uniform = " << (st.uniform() ? "true" : "false") << '\n';
    std::array<std::size_t, 4> counts{};
    for (const auto& l : inst.shapes) {
        ++counts[static_cast<int>(lmis::classify(l))];
    }
    std::cout << "orientation_counts = L1:" << counts[0] << " L2:" << counts[1] << " L3:"
              << counts[2] << " L4:" << counts[3] << '\n';
}

void print_solution_report(const lmis::Solution& sol) {
    std::cout << "variant = " << lmis::variant_name(sol.variant) << '\n';
    std::cout << "solution_size = " << sol.indices.size() << '\n';
    std::cout << "guaranteed_factor = " << sol.guaranteed_factor.str() << '\n';
    std::cout << "winning_class = "
              << (sol.winning_class ? class_key_string(*sol.winning_class) : "none") << '\n';
    std::cout << "solution =";
    for (std::size_t i : sol.indices) {
        std::cout << ' ' << i;
    }
    std::cout << '\n';
}

std::size_t default_oracle_cap() {
    if (const char* env = std::getenv("LMIS_ORACLE_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw lmis::Error("LMIS_ORACLE_CAP is not a number");
        }
    }
    return 30;
}

lmis::Rational parse_flag_decimal(const std::string& s, const char* flag) {
    try {
        return lmis::parse_decimal(s);
    } catch (const lmis::Error&) {
        throw lmis::Error(std::string(flag) + ": expected a decimal number, got '" + s + "'");
    }
}

std::pair<lmis::Rational, lmis::Rational> parse_range(const std::string& s, const char* flag) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
        throw lmis::Error(std::string(flag) + ": expected LO:HI, got '" + s + "'");
    }
    return {parse_flag_decimal(s.substr(0, colon), flag),
            parse_flag_decimal(s.substr(colon + 1), flag)};
}

int cmd_solve(const std::string& path, const std::string& variant, const std::string& out_path,
              const std::string& svg_path) {
    const auto t0 = Clock::now();
    const lmis::Instance inst = lmis::make_instance(lmis::load_instance(path));
    const lmis::Solution sol = solve_with_variant(inst, variant);
    const double wall = ms_since(t0);

    if (!out_path.empty()) {
        lmis::save_solution(out_path, sol.indices);
    }
    if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        if (!svg) {
            throw lmis::Error("cannot write svg file: " + svg_path);
        }
        lmis::render_svg(svg, inst.shapes, sol.indices);
    }
    std::cout << "instance = " << path << '\n';
    print_instance_stats(inst);
    print_solution_report(sol);
    std::cout << "wall_ms = " << wall << '\n';
    return 0;
}

int cmd_check(const std::string& instance_path, const std::string& solution_path) {
    const std::vector<lmis::LShape> shapes = lmis::load_instance(instance_path);
    const std::vector<std::size_t> indices = lmis::load_solution(solution_path);
    for (std::size_t i : indices) {
        if (i >= shapes.size()) {
            throw lmis::Error("solution index " + std::to_string(i) + " out of range (n = " +
                              std::to_string(shapes.size()) + ")");
        }
    }
    if (const auto bad = lmis::find_violation(shapes, indices)) {
        std::cout << "independent = false\n";
        std::cout << "violating pair = " << bad->first << ' ' << bad->second << '\n';
        return 1;
    }
    std::cout << "independent = true\n";
    return 0;
}

int cmd_oracle(const std::string& path, std::size_t cap, const std::string& out_path) {
    const auto t0 = Clock::now();
    const lmis::Instance inst = lmis::make_instance(lmis::load_instance(path));
    if (inst.stats.n > cap) {
        throw lmis::Error("oracle: instance has " + std::to_string(inst.stats.n) +
                          " shapes, above the cap of " + std::to_string(cap) +
                          " (raise --oracle-cap or LMIS_ORACLE_CAP)");
    }
    const lmis::ConflictGraph graph = lmis::build_conflict_graph(inst.shapes);
    const std::vector<std::size_t> exact = lmis::brute_force_mis(graph, cap);
    const lmis::Solution sol = solve_with_variant(inst, "auto");
    const double wall = ms_since(t0);

    if (!out_path.empty()) {
        lmis::save_solution(out_path, exact);
    }
    std::cout << "instance = " << path << '\n';
    print_instance_stats(inst);
    print_solution_report(sol);
    std::cout << "oracle_alpha = " << exact.size() << '\n';
    if (!sol.indices.empty()) {
        const lmis::Rational ratio(lmis::BigInt(exact.size()), lmis::BigInt(sol.indices.size()));
        std::cout << "ratio = " << ratio.str() << '\n';
    }
    std::cout << "wall_ms = " << wall << '\n';
    return 0;
}

int cmd_gen(std::size_t n, std::uint64_t seed, const std::string& mode,
            const std::string& lengths, const std::string& coords, const std::string& grain,
            const std::string& out_path) {
    lmis::GenConfig cfg;
    cfg.n = n;
    cfg.seed = seed;
    if (mode == "equilateral") {
        cfg.mode = lmis::GenMode::Equilateral;
    } else if (mode == "general") {
        cfg.mode = lmis::GenMode::General;
    } else if (mode == "uniform") {
        cfg.mode = lmis::GenMode::Uniform;
    } else {
        throw lmis::Error("--mode must be equilateral, general or uniform");
    }
    std::tie(cfg.length_min, cfg.length_max) = parse_range(lengths, "--lengths");
    std::tie(cfg.coord_min, cfg.coord_max) = parse_range(coords, "--coords");
    cfg.grain = parse_flag_decimal(grain, "--grain");

    const std::vector<lmis::LShape> shapes = lmis::generate(cfg);
    std::ostringstream header;
    header << "lmis gen --n " << n << " --seed " << seed << " --mode " << mode << " --lengths "
           << lengths << " --coords " << coords << " --grain " << grain;
    if (out_path.empty()) {
        std::cout << "# " << header.str() << '\n';
        lmis::write_instance(std::cout, shapes);
    } else {
        lmis::save_instance(out_path, shapes, header.str());
    }
    return 0;
}

int cmd_render(const std::string& instance_path, const std::string& solution_path,
               const std::string& svg_path) {
    const std::vector<lmis::LShape> shapes = lmis::load_instance(instance_path);
    std::vector<std::size_t> selected;
    if (!solution_path.empty()) {
        selected = lmis::load_solution(solution_path);
        for (std::size_t i : selected) {
            if (i >= shapes.size()) {
                throw lmis::Error("solution index " + std::to_string(i) + " out of range");
            }
        }
    }
    std::ofstream svg(svg_path);
    if (!svg) {
        throw lmis::Error("cannot write svg file: " + svg_path);
    }
    lmis::render_svg(svg, shapes, selected);
    return 0;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed, const std::string& mode,
              int repeat) {
    std::size_t prev_n = 0;
    double prev_ms = 0;
    for (std::size_t n : sizes) {
        lmis::GenConfig cfg;
        cfg.n = n;
        cfg.seed = seed;
        cfg.mode = (mode == "equilateral") ? lmis::GenMode::Equilateral
                   : (mode == "uniform")   ? lmis::GenMode::Uniform
                                           : lmis::GenMode::General;
        cfg.length_min = 2;
        cfg.length_max = 16;
        cfg.coord_min = 0;
        cfg.coord_max = 1000;
        const lmis::Instance inst = lmis::make_instance(lmis::generate(cfg));

        double best = 0;
        std::size_t size = 0;
        for (int r = 0; r < repeat; ++r) {
            const auto t0 = Clock::now();
            const lmis::Solution sol = solve_with_variant(inst, "auto");
            const double wall = ms_since(t0);
            size = sol.indices.size();
            best = (r == 0) ? wall : std::min(best, wall);
        }
        std::cout << "bench_n = " << n << '\n';
        std::cout << "bench_solution_size = " << size << '\n';
        std::cout << "bench_wall_ms = " << best << '\n';
        if (prev_n != 0 && n == 2 * prev_n && prev_ms > 0) {
            std::cout << "bench_growth = " << best / prev_ms << '\n';
        }
        prev_n = n;
        prev_ms = best;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"approximate maximum independent set solver for axis-aligned L-shapes"};
    app.require_subcommand(1);

    std::string instance_path, solution_path, variant = "auto", out_path, svg_path;
    std::string mode = "general", lengths = "2:8", coords = "0:100", grain = "0.25";
    std::size_t n = 100;
    std::uint64_t seed = 0;
    std::size_t oracle_cap = 0;
    std::vector<std::size_t> sizes{10000, 20000, 40000, 80000};
    int repeat = 2;

    auto* solve = app.add_subcommand("solve", "solve an instance file and report the result");
    solve->add_option("instance", instance_path, "instance file")->required();
    solve->add_option("--variant", variant, "auto|equilateral|general|uniform")
        ->check(CLI::IsMember({"auto", "equilateral", "general", "uniform"}));
    solve->add_option("--out", out_path, "write the solution indices here");
    solve->add_option("--svg", svg_path, "also render the instance to this SVG file");

    auto* check = app.add_subcommand("check", "verify that a solution file is independent");
    check->add_option("instance", instance_path, "instance file")->required();
    check->add_option("solution", solution_path, "solution file")->required();

    auto* oracle = app.add_subcommand("oracle", "exact brute-force optimum (small instances)");
    oracle->add_option("instance", instance_path, "instance file")->required();
    oracle->add_option("--oracle-cap", oracle_cap, "largest instance the oracle accepts");
    oracle->add_option("--out", out_path, "write the exact solution here");

    auto* gen = app.add_subcommand("gen", "generate a reproducible random instance");
    gen->add_option("--n", n, "number of shapes");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--mode", mode, "equilateral|general|uniform")
        ->check(CLI::IsMember({"equilateral", "general", "uniform"}));
    gen->add_option("--lengths", lengths, "arm length range LO:HI");
    gen->add_option("--coords", coords, "corner coordinate range LO:HI");
    gen->add_option("--grain", grain, "all values are multiples of this");
    gen->add_option("--out", out_path, "output file (stdout when omitted)");

    auto* render = app.add_subcommand("render", "draw an instance (and solution) as SVG");
    render->add_option("instance", instance_path, "instance file")->required();
    render->add_option("solution", solution_path, "solution file to highlight");
    render->add_option("--svg", svg_path, "output SVG file")->required();

    auto* bench = app.add_subcommand("bench", "time the solver on generated instances");
    bench->add_option("--sizes", sizes, "instance sizes to sweep")->delimiter(',');
    bench->add_option("--seed", seed, "random seed");
    bench->add_option("--mode", mode, "equilateral|general|uniform")
        ->check(CLI::IsMember({"equilateral", "general", "uniform"}));
    bench->add_option("--repeat", repeat, "timing repetitions per size (best is kept)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) {
            return cmd_solve(instance_path, variant, out_path, svg_path);
        }
        if (check->parsed()) {
            return cmd_check(instance_path, solution_path);
        }
        if (oracle->parsed()) {
            const std::size_t cap = oracle->count("--oracle-cap") ? oracle_cap : default_oracle_cap();
            return cmd_oracle(instance_path, cap, out_path);
        }
        if (gen->parsed()) {
            return cmd_gen(n, seed, mode, lengths, coords, grain, out_path);
        }
        if (render->parsed()) {
            return cmd_render(instance_path, solution_path, svg_path);
        }
        if (bench->parsed()) {
            return cmd_bench(sizes, seed, mode, repeat);
        }
    } catch (const lmis::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
