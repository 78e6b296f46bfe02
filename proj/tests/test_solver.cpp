#include "lmis/solver.hpp"

#include "lmis/oracle.hpp"
#include "support/helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using lmis::ClassKey;
using lmis::Instance;
using lmis::LShape;
using lmis::Rational;
using lmis::ScaleMode;
using lmis::Solution;
using lmis::Variant;

namespace {

LShape l1_shape(const Rational& cx, const Rational& cy, const Rational& len) {
    return LShape{cx, cy, cx + len, cy + len};
}

// The factor the size guarantee is checked against, recomputed here from
// first principles rather than trusted from the Solution.
Rational equilateral_factor(const Instance& inst) {
    return Rational(36) * lmis::bucket_span(inst.stats.overall_ratio());
}

Rational general_factor(const Instance& inst) {
    return Rational(36) * lmis::bucket_span(inst.stats.horizontal_ratio()) *
           lmis::bucket_span(inst.stats.vertical_ratio());
}

void require_independent(const Instance& inst, const Solution& sol) {
    REQUIRE(lmis::verify_independent(inst.shapes, sol.indices));
}

}  // namespace

TEST_CASE("solve_class_exact on hand-built classes") {
    // one box, two non-inverting shapes: both kept
    lmis::ScaledInstance inst;
    inst.shapes = {l1_shape(0, 0, 3), l1_shape(1, 1, 3)};
    inst.original_indices = {10, 20};
    const ClassKey key{1, 1, 0, 0, 3};
    CHECK_FALSE(lmis::intersects(inst.shapes[0], inst.shapes[1]));
    Solution sol = lmis::solve_class_exact({0, 1}, key, inst);
    CHECK(sol.indices == std::vector<std::size_t>{10, 20});
    CHECK(sol.variant == Variant::ClassExact);
    CHECK(sol.guaranteed_factor == 1);

    // two boxes three columns apart, one shape each
    inst.shapes = {l1_shape(0, 0, 2), l1_shape(12, 0, 2)};
    inst.original_indices = {0, 1};
    sol = lmis::solve_class_exact({0, 1}, key, inst);
    CHECK(sol.indices == std::vector<std::size_t>{0, 1});

    // empty class
    sol = lmis::solve_class_exact({}, key, inst);
    CHECK(sol.indices.empty());

    // shape from the wrong residue class is rejected
    inst.shapes = {l1_shape(2, 0, 2)};
    inst.original_indices = {0};
    CHECK_THROWS_AS(lmis::solve_class_exact({0}, key, inst), lmis::Error);
}

TEST_CASE("solve_class_exact is exact per class") {
    for (std::uint64_t seed = 700; seed < 720; ++seed) {
        const auto inst = testsupport::random_instance(seed, 16, lmis::GenMode::Equilateral, 30);
        std::vector<LShape> rotated;
        for (const auto& l : inst.shapes) {
            rotated.push_back(lmis::rotate_to_L1(l, lmis::classify(l)));
        }
        const auto scaled = lmis::rescale(rotated, ScaleMode::Equilateral);
        for (const auto& [key, members] : lmis::partition(scaled, ScaleMode::Equilateral, 3)) {
            const Solution sol = lmis::solve_class_exact(members, key, scaled);
            std::vector<LShape> class_shapes;
            for (std::size_t i : members) {
                class_shapes.push_back(scaled.shapes[i]);
            }
            CHECK(sol.indices.size() == testsupport::exhaustive_mis_size(class_shapes));
        }
    }
}

TEST_CASE("solve_equilateral_L1 basics") {
    const Solution empty = lmis::solve_equilateral_L1({});
    CHECK(empty.indices.empty());

    const Solution one = lmis::solve_equilateral_L1({l1_shape(3, 4, 5)});
    CHECK(one.indices == std::vector<std::size_t>{0});
    CHECK(one.guaranteed_factor == 9);

    // pairwise-disjoint shapes of one arm length whose boxes share one
    // residue class: all kept
    const Solution all = lmis::solve_equilateral_L1(
        {l1_shape(0, 0, 2), l1_shape(12, 0, 2), l1_shape(24, 0, 2), l1_shape(36, 0, 2)});
    CHECK(all.indices.size() == 4);

    CHECK_THROWS_AS(lmis::solve_equilateral_L1({LShape{0, 0, 2, -2}}), lmis::Error);
    CHECK_THROWS_AS(lmis::solve_equilateral_L1({LShape{0, 0, 2, 3}}), lmis::Error);
}

TEST_CASE("solve_equilateral_L1 meets its guarantee") {
    for (std::uint64_t seed = 800; seed < 840; ++seed) {
        auto inst = testsupport::random_instance(seed, 14, lmis::GenMode::Equilateral, 24);
        std::vector<LShape> only_l1;
        for (const auto& l : inst.shapes) {
            if (lmis::classify(l) == lmis::ShapeClass::L1) {
                only_l1.push_back(l);
            }
        }
        if (only_l1.empty()) {
            continue;
        }
        const Solution sol = lmis::solve_equilateral_L1(only_l1);
        REQUIRE(lmis::verify_independent(only_l1, sol.indices));
        const std::size_t alpha = testsupport::exhaustive_mis_size(only_l1);
        CHECK(Rational(lmis::BigInt(sol.indices.size())) * sol.guaranteed_factor >=
              Rational(lmis::BigInt(alpha)));
    }
}

TEST_CASE("solve_equilateral dispatch and guarantees") {
    // all shapes L1: the orientation split returns the L1 result
    std::vector<LShape> shapes = {l1_shape(0, 0, 2), l1_shape(1, 1, 2), l1_shape(10, 3, 4)};
    const Instance inst = lmis::make_instance(shapes);
    const Solution via_full = lmis::solve_equilateral(inst);
    const Solution via_l1 = lmis::solve_equilateral_L1(shapes);
    CHECK(via_full.indices == via_l1.indices);

    // uniform arm lengths are routed to the mod-2 variant
    const Instance uni = lmis::make_instance({l1_shape(0, 0, 2), l1_shape(5, 5, 2)});
    const Solution dispatched = lmis::solve_equilateral(uni);
    CHECK(dispatched.variant == Variant::UniformEquilateral);

    // rejects non-equilateral shapes
    CHECK_THROWS_AS(lmis::solve_equilateral(lmis::make_instance({LShape{0, 0, 2, 3}})),
                    lmis::Error);

    // empty instance
    CHECK(lmis::solve_equilateral(lmis::make_instance({})).indices.empty());

    // four pairwise-disjoint shapes, one per orientation: optimum is 4,
    // the guarantee only promises ceil(4/36) = 1
    const Instance four = lmis::make_instance({
        LShape{0, 0, 2, 2},
        LShape{10, 0, 12, -2},
        LShape{20, 0, 18, -2},
        LShape{30, 0, 28, 2},
    });
    const Solution best_of_four = lmis::solve_equilateral(four);
    require_independent(four, best_of_four);
    CHECK(best_of_four.indices.size() >= 1);
}

TEST_CASE("solve_equilateral guarantee on random instances") {
    for (std::uint64_t seed = 900; seed < 950; ++seed) {
        const auto inst = testsupport::random_instance(seed, 15, lmis::GenMode::Equilateral, 28);
        const Solution sol = lmis::solve_equilateral(inst);
        require_independent(inst, sol);
        const std::size_t alpha = testsupport::exhaustive_mis_size(inst.shapes);
        CHECK(Rational(lmis::BigInt(sol.indices.size())) * equilateral_factor(inst) >=
              Rational(lmis::BigInt(alpha)));
    }
}

TEST_CASE("solve_general") {
    // two intersecting shapes leave exactly one
    const Instance two = lmis::make_instance({LShape{0, 0, 4, 4}, LShape{2, -2, 6, 2}});
    CHECK(lmis::solve_general(two).indices.size() == 1);

    CHECK(lmis::solve_general(lmis::make_instance({})).indices.empty());

    for (std::uint64_t seed = 1000; seed < 1050; ++seed) {
        const auto inst = testsupport::random_instance(seed, 15, lmis::GenMode::General, 28);
        const Solution sol = lmis::solve_general(inst);
        require_independent(inst, sol);
        const std::size_t alpha = testsupport::exhaustive_mis_size(inst.shapes);
        CHECK(Rational(lmis::BigInt(sol.indices.size())) * general_factor(inst) >=
              Rational(lmis::BigInt(alpha)));
    }

    // equilateral input is a valid general input too
    const auto eq = testsupport::random_instance(77, 12, lmis::GenMode::Equilateral, 24);
    const Solution sol = lmis::solve_general(eq);
    require_independent(eq, sol);
}

TEST_CASE("solve_uniform") {
    // identical orientation, pairwise independent, boxes in one mod-2
    // residue class: everything survives
    const Instance spread = lmis::make_instance(
        {l1_shape(0, 0, 2), l1_shape(8, 8, 2), l1_shape(8, 0, 2), l1_shape(0, 8, 2)});
    const Solution all = lmis::solve_uniform(spread);
    CHECK(all.indices.size() == 4);
    CHECK(all.guaranteed_factor == 4);  // single orientation present

    const Solution one = lmis::solve_uniform(lmis::make_instance({l1_shape(3, 3, 7)}));
    CHECK(one.indices.size() == 1);

    CHECK_THROWS_AS(
        lmis::solve_uniform(lmis::make_instance({l1_shape(0, 0, 2), l1_shape(9, 9, 4)})),
        lmis::Error);

    for (std::uint64_t seed = 1100; seed < 1150; ++seed) {
        const auto inst = testsupport::random_instance(seed, 15, lmis::GenMode::Uniform, 24);
        const Solution sol = lmis::solve_uniform(inst);
        require_independent(inst, sol);
        const std::size_t alpha = testsupport::exhaustive_mis_size(inst.shapes);
        CHECK(sol.indices.size() * 16 >= alpha);
        CHECK((sol.variant == Variant::UniformEquilateral ||
               sol.variant == Variant::UniformGeneral));
    }
}

TEST_CASE("solutions are deterministic") {
    for (std::uint64_t seed = 1200; seed < 1210; ++seed) {
        const auto inst = testsupport::random_instance(seed, 30, lmis::GenMode::General, 40);
        const Solution a = lmis::solve_general(inst);
        const Solution b = lmis::solve_general(inst);
        CHECK(a.indices == b.indices);
        CHECK(a.winning_class == b.winning_class);
        CHECK(a.guaranteed_factor == b.guaranteed_factor);
    }
}

TEST_CASE("solution size is invariant under rigid transforms") {
    for (std::uint64_t seed = 1300; seed < 1320; ++seed) {
        const auto inst = testsupport::random_instance(seed, 24, lmis::GenMode::General, 40);
        const std::size_t base = lmis::solve_general(inst).indices.size();

        std::vector<LShape> turned, shifted, stretched;
        for (const auto& l : inst.shapes) {
            turned.push_back(lmis::rotate_ccw(l));
            shifted.push_back(lmis::translated(l, Rational(13, 4), Rational(-7, 2)));
            stretched.push_back(lmis::scaled(l, Rational(3, 5), Rational(3, 5)));
        }
        CHECK(lmis::solve_general(lmis::make_instance(turned)).indices.size() == base);
        CHECK(lmis::solve_general(lmis::make_instance(shifted)).indices.size() == base);
        CHECK(lmis::solve_general(lmis::make_instance(stretched)).indices.size() == base);
    }
}

TEST_CASE("negative coordinates are handled by every variant") {
    for (std::uint64_t seed = 1500; seed < 1520; ++seed) {
        lmis::GenConfig cfg;
        cfg.n = 14;
        cfg.seed = seed;
        cfg.mode = (seed % 3 == 0)   ? lmis::GenMode::Equilateral
                   : (seed % 3 == 1) ? lmis::GenMode::General
                                     : lmis::GenMode::Uniform;
        cfg.length_min = 2;
        cfg.length_max = 16;
        cfg.coord_min = Rational(-30);
        cfg.coord_max = Rational(10);
        const Instance inst = lmis::make_instance(lmis::generate(cfg));
        const std::size_t alpha = testsupport::exhaustive_mis_size(inst.shapes);

        std::vector<Solution> sols;
        sols.push_back(lmis::solve_general(inst));
        if (inst.stats.all_equilateral) {
            sols.push_back(lmis::solve_equilateral(inst));
        }
        if (inst.stats.uniform()) {
            sols.push_back(lmis::solve_uniform(inst));
        }
        for (const Solution& sol : sols) {
            require_independent(inst, sol);
            CHECK(Rational(lmis::BigInt(sol.indices.size())) * sol.guaranteed_factor >=
                  Rational(lmis::BigInt(alpha)));
        }
    }
}

TEST_CASE("class tie goes to the smaller key") {
    // two independent shapes in different buckets; both classes solve to
    // size 1, so the bucket-1 class must win
    const Instance inst = lmis::make_instance({l1_shape(0, 0, 2), l1_shape(50, 0, 4)});
    const Solution sol = lmis::solve_equilateral(inst);
    REQUIRE(sol.winning_class.has_value());
    CHECK(sol.winning_class->bucket_x == 1);
    CHECK(sol.indices == std::vector<std::size_t>{0});
}
