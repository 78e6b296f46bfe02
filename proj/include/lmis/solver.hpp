#pragma once

#include "lmis/geometry.hpp"
#include "lmis/partitioner.hpp"
#include "lmis/perm_mis.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace lmis {

enum class Variant {
    EquilateralGrid,     // dyadic buckets, mod-3 grid classes, 4 orientations
    GeneralGrid,         // per-axis dyadic buckets, mod-3 grid classes
    UniformEquilateral,  // single bucket, mod-2 grid classes, equal arms
    UniformGeneral,      // single bucket, mod-2 grid classes, per-axis arm lengths
    ClassExact,          // exact solve of one residue class
    BruteForce,          // exhaustive oracle result
};

inline std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::EquilateralGrid: return "equilateral-grid";
        case Variant::GeneralGrid: return "general-grid";
        case Variant::UniformEquilateral: return "uniform-equilateral";
        case Variant::UniformGeneral: return "uniform-general";
        case Variant::ClassExact: return "class-exact";
        case Variant::BruteForce: return "brute-force";
    }
    return "?";
}

/// An independent set certified by construction, with the provenance
/// needed to audit it: which algorithm produced it, which residue class
/// won, and the exact approximation factor the size is guaranteed to
/// satisfy (|optimum| <= guaranteed_factor * |indices|).
struct Solution {
    std::vector<std::size_t> indices;  // original instance indices, ascending
    Variant variant = Variant::ClassExact;
    std::optional<ClassKey> winning_class;
    Rational guaranteed_factor{1};
};

/// Exact maximum independent set of one residue class. Shapes are grouped
/// by grid box; every member of a box crosses the lines bounding that box
/// on the top-right, so each box is a crossing family and is solved
/// exactly; boxes of a common class never interact, so the union of the
/// per-box answers is optimal for the class.
inline Solution solve_class_exact(const std::vector<std::size_t>& positions, const ClassKey& key,
                                  const ScaledInstance& inst) {
    Solution out;
    out.variant = Variant::ClassExact;
    out.winning_class = key;
    out.guaranteed_factor = 1;
    if (positions.empty()) {
        return out;
    }

    Rational cell_w, cell_h;
    if (key.modulus == 3) {
        cell_w = pow2(key.bucket_x);
        cell_h = pow2(key.bucket_y);
    } else if (key.modulus == 2) {
        const auto a = arm_lengths(inst.shapes.at(positions.front()));
        cell_w = a.horizontal;
        cell_h = a.vertical;
    } else {
        throw Error("solve_class_exact: bad modulus");
    }

    std::map<BoxIndex, std::vector<std::size_t>> boxes;
    for (std::size_t pos : positions) {
        const LShape& l = inst.shapes.at(pos);
        const BoxIndex box = box_index(l, cell_w, cell_h);
        if (detail::residue(box.row, key.modulus) != key.row_residue ||
            detail::residue(box.col, key.modulus) != key.col_residue) {
            throw Error("solve_class_exact: shape outside the given residue class");
        }
        boxes[box].push_back(pos);
    }

    for (const auto& [box, members] : boxes) {
        CrossingFamily family;
        family.line_x = Rational(box.col + 1) * cell_w;
        family.line_y = Rational(box.row + 1) * cell_h;
        family.shapes.reserve(members.size());
        for (std::size_t pos : members) {
            family.shapes.push_back(inst.shapes[pos]);
        }
        for (std::size_t s : crossing_family_mis(family)) {
            out.indices.push_back(inst.original_indices.at(members[s]));
        }
    }
    std::sort(out.indices.begin(), out.indices.end());
    return out;
}

namespace detail {

// Tie order for equally sized candidates: smaller class key, then
// lexicographically smaller index set.
inline bool candidate_beats(const std::vector<std::size_t>& a_idx, const ClassKey& a_key,
                            const std::vector<std::size_t>& b_idx, const ClassKey& b_key) {
    if (a_idx.size() != b_idx.size()) {
        return a_idx.size() > b_idx.size();
    }
    if (a_key != b_key) {
        return a_key < b_key;
    }
    return a_idx < b_idx;
}

inline std::optional<Solution> best_class_solution(const ScaledInstance& scaled, ScaleMode mode,
                                                   int modulus) {
    std::optional<Solution> best;
    for (const auto& [key, members] : partition(scaled, mode, modulus)) {
        Solution s = solve_class_exact(members, key, scaled);
        if (!best ||
            candidate_beats(s.indices, key, best->indices, best->winning_class.value())) {
            best = std::move(s);
        }
    }
    return best;
}

inline std::array<std::vector<std::size_t>, 4> group_by_class(const std::vector<LShape>& shapes) {
    std::array<std::vector<std::size_t>, 4> groups;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        groups[static_cast<int>(classify(shapes[i]))].push_back(i);
    }
    return groups;
}

// Runs the grid pipeline on each orientation subset after rotating it to
// L1 and keeps the best candidate.
inline std::optional<Solution> best_over_orientations(const Instance& inst, ScaleMode mode,
                                                      int modulus) {
    const auto groups = group_by_class(inst.shapes);
    std::optional<Solution> best;
    for (int c = 0; c < 4; ++c) {
        const auto& members = groups[c];
        if (members.empty()) {
            continue;
        }
        std::vector<LShape> rotated;
        rotated.reserve(members.size());
        for (std::size_t i : members) {
            rotated.push_back(rotate_to_L1(inst.shapes[i], static_cast<ShapeClass>(c)));
        }
        const ScaledInstance scaled = rescale(rotated, mode, members);
        auto cand = best_class_solution(scaled, mode, modulus);
        if (cand && (!best || candidate_beats(cand->indices, cand->winning_class.value(),
                                              best->indices, best->winning_class.value()))) {
            best = std::move(cand);
        }
    }
    return best;
}

}  // namespace detail

/// Grid algorithm for equilateral L1 shapes only. Returns indices into
/// `shapes`; the result is at least a 1/(9 * floor(log2(2d))) fraction of
/// the optimum, d being the max/min arm-length ratio.
inline Solution solve_equilateral_L1(const std::vector<LShape>& shapes) {
    Solution out;
    out.variant = Variant::EquilateralGrid;
    out.guaranteed_factor = 9;
    if (shapes.empty()) {
        return out;
    }
    Rational min_len, max_len;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        if (classify(shapes[i]) != ShapeClass::L1) {
            throw Error("solve_equilateral_L1: shape is not of class L1");
        }
        const auto a = arm_lengths(shapes[i]);
        if (a.horizontal != a.vertical) {
            throw Error("solve_equilateral_L1: non-equilateral shape");
        }
        if (i == 0) {
            min_len = max_len = a.horizontal;
        } else {
            min_len = std::min(min_len, a.horizontal);
            max_len = std::max(max_len, a.horizontal);
        }
    }
    out.guaranteed_factor = Rational(9) * bucket_span(max_len / min_len);

    const ScaledInstance scaled = rescale(shapes, ScaleMode::Equilateral);
    auto best = detail::best_class_solution(scaled, ScaleMode::Equilateral, 3);
    out.indices = std::move(best->indices);
    out.winning_class = best->winning_class;
    return out;
}

Solution solve_uniform(const Instance& inst);

/// Equilateral instances, any orientations. Solves each orientation
/// subset on the dyadic mod-3 grid and keeps the best, for a factor of
/// 36 * floor(log2(2d)). Instances whose arms all share one length are
/// handed to solve_uniform, whose factor 16 is strictly better.
inline Solution solve_equilateral(const Instance& inst) {
    if (!inst.stats.all_equilateral) {
        throw Error("solve_equilateral: non-equilateral shape present");
    }
    if (inst.stats.uniform()) {
        return solve_uniform(inst);
    }
    Solution out;
    out.variant = Variant::EquilateralGrid;
    out.guaranteed_factor = Rational(36) * bucket_span(inst.stats.overall_ratio());
    if (inst.shapes.empty()) {
        return out;
    }
    auto best = detail::best_over_orientations(inst, ScaleMode::Equilateral, 3);
    out.indices = std::move(best->indices);
    out.winning_class = best->winning_class;
    return out;
}

/// Arbitrary instances. Buckets horizontal and vertical arm lengths
/// independently, solves the mod-3 classes of every 2^i x 2^j grid, and
/// keeps the best over the four orientations: factor
/// 36 * floor(log2(2 d_x)) * floor(log2(2 d_y)).
inline Solution solve_general(const Instance& inst) {
    Solution out;
    out.variant = Variant::GeneralGrid;
    out.guaranteed_factor = Rational(36) * bucket_span(inst.stats.horizontal_ratio()) *
                            bucket_span(inst.stats.vertical_ratio());
    if (inst.shapes.empty()) {
        return out;
    }
    auto best = detail::best_over_orientations(inst, ScaleMode::General, 3);
    out.indices = std::move(best->indices);
    out.winning_class = best->winning_class;
    return out;
}

/// Instances whose horizontal arms all share one length and whose
/// vertical arms all share one length. A single grid with cells matching
/// the arm lengths and mod-2 residues gives 4 exactly solved classes per
/// orientation: factor 16 overall, 4 when only one orientation occurs.
inline Solution solve_uniform(const Instance& inst) {
    if (!inst.stats.uniform()) {
        throw Error("solve_uniform: arm lengths are not uniform");
    }
    Solution out;
    out.variant = (inst.stats.min_arm == inst.stats.max_arm) ? Variant::UniformEquilateral
                                                             : Variant::UniformGeneral;
    if (inst.shapes.empty()) {
        out.guaranteed_factor = 4;
        return out;
    }
    int orientations = 0;
    for (const auto& g : detail::group_by_class(inst.shapes)) {
        orientations += g.empty() ? 0 : 1;
    }
    out.guaranteed_factor = (orientations <= 1) ? 4 : 16;
    auto best = detail::best_over_orientations(inst, ScaleMode::General, 2);
    out.indices = std::move(best->indices);
    out.winning_class = best->winning_class;
    return out;
}

}  // namespace lmis
