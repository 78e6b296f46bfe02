#pragma once

#include "lmis/geometry.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace lmis {

/// A family of L1 shapes that all cross one vertical line x = line_x and
/// one horizontal line y = line_y. Within such a family two shapes
/// intersect exactly when their corners fail to be strictly ordered the
/// same way in x and y, so the conflict graph is a permutation graph and
/// a maximum independent set is a longest strictly increasing corner
/// chain.
struct CrossingFamily {
    std::vector<LShape> shapes;
    Rational line_x;
    Rational line_y;
};

/// Dense 1-based ranks of the corner y values, listed in the order the
/// family is scanned (corner x ascending). Equal values share a rank, so
/// the sequence is a permutation of {1..m} exactly when all values are
/// distinct.
struct RankSequence {
    std::vector<int> ranks;
};

/// Positions of one longest strictly increasing subsequence, found by
/// patience sorting with smallest-tail preference and back-pointer
/// reconstruction. O(m log m). Deterministic: among equally long answers
/// it returns the one the standard reconstruction yields.
inline std::vector<std::size_t> lis_indices(const RankSequence& seq) {
    const std::vector<int>& v = seq.ranks;
    const std::size_t m = v.size();
    std::vector<int> tail_value;
    std::vector<std::size_t> tail_pos;
    std::vector<std::size_t> prev(m, static_cast<std::size_t>(-1));
    for (std::size_t p = 0; p < m; ++p) {
        const auto it = std::lower_bound(tail_value.begin(), tail_value.end(), v[p]);
        const std::size_t t = static_cast<std::size_t>(it - tail_value.begin());
        if (it == tail_value.end()) {
            tail_value.push_back(v[p]);
            tail_pos.push_back(p);
        } else {
            *it = v[p];
            tail_pos[t] = p;
        }
        if (t > 0) {
            prev[p] = tail_pos[t - 1];
        }
    }
    std::vector<std::size_t> out(tail_value.size());
    if (!out.empty()) {
        std::size_t p = tail_pos.back();
        for (std::size_t k = out.size(); k-- > 0;) {
            out[k] = p;
            p = prev[p];
        }
    }
    return out;
}

namespace detail {

inline void check_crossing_family(const CrossingFamily& f) {
    for (const LShape& l : f.shapes) {
        if (classify(l) != ShapeClass::L1) {
            throw Error("crossing family: shape is not of class L1");
        }
        if (!(l.corner_x <= f.line_x && f.line_x <= l.htip_x &&
              l.corner_y <= f.line_y && f.line_y <= l.vtip_y)) {
            throw Error("crossing family: shape does not cross both lines");
        }
    }
}

}  // namespace detail

/// Exact maximum independent set of a crossing family, as indices into
/// family.shapes (ascending). Shapes are scanned by corner x ascending
/// with equal-x runs ordered by corner y descending; corner y values take
/// dense ranks so ties share a rank. A strictly increasing subsequence of
/// those ranks therefore never keeps two shapes that agree in either
/// corner coordinate, which is exactly the independence condition.
inline std::vector<std::size_t> crossing_family_mis(const CrossingFamily& family) {
    detail::check_crossing_family(family);
    const std::vector<LShape>& shapes = family.shapes;
    const std::size_t m = shapes.size();
    if (m == 0) {
        return {};
    }

    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (shapes[a].corner_x != shapes[b].corner_x) {
            return shapes[a].corner_x < shapes[b].corner_x;
        }
        if (shapes[a].corner_y != shapes[b].corner_y) {
            return shapes[a].corner_y > shapes[b].corner_y;
        }
        return a < b;
    });

    std::vector<Rational> ys;
    ys.reserve(m);
    for (const LShape& l : shapes) ys.push_back(l.corner_y);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    RankSequence seq;
    seq.ranks.reserve(m);
    for (std::size_t p = 0; p < m; ++p) {
        const auto it = std::lower_bound(ys.begin(), ys.end(), shapes[order[p]].corner_y);
        seq.ranks.push_back(static_cast<int>(it - ys.begin()) + 1);
    }

    std::vector<std::size_t> chosen;
    for (std::size_t p : lis_indices(seq)) {
        chosen.push_back(order[p]);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace lmis
