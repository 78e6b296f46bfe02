#pragma once

#include "lmis/rational.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace lmis {

/// The four L orientations, identified by the directions of the two arms
/// leaving the corner: L1 = east+north, L2 = east+south, L3 = west+south,
/// L4 = west+north.
enum class ShapeClass { L1 = 0, L2, L3, L4 };

inline const char* shape_class_name(ShapeClass c) {
    switch (c) {
        case ShapeClass::L1: return "L1";
        case ShapeClass::L2: return "L2";
        case ShapeClass::L3: return "L3";
        case ShapeClass::L4: return "L4";
    }
    return "?";
}

/// One axis-aligned L-shape: a horizontal segment from the corner to
/// (htip_x, corner_y) and a vertical segment from the corner to
/// (corner_x, vtip_y), both closed. Both arms must have nonzero length;
/// the sign pattern of (htip_x - corner_x, vtip_y - corner_y) determines
/// the orientation.
struct LShape {
    Rational corner_x;
    Rational corner_y;
    Rational htip_x;
    Rational vtip_y;

    bool operator==(const LShape&) const = default;
};

inline bool lshape_less(const LShape& a, const LShape& b) {
    return std::tie(a.corner_x, a.corner_y, a.htip_x, a.vtip_y) <
           std::tie(b.corner_x, b.corner_y, b.htip_x, b.vtip_y);
}

inline ShapeClass classify(const LShape& l) {
    if (l.htip_x == l.corner_x || l.vtip_y == l.corner_y) {
        throw Error("degenerate L-shape: zero-length arm");
    }
    const bool east = l.htip_x > l.corner_x;
    const bool north = l.vtip_y > l.corner_y;
    if (east) {
        return north ? ShapeClass::L1 : ShapeClass::L2;
    }
    return north ? ShapeClass::L4 : ShapeClass::L3;
}

struct ArmLengths {
    Rational horizontal;
    Rational vertical;
};

inline ArmLengths arm_lengths(const LShape& l) {
    return {abs(l.htip_x - l.corner_x), abs(l.vtip_y - l.corner_y)};
}

inline bool is_equilateral(const LShape& l) {
    const auto a = arm_lengths(l);
    return a.horizontal == a.vertical;
}

/// Closed-set intersection test: true iff the two point sets share at
/// least one point. Covers perpendicular crossings, touching endpoints
/// and collinear overlap, all exactly.
inline bool intersects(const LShape& a, const LShape& b) {
    const auto [ah_lo, ah_hi] = std::minmax(a.corner_x, a.htip_x);
    const auto [av_lo, av_hi] = std::minmax(a.corner_y, a.vtip_y);
    const auto [bh_lo, bh_hi] = std::minmax(b.corner_x, b.htip_x);
    const auto [bv_lo, bv_hi] = std::minmax(b.corner_y, b.vtip_y);
    // collinear horizontal arms
    if (a.corner_y == b.corner_y && ah_lo <= bh_hi && bh_lo <= ah_hi) {
        return true;
    }
    // collinear vertical arms
    if (a.corner_x == b.corner_x && av_lo <= bv_hi && bv_lo <= av_hi) {
        return true;
    }
    // horizontal arm of a against vertical arm of b
    if (ah_lo <= b.corner_x && b.corner_x <= ah_hi && bv_lo <= a.corner_y && a.corner_y <= bv_hi) {
        return true;
    }
    // vertical arm of a against horizontal arm of b
    if (bh_lo <= a.corner_x && a.corner_x <= bh_hi && av_lo <= b.corner_y && b.corner_y <= av_hi) {
        return true;
    }
    return false;
}

/// One quarter turn counterclockwise about the origin, (x, y) -> (-y, x).
/// The old horizontal tip becomes the vertical tip and vice versa.
inline LShape rotate_ccw(const LShape& l) {
    return LShape{-l.corner_y, l.corner_x, -l.vtip_y, l.htip_x};
}

/// Rigid rotation taking shapes of class `from` to class L1 (the identity
/// for L1). Rotations preserve arm lengths and pairwise intersection.
inline LShape rotate_to_L1(const LShape& l, ShapeClass from) {
    if (classify(l) != from) {
        throw Error(std::string("rotate_to_L1: shape is not of class ") + shape_class_name(from));
    }
    int turns = 0;
    switch (from) {
        case ShapeClass::L1: turns = 0; break;
        case ShapeClass::L2: turns = 1; break;
        case ShapeClass::L3: turns = 2; break;
        case ShapeClass::L4: turns = 3; break;
    }
    LShape out = l;
    for (int i = 0; i < turns; ++i) {
        out = rotate_ccw(out);
    }
    return out;
}

inline LShape translated(const LShape& l, const Rational& dx, const Rational& dy) {
    return LShape{l.corner_x + dx, l.corner_y + dy, l.htip_x + dx, l.vtip_y + dy};
}

/// Per-axis scaling about the origin; requires sx, sy > 0 so orientation
/// and the intersection graph are preserved.
inline LShape scaled(const LShape& l, const Rational& sx, const Rational& sy) {
    if (sx <= 0 || sy <= 0) {
        throw Error("scaled: scale factors must be positive");
    }
    return LShape{l.corner_x * sx, l.corner_y * sy, l.htip_x * sx, l.vtip_y * sy};
}

enum class DiagnosticKind {
    DegenerateArm,   // zero-length arm; such shapes are rejected by the parser
    DuplicateShape,  // identical 4-tuple seen earlier (legal, flagged)
    SharedCornerX,   // two same-class shapes with equal corner x
    SharedCornerY,   // two same-class shapes with equal corner y
};

struct Diagnostic {
    DiagnosticKind kind;
    std::size_t shape;
    std::optional<std::size_t> other;
    std::string message;
};

/// Diagnostic sweep over a raw shape list. Nothing is rejected here;
/// degenerate arms, duplicate tuples and same-class shapes sharing a
/// corner coordinate are reported for the caller to act on.
inline std::vector<Diagnostic> validate_instance(const std::vector<LShape>& shapes) {
    std::vector<Diagnostic> out;
    std::vector<std::size_t> valid;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        const LShape& l = shapes[i];
        if (l.htip_x == l.corner_x || l.vtip_y == l.corner_y) {
            out.push_back({DiagnosticKind::DegenerateArm, i, std::nullopt,
                           "shape " + std::to_string(i) + ": zero-length arm"});
        } else {
            valid.push_back(i);
        }
    }

    std::vector<std::size_t> order = valid;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lshape_less(shapes[a], shapes[b]) || (!lshape_less(shapes[b], shapes[a]) && a < b);
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
        std::size_t first = k;
        while (k < order.size() && shapes[order[k]] == shapes[order[first - 1]]) {
            out.push_back({DiagnosticKind::DuplicateShape, order[k], order[first - 1],
                           "shape " + std::to_string(order[k]) + " duplicates shape " +
                               std::to_string(order[first - 1])});
            ++k;
        }
    }

    // Same-class shapes sharing a corner coordinate: flagged, not fixed.
    std::array<std::vector<std::size_t>, 4> by_class;
    for (std::size_t i : valid) {
        by_class[static_cast<int>(classify(shapes[i]))].push_back(i);
    }
    const auto scan = [&](const std::vector<std::size_t>& members, bool on_x) {
        std::map<Rational, std::size_t> first_seen;
        for (std::size_t i : members) {
            const Rational& key = on_x ? shapes[i].corner_x : shapes[i].corner_y;
            auto [it, inserted] = first_seen.emplace(key, i);
            if (!inserted) {
                out.push_back({on_x ? DiagnosticKind::SharedCornerX : DiagnosticKind::SharedCornerY,
                               i, it->second,
                               "shapes " + std::to_string(it->second) + " and " + std::to_string(i) +
                                   " share corner " + (on_x ? "x" : "y") + " (same class)"});
            }
        }
    };
    for (const auto& members : by_class) {
        scan(members, true);
        scan(members, false);
    }

    std::sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) {
        return std::tie(a.shape, a.kind) < std::tie(b.shape, b.kind);
    });
    return out;
}

/// Cached global statistics of a shape list. Ratios are 1 for the empty
/// instance; uniformity flags are vacuously true.
struct InstanceStats {
    std::size_t n = 0;
    bool all_equilateral = true;
    bool uniform_horizontal = true;
    bool uniform_vertical = true;
    Rational min_arm{1};
    Rational max_arm{1};
    Rational min_horizontal{1};
    Rational max_horizontal{1};
    Rational min_vertical{1};
    Rational max_vertical{1};

    bool uniform() const { return uniform_horizontal && uniform_vertical; }
    Rational overall_ratio() const { return max_arm / min_arm; }          // d
    Rational horizontal_ratio() const { return max_horizontal / min_horizontal; }  // d_x
    Rational vertical_ratio() const { return max_vertical / min_vertical; }        // d_y
};

inline InstanceStats compute_stats(const std::vector<LShape>& shapes) {
    InstanceStats st;
    st.n = shapes.size();
    bool first = true;
    for (const LShape& l : shapes) {
        const auto a = arm_lengths(l);
        if (a.horizontal == 0 || a.vertical == 0) {
            throw Error("compute_stats: degenerate shape");
        }
        if (first) {
            st.min_horizontal = st.max_horizontal = a.horizontal;
            st.min_vertical = st.max_vertical = a.vertical;
            st.min_arm = std::min(a.horizontal, a.vertical);
            st.max_arm = std::max(a.horizontal, a.vertical);
            st.all_equilateral = (a.horizontal == a.vertical);
            first = false;
            continue;
        }
        st.all_equilateral = st.all_equilateral && a.horizontal == a.vertical;
        st.uniform_horizontal = st.uniform_horizontal && a.horizontal == st.min_horizontal;
        st.uniform_vertical = st.uniform_vertical && a.vertical == st.min_vertical;
        st.min_horizontal = std::min(st.min_horizontal, a.horizontal);
        st.max_horizontal = std::max(st.max_horizontal, a.horizontal);
        st.min_vertical = std::min(st.min_vertical, a.vertical);
        st.max_vertical = std::max(st.max_vertical, a.vertical);
        st.min_arm = std::min({st.min_arm, a.horizontal, a.vertical});
        st.max_arm = std::max({st.max_arm, a.horizontal, a.vertical});
    }
    return st;
}

/// An indexed shape collection with its cached statistics.
struct Instance {
    std::vector<LShape> shapes;
    InstanceStats stats;
};

inline Instance make_instance(std::vector<LShape> shapes) {
    Instance inst;
    inst.stats = compute_stats(shapes);
    inst.shapes = std::move(shapes);
    return inst;
}

}  // namespace lmis
