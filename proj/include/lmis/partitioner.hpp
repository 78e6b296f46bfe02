#pragma once

#include "lmis/geometry.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <vector>

namespace lmis {

enum class ScaleMode { Equilateral, General };

/// A shape list after normalization: coordinates are scaled per axis so
/// the shortest arm has length exactly 2, then translated so the minimum
/// corner is at the origin. Positive per-axis scaling plus translation
/// leaves the intersection graph unchanged. original_indices maps each
/// position back to the caller's indexing.
struct ScaledInstance {
    std::vector<LShape> shapes;
    Rational scale_x{1};
    Rational scale_y{1};
    Rational offset_x{0};  // applied after scaling: x' = scale_x * x + offset_x
    Rational offset_y{0};
    std::vector<std::size_t> original_indices;
};

/// Grid cell holding a shape's corner; cells are half-open, so a corner
/// on the top or right boundary of a cell belongs to the neighbor.
struct BoxIndex {
    std::int64_t row = 0;
    std::int64_t col = 0;
    auto operator<=>(const BoxIndex&) const = default;
};

/// One residue class of the grid partition: length bucket(s), the box
/// row/column residues, and the modulus that produced them.
struct ClassKey {
    int bucket_x = 0;  // horizontal-length bucket, cell width 2^bucket_x (0 marks the single uniform bucket)
    int bucket_y = 0;  // vertical-length bucket; equals bucket_x in equilateral mode
    int row_residue = 0;
    int col_residue = 0;
    int modulus = 3;
    auto operator<=>(const ClassKey&) const = default;
};

inline ScaledInstance rescale(const std::vector<LShape>& shapes, ScaleMode mode,
                              std::vector<std::size_t> original_indices = {}) {
    if (shapes.empty()) {
        throw Error("rescale: empty instance");
    }
    if (original_indices.empty()) {
        original_indices.resize(shapes.size());
        std::iota(original_indices.begin(), original_indices.end(), std::size_t{0});
    } else if (original_indices.size() != shapes.size()) {
        throw Error("rescale: index map size mismatch");
    }

    Rational min_h, min_v;
    bool first = true;
    for (const LShape& l : shapes) {
        const auto a = arm_lengths(l);
        if (a.horizontal == 0 || a.vertical == 0) {
            throw Error("rescale: degenerate shape");
        }
        if (mode == ScaleMode::Equilateral && a.horizontal != a.vertical) {
            throw Error("rescale: non-equilateral shape in equilateral mode");
        }
        if (first) {
            min_h = a.horizontal;
            min_v = a.vertical;
            first = false;
        } else {
            min_h = std::min(min_h, a.horizontal);
            min_v = std::min(min_v, a.vertical);
        }
    }

    ScaledInstance out;
    if (mode == ScaleMode::Equilateral) {
        out.scale_x = out.scale_y = Rational(2) / min_h;
    } else {
        out.scale_x = Rational(2) / min_h;
        out.scale_y = Rational(2) / min_v;
    }

    out.shapes.reserve(shapes.size());
    for (const LShape& l : shapes) {
        out.shapes.push_back(scaled(l, out.scale_x, out.scale_y));
    }
    Rational min_x = out.shapes.front().corner_x;
    Rational min_y = out.shapes.front().corner_y;
    for (const LShape& l : out.shapes) {
        min_x = std::min(min_x, l.corner_x);
        min_y = std::min(min_y, l.corner_y);
    }
    out.offset_x = -min_x;
    out.offset_y = -min_y;
    for (LShape& l : out.shapes) {
        l = translated(l, out.offset_x, out.offset_y);
    }
    out.original_indices = std::move(original_indices);
    return out;
}

/// Dyadic length bucket: the unique i >= 1 with 2^i <= len < 2^(i+1).
/// Requires len >= 2, which rescaling guarantees.
inline int length_bucket(const Rational& len) {
    if (len < 2) {
        throw Error("length_bucket: length below 2");
    }
    return floor_log2(len);
}

/// Number of dyadic buckets an instance with max/min arm ratio `ratio`
/// can occupy after rescaling: floor(log2(2 * ratio)), at least 1.
inline int bucket_span(const Rational& ratio) {
    if (ratio < 1) {
        throw Error("bucket_span: ratio must be >= 1");
    }
    return std::max(1, floor_log2(2 * ratio));
}

inline BoxIndex box_index(const LShape& l, const Rational& cell_w, const Rational& cell_h) {
    if (cell_w <= 0 || cell_h <= 0) {
        throw Error("box_index: cell dimensions must be positive");
    }
    const BigInt col = floor_to_int(l.corner_x / cell_w);
    const BigInt row = floor_to_int(l.corner_y / cell_h);
    constexpr std::int64_t lim = std::numeric_limits<std::int64_t>::max();
    if (abs(col) > lim / 2 || abs(row) > lim / 2) {
        throw Error("box_index: grid coordinate out of range");
    }
    return BoxIndex{row.convert_to<std::int64_t>(), col.convert_to<std::int64_t>()};
}

namespace detail {

inline int residue(std::int64_t v, int modulus) {
    const auto m = static_cast<std::int64_t>(modulus);
    return static_cast<int>(((v % m) + m) % m);
}

}  // namespace detail

/// Splits a rescaled all-L1 instance into residue classes. Modulus 3
/// pairs each shape's dyadic length bucket(s) with its box residues on
/// the 2^i x 2^j grid; modulus 2 requires uniform arm lengths and uses a
/// single grid whose cells are exactly the common arm lengths. Each shape
/// lands in exactly one class, and two same-class shapes from different
/// boxes can never intersect.
inline std::map<ClassKey, std::vector<std::size_t>> partition(const ScaledInstance& inst,
                                                              ScaleMode mode, int modulus) {
    if (modulus != 2 && modulus != 3) {
        throw Error("partition: modulus must be 2 or 3");
    }
    std::map<ClassKey, std::vector<std::size_t>> classes;

    if (modulus == 2) {
        Rational cell_w, cell_h;
        for (std::size_t i = 0; i < inst.shapes.size(); ++i) {
            const auto a = arm_lengths(inst.shapes[i]);
            if (i == 0) {
                cell_w = a.horizontal;
                cell_h = a.vertical;
            } else if (a.horizontal != cell_w || a.vertical != cell_h) {
                throw Error("partition: modulus 2 requires uniform arm lengths");
            }
        }
        for (std::size_t i = 0; i < inst.shapes.size(); ++i) {
            const LShape& l = inst.shapes[i];
            if (classify(l) != ShapeClass::L1) {
                throw Error("partition: shape is not of class L1");
            }
            const BoxIndex box = box_index(l, cell_w, cell_h);
            const ClassKey key{0, 0, detail::residue(box.row, 2), detail::residue(box.col, 2), 2};
            classes[key].push_back(i);
        }
        return classes;
    }

    for (std::size_t i = 0; i < inst.shapes.size(); ++i) {
        const LShape& l = inst.shapes[i];
        if (classify(l) != ShapeClass::L1) {
            throw Error("partition: shape is not of class L1");
        }
        const auto a = arm_lengths(l);
        int bx = 0;
        int by = 0;
        if (mode == ScaleMode::Equilateral) {
            if (a.horizontal != a.vertical) {
                throw Error("partition: non-equilateral shape in equilateral mode");
            }
            bx = by = length_bucket(a.horizontal);
        } else {
            bx = length_bucket(a.horizontal);
            by = length_bucket(a.vertical);
        }
        const BoxIndex box = box_index(l, pow2(bx), pow2(by));
        const ClassKey key{bx, by, detail::residue(box.row, 3), detail::residue(box.col, 3), 3};
        classes[key].push_back(i);
    }
    return classes;
}

}  // namespace lmis
