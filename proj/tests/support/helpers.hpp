#pragma once

// Test-only oracles, deliberately independent of the library's solve path:
// subset enumeration for MIS and LIS, and a rasterized point-set
// intersection check for integer coordinates.

#include "lmis/generator.hpp"
#include "lmis/geometry.hpp"
#include "lmis/oracle.hpp"
#include "lmis/perm_mis.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace testsupport {

// Exhaustive maximum independent set size over all 2^n subsets, n <= 20.
inline std::size_t exhaustive_mis_size(const std::vector<lmis::LShape>& shapes) {
    const std::size_t n = shapes.size();
    if (n > 20) {
        throw std::logic_error("exhaustive_mis_size: too large");
    }
    std::vector<std::uint32_t> conflict(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u != v && lmis::intersects(shapes[u], shapes[v])) {
                conflict[u] |= std::uint32_t{1} << v;
            }
        }
    }
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        bool ok = true;
        for (std::uint32_t scan = mask; scan != 0 && ok;) {
            const int v = std::countr_zero(scan);
            scan &= scan - 1;
            ok = (conflict[v] & mask) == 0;
        }
        if (ok) {
            best = std::max(best, static_cast<std::size_t>(std::popcount(mask)));
        }
    }
    return best;
}

inline std::size_t exhaustive_mis_size(const lmis::ConflictGraph& g) {
    const std::size_t n = g.size;
    if (n > 20) {
        throw std::logic_error("exhaustive_mis_size: too large");
    }
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u) {
            if (!(mask & (std::uint32_t{1} << u))) continue;
            for (std::size_t v = u + 1; v < n && ok; ++v) {
                if ((mask & (std::uint32_t{1} << v)) && g.adjacent(u, v)) {
                    ok = false;
                }
            }
        }
        if (ok) {
            best = std::max(best, static_cast<std::size_t>(std::popcount(mask)));
        }
    }
    return best;
}

// Longest strictly increasing subsequence length over all subsequences.
inline std::size_t exhaustive_lis_length(const std::vector<int>& v) {
    const std::size_t m = v.size();
    if (m > 16) {
        throw std::logic_error("exhaustive_lis_length: too large");
    }
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        int last = 0;
        bool first = true;
        bool ok = true;
        for (std::size_t p = 0; p < m && ok; ++p) {
            if (!(mask & (std::uint32_t{1} << p))) continue;
            if (!first && v[p] <= last) {
                ok = false;
            }
            last = v[p];
            first = false;
        }
        if (ok) {
            best = std::max(best, static_cast<std::size_t>(std::popcount(mask)));
        }
    }
    return best;
}

// Point-set intersection at unit resolution; valid for integer
// coordinates because two integer axis-aligned segments that meet at all
// meet in an integer point.
inline std::set<std::pair<long long, long long>> raster_points(const lmis::LShape& l) {
    const auto as_int = [](const lmis::Rational& r) {
        if (denominator(r) != 1) {
            throw std::logic_error("raster_points: non-integer coordinate");
        }
        return numerator(r).convert_to<long long>();
    };
    const long long cx = as_int(l.corner_x);
    const long long cy = as_int(l.corner_y);
    const long long hx = as_int(l.htip_x);
    const long long vy = as_int(l.vtip_y);
    std::set<std::pair<long long, long long>> pts;
    for (long long x = std::min(cx, hx); x <= std::max(cx, hx); ++x) {
        pts.emplace(x, cy);
    }
    for (long long y = std::min(cy, vy); y <= std::max(cy, vy); ++y) {
        pts.emplace(cx, y);
    }
    return pts;
}

inline bool rasterized_intersects(const lmis::LShape& a, const lmis::LShape& b) {
    const auto pa = raster_points(a);
    for (const auto& p : raster_points(b)) {
        if (pa.count(p)) {
            return true;
        }
    }
    return false;
}

// Random crossing family: every shape crosses x = line_x and y = line_y.
// With general_position set, corner coordinates are pairwise distinct in
// each axis; otherwise ties are allowed (and likely).
inline lmis::CrossingFamily random_crossing_family(lmis::SplitMix64& rng, std::size_t m,
                                                   bool general_position) {
    using lmis::Rational;
    lmis::CrossingFamily fam;
    fam.line_x = Rational(lmis::BigInt(rng.next_below(41)), 2);
    fam.line_y = Rational(lmis::BigInt(rng.next_below(41)), 2);
    std::set<Rational> used_x, used_y;
    const auto draw_offset = [&](std::set<Rational>& used, bool distinct) {
        for (;;) {
            const Rational off(lmis::BigInt(rng.next_below(81)), 4);  // 0 .. 20 in steps of 1/4
            if (!distinct || used.insert(off).second) {
                return off;
            }
        }
    };
    for (std::size_t i = 0; i < m; ++i) {
        const Rational left = draw_offset(used_x, general_position);
        const Rational down = draw_offset(used_y, general_position);
        Rational right(lmis::BigInt(rng.next_below(80) + 1), 4);  // 1/4 .. 20
        Rational up(lmis::BigInt(rng.next_below(80) + 1), 4);
        lmis::LShape l;
        l.corner_x = fam.line_x - left;
        l.corner_y = fam.line_y - down;
        l.htip_x = fam.line_x + right;
        l.vtip_y = fam.line_y + up;
        fam.shapes.push_back(std::move(l));
    }
    return fam;
}

inline lmis::Instance random_instance(std::uint64_t seed, std::size_t n, lmis::GenMode mode,
                                      int coord_max = 40, int length_max = 16) {
    lmis::GenConfig cfg;
    cfg.n = n;
    cfg.seed = seed;
    cfg.mode = mode;
    cfg.length_min = 2;
    cfg.length_max = length_max;
    cfg.coord_min = 0;
    cfg.coord_max = coord_max;
    return lmis::make_instance(lmis::generate(cfg));
}

}  // namespace testsupport
