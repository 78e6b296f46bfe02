#pragma once

#include "lmis/geometry.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace lmis {

/// Intersection graph of a shape list as a symmetric boolean matrix.
struct ConflictGraph {
    std::size_t size = 0;
    std::vector<std::vector<bool>> adj;

    bool adjacent(std::size_t u, std::size_t v) const { return adj[u][v]; }
};

inline ConflictGraph build_conflict_graph(const std::vector<LShape>& shapes) {
    ConflictGraph g;
    g.size = shapes.size();
    g.adj.assign(g.size, std::vector<bool>(g.size, false));
    for (std::size_t u = 0; u < g.size; ++u) {
        for (std::size_t v = u + 1; v < g.size; ++v) {
            const bool hit = intersects(shapes[u], shapes[v]);
            g.adj[u][v] = hit;
            g.adj[v][u] = hit;
        }
    }
    return g;
}

/// Exact maximum independent set by branch and bound over bitmask state.
/// Branches on the highest-degree remaining vertex (smallest index on
/// ties), include-first, pruning when the remaining vertices cannot beat
/// the incumbent; the first optimum encountered is kept, so the output is
/// reproducible. Refuses instances above `cap` (desk-scale certification
/// only) and anything beyond the 64-vertex mask width.
inline std::vector<std::size_t> brute_force_mis(const ConflictGraph& g, std::size_t cap = 30) {
    if (g.size > cap) {
        throw Error("brute_force_mis: instance has " + std::to_string(g.size) +
                    " shapes, above the cap of " + std::to_string(cap));
    }
    if (g.size > 64) {
        throw Error("brute_force_mis: at most 64 shapes supported");
    }
    const int n = static_cast<int>(g.size);
    std::vector<std::uint64_t> nbr(g.size, 0);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (v != u && g.adj[u][v]) {
                nbr[u] |= std::uint64_t{1} << v;
            }
        }
    }

    std::uint64_t best_mask = 0;
    int best_count = 0;
    const auto recurse = [&](auto&& self, std::uint64_t rem, std::uint64_t cur, int count) -> void {
        if (count + std::popcount(rem) <= best_count) {
            return;
        }
        if (rem == 0) {
            best_mask = cur;
            best_count = count;
            return;
        }
        int pick = -1;
        int pick_deg = -1;
        for (std::uint64_t scan = rem; scan != 0;) {
            const int v = std::countr_zero(scan);
            scan &= scan - 1;
            const int deg = std::popcount(nbr[v] & rem);
            if (deg > pick_deg) {
                pick_deg = deg;
                pick = v;
            }
        }
        if (pick_deg == 0) {
            best_mask = cur | rem;
            best_count = count + std::popcount(rem);
            return;
        }
        const std::uint64_t bit = std::uint64_t{1} << pick;
        self(self, rem & ~(nbr[pick] | bit), cur | bit, count + 1);
        self(self, rem & ~bit, cur, count);
    };
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    recurse(recurse, full, 0, 0);

    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(best_count));
    for (int v = 0; v < n; ++v) {
        if (best_mask & (std::uint64_t{1} << v)) {
            out.push_back(static_cast<std::size_t>(v));
        }
    }
    return out;
}

/// First intersecting pair among the listed shapes, scanning pairs in
/// list order, or nullopt when the selection is independent. Indices must
/// be in range.
inline std::optional<std::pair<std::size_t, std::size_t>> find_violation(
    const std::vector<LShape>& shapes, const std::vector<std::size_t>& indices) {
    for (std::size_t i : indices) {
        if (i >= shapes.size()) {
            throw Error("find_violation: index " + std::to_string(i) + " out of range");
        }
    }
    for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = a + 1; b < indices.size(); ++b) {
            if (indices[a] == indices[b] || intersects(shapes[indices[a]], shapes[indices[b]])) {
                return std::make_pair(indices[a], indices[b]);
            }
        }
    }
    return std::nullopt;
}

inline bool verify_independent(const std::vector<LShape>& shapes,
                               const std::vector<std::size_t>& indices) {
    return !find_violation(shapes, indices).has_value();
}

}  // namespace lmis
