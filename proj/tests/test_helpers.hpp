#pragma once

// Test-only oracles, kept independent of the library paths they check.

#include <cstdint>
#include <random>
#include <vector>

#include "soltes/family.hpp"
#include "soltes/graph.hpp"

namespace soltes::testing {

/// Per-pair distance-increase sums for deleting cycle vertex 0 of an
/// HGraph, partitioned by vertex-pair class:
///   case1 - both endpoints on the broken cycle,
///   case2 - one endpoint on the broken cycle, one in the gadget copy at
///           the deleted position,
///   case3 - one endpoint on the broken cycle, one in another gadget copy,
///   other - every remaining pair (must come out zero: no shortest path
///           between such pairs runs through the deleted vertex).
struct BruteCaseSums {
    std::int64_t case1 = 0, case2 = 0, case3 = 0, other = 0;
};

inline std::vector<std::vector<std::int32_t>> apsp_rows(const Graph& g) {
    std::vector<std::vector<std::int32_t>> rows;
    rows.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v) rows.push_back(bfs_distances(g, v).dist);
    return rows;
}

inline BruteCaseSums brute_case_sums(const HGraph& h) {
    const int n = h.params.n;
    const Vertex deleted = 0;  // cycle 0, position 0
    auto before = apsp_rows(h.graph);
    // same labels, vertex 0 isolated: drop its edges instead of relabeling
    std::vector<std::pair<Vertex, Vertex>> kept;
    for (const auto& [u, v] : h.graph.edges())
        if (u != deleted && v != deleted) kept.emplace_back(u, v);
    auto after = apsp_rows(Graph::from_edges(h.graph.order(), kept));

    auto on_broken_cycle = [&](Vertex v) { return v < n && v != deleted; };
    auto in_deleted_copy = [&](Vertex v) {
        return !h.is_cycle_vertex(v) && h.position_of(v) == 0;
    };
    BruteCaseSums sums;
    for (Vertex x = 0; x < h.graph.order(); ++x) {
        if (x == deleted) continue;
        for (Vertex y = x + 1; y < h.graph.order(); ++y) {
            if (y == deleted) continue;
            std::int64_t diff = after[x][y] - before[x][y];
            bool px = on_broken_cycle(x), py = on_broken_cycle(y);
            if (px && py)
                sums.case1 += diff;
            else if ((px && in_deleted_copy(y)) || (py && in_deleted_copy(x)))
                sums.case2 += diff;
            else if ((px && !h.is_cycle_vertex(y)) || (py && !h.is_cycle_vertex(x)))
                sums.case3 += diff;
            else
                sums.other += diff < 0 ? -diff : diff;
        }
    }
    return sums;
}

/// Deterministic connected fuzz graph: a random spanning tree plus random
/// extra edges.
inline Graph random_connected_graph(std::uint32_t seed, int max_order) {
    std::mt19937 rng(seed);
    int order = std::uniform_int_distribution<int>(1, max_order)(rng);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v < order; ++v)
        edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    if (order >= 2) {
        int extra = std::uniform_int_distribution<int>(0, 2 * order)(rng);
        std::uniform_int_distribution<int> pick(0, order - 1);
        for (int i = 0; i < extra; ++i) {
            Vertex u = pick(rng), v = pick(rng);
            if (u != v) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(order, edges);
}

}  // namespace soltes::testing
