#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace soltes {

using Vertex = std::int32_t;

/// Distance value for vertices with no path from the source.
inline constexpr std::int32_t kUnreachable = -1;

class DisconnectedError : public std::runtime_error {
public:
    explicit DisconnectedError(const std::string& what) : std::runtime_error(what) {}
};

/// Immutable simple undirected graph over vertex ids 0..V-1.
///
/// Stored as CSR with sorted neighbor lists, so structurally equal graphs
/// compare equal and serialize identically. Safe to share across threads.
class Graph {
public:
    Graph() = default;

    /// Canonical construction: (u,v) and (v,u) are identified and duplicate
    /// pairs collapse. Throws std::invalid_argument naming the offending
    /// pair on self-loops or out-of-range endpoints.
    static Graph from_edges(int order, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int order() const { return order_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(adj_.size()) / 2; }
    int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    bool has_edge(Vertex u, Vertex v) const;

    /// All edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int order_ = 0;
    std::vector<std::int32_t> offsets_ = {0};
    std::vector<Vertex> adj_;
};

struct DistanceRow {
    Vertex source = 0;
    std::vector<std::int32_t> dist;

    bool all_reachable() const;
};

/// Exact unweighted shortest-path distances from one source.
DistanceRow bfs_distances(const Graph& g, Vertex source);

/// tr(v): sum of distances from v to every vertex. Throws DisconnectedError
/// naming an unreachable vertex when the graph is not connected.
std::int64_t transmission(const Graph& g, Vertex v);

/// tr(v) for every vertex at once. Uses a bit-parallel level-synchronous
/// sweep processing 64 sources per machine word; the result is exactly the
/// per-vertex transmission() values. `threads` bounds worker threads
/// (0 = hardware concurrency); the output does not depend on it.
std::vector<std::int64_t> all_transmissions(const Graph& g, int threads = 1);

/// Wiener index W(g): half the sum of all transmissions, exact.
std::int64_t wiener(const Graph& g, int threads = 1);

/// G - v: remaining vertices relabeled by order-preserving compaction
/// (ids above v shift down by one).
Graph delete_vertex(const Graph& g, Vertex v);

/// True iff g has a single connected component. Order 0 and 1 count as
/// connected.
bool is_connected(const Graph& g);

}  // namespace soltes
