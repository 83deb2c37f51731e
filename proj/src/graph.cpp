#include "soltes/graph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <mutex>
#include <sstream>
#include <thread>

namespace soltes {

Graph Graph::from_edges(int order, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (order < 0) throw std::invalid_argument("graph order must be nonnegative");
    std::vector<std::vector<Vertex>> lists(order);
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order) {
            std::ostringstream msg;
            msg << "edge (" << u << "," << v << ") has an endpoint outside [0," << order << ")";
            throw std::invalid_argument(msg.str());
        }
        if (u == v) {
            std::ostringstream msg;
            msg << "edge (" << u << "," << v << ") is a self-loop";
            throw std::invalid_argument(msg.str());
        }
        lists[u].push_back(v);
        lists[v].push_back(u);
    }
    Graph g;
    g.order_ = order;
    g.offsets_.assign(1, 0);
    g.offsets_.reserve(order + 1);
    for (auto& list : lists) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g.adj_.insert(g.adj_.end(), list.begin(), list.end());
        g.offsets_.push_back(static_cast<std::int32_t>(g.adj_.size()));
    }
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (Vertex u = 0; u < order_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool DistanceRow::all_reachable() const {
    return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

DistanceRow bfs_distances(const Graph& g, Vertex source) {
    if (source < 0 || source >= g.order())
        throw std::invalid_argument("bfs source out of range");
    DistanceRow row{source, std::vector<std::int32_t>(g.order(), kUnreachable)};
    row.dist[source] = 0;
    std::vector<Vertex> queue{source};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        std::int32_t du = row.dist[u];
        for (Vertex w : g.neighbors(u)) {
            if (row.dist[w] == kUnreachable) {
                row.dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    return row;
}

std::int64_t transmission(const Graph& g, Vertex v) {
    DistanceRow row = bfs_distances(g, v);
    std::int64_t sum = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (row.dist[u] == kUnreachable) {
            std::ostringstream msg;
            msg << "graph is disconnected: vertex " << u << " unreachable from " << v;
            throw DisconnectedError(msg.str());
        }
        sum += row.dist[u];
    }
    return sum;
}

namespace {

// One 64-source batch of the level-synchronous multi-source BFS. Bit j of
// reached[v] says source (base+j) has reached v. Distances are distributed
// to per-source sums as frontiers expand.
void run_batch(const Graph& g, Vertex base, int width, std::span<std::int64_t> tr) {
    const int V = g.order();
    std::vector<std::uint64_t> reached(V, 0), frontier(V, 0), next(V, 0);
    std::vector<std::int32_t> seen(width, 1);  // each source has seen itself
    for (int j = 0; j < width; ++j) {
        reached[base + j] |= std::uint64_t{1} << j;
        frontier[base + j] |= std::uint64_t{1} << j;
    }
    std::int64_t level = 0;
    bool active = true;
    while (active) {
        ++level;
        active = false;
        for (Vertex v = 0; v < V; ++v) {
            std::uint64_t acc = 0;
            for (Vertex u : g.neighbors(v)) acc |= frontier[u];
            next[v] = acc & ~reached[v];
        }
        for (Vertex v = 0; v < V; ++v) {
            std::uint64_t fresh = next[v];
            if (!fresh) continue;
            active = true;
            reached[v] |= fresh;
            while (fresh) {
                int j = std::countr_zero(fresh);
                fresh &= fresh - 1;
                tr[base + j] += level;
                ++seen[j];
            }
        }
        frontier.swap(next);
    }
    for (int j = 0; j < width; ++j) {
        if (seen[j] == V) continue;
        // name one vertex the source never reached
        for (Vertex v = 0; v < V; ++v) {
            if (!(reached[v] >> j & 1)) {
                std::ostringstream msg;
                msg << "graph is disconnected: vertex " << v << " unreachable from "
                    << base + j;
                throw DisconnectedError(msg.str());
            }
        }
    }
    assert(std::all_of(tr.begin() + base, tr.begin() + base + width,
                       [](std::int64_t t) { return t >= 0; }));
}

int resolve_threads(int threads, int batches) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    return std::min(threads, batches);
}

}  // namespace

std::vector<std::int64_t> all_transmissions(const Graph& g, int threads) {
    const int V = g.order();
    std::vector<std::int64_t> tr(V, 0);
    if (V == 0) return tr;
    const int batches = (V + 63) / 64;
    const int workers = resolve_threads(threads, batches);

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::atomic<int> cursor{0};
    auto work = [&] {
        for (int b = cursor.fetch_add(1); b < batches; b = cursor.fetch_add(1)) {
            try {
                Vertex base = static_cast<Vertex>(b) * 64;
                run_batch(g, base, std::min(64, V - base), tr);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    return tr;
}

std::int64_t wiener(const Graph& g, int threads) {
    std::vector<std::int64_t> tr = all_transmissions(g, threads);
    std::int64_t total = 0;
    for (std::int64_t t : tr) {
        total += t;
        assert(total >= 0);
    }
    assert(total % 2 == 0);
    return total / 2;
}

Graph delete_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("delete_vertex: id out of range");
    std::vector<std::pair<Vertex, Vertex>> kept;
    kept.reserve(static_cast<std::size_t>(g.edge_count()));
    auto relabel = [v](Vertex x) { return x > v ? x - 1 : x; };
    for (const auto& [a, b] : g.edges())
        if (a != v && b != v) kept.emplace_back(relabel(a), relabel(b));
    return Graph::from_edges(g.order() - 1, kept);
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return bfs_distances(g, 0).all_reachable();
}

}  // namespace soltes
