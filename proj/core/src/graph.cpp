#include "treepack/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace treepack {

Graph Graph::from_edge_list(int vertex_count, const std::vector<Edge>& pairs) {
    if (vertex_count < 0) {
        throw std::invalid_argument("vertex_count must be nonnegative");
    }
    std::set<Edge> dedup;
    for (const auto& [a, b] : pairs) {
        if (a == b) {
            throw std::invalid_argument("self-loop rejected: " + std::to_string(a) +
                                        "-" + std::to_string(b));
        }
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
            throw std::invalid_argument("edge endpoint out of range: " +
                                        std::to_string(a) + "-" + std::to_string(b));
        }
        dedup.insert({std::min(a, b), std::max(a, b)});
    }
    Graph g;
    g.adjacency_.assign(vertex_count, {});
    g.edges_.assign(dedup.begin(), dedup.end());
    for (const auto& [u, v] : g.edges_) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count() || u == v) return false;
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph split_vertex(const Graph& g, const VertexSplitSpec& spec) {
    const int n = g.vertex_count();
    if (spec.target < 0 || spec.target >= n) {
        throw std::invalid_argument("split target out of range");
    }
    std::set<VertexId> kept(spec.kept_neighbors.begin(), spec.kept_neighbors.end());
    std::set<VertexId> moved(spec.moved_neighbors.begin(), spec.moved_neighbors.end());
    std::set<VertexId> original(g.neighbors(spec.target).begin(),
                                g.neighbors(spec.target).end());
    std::set<VertexId> unioned = kept;
    unioned.insert(moved.begin(), moved.end());
    if (unioned != original) {
        throw std::invalid_argument("split spec: kept and moved must union to the neighbor set");
    }
    for (VertexId v : kept) {
        if (moved.count(v)) {
            throw std::invalid_argument("split spec: kept and moved must be disjoint");
        }
    }

    const VertexId fresh = n;
    bool has_bridge = false;
    for (const auto& [a, b] : spec.extra_edges) {
        if ((a == spec.target && b == fresh) || (a == fresh && b == spec.target)) {
            has_bridge = true;
        }
    }
    if (!has_bridge) {
        throw std::invalid_argument("split spec: extra_edges must include target <-> new vertex");
    }

    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        if (u == spec.target && moved.count(v)) {
            edges.push_back({fresh, v});
        } else if (v == spec.target && moved.count(u)) {
            edges.push_back({u, fresh});
        } else {
            edges.push_back({u, v});
        }
    }
    for (const auto& e : spec.extra_edges) edges.push_back(e);
    return Graph::from_edge_list(n + 1, edges);
}

Graph contract_edge(const Graph& g, VertexId kept, VertexId removed) {
    if (!g.has_edge(kept, removed)) {
        throw std::invalid_argument("contract_edge: vertices are not adjacent");
    }
    const int n = g.vertex_count();
    auto relabel = [&](VertexId v) -> VertexId {
        if (v == removed) return kept > removed ? kept - 1 : kept;
        return v > removed ? v - 1 : v;
    };
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        VertexId a = relabel(u), b = relabel(v);
        if (a == b) continue;  // the contracted edge itself, or a merged parallel
        edges.push_back({a, b});
    }
    return Graph::from_edge_list(n - 1, edges);
}

namespace {

// BFS over the graph restricted to vertices where alive[v] is true.
int count_reachable(const Graph& g, const std::vector<char>& alive, VertexId start,
                    std::vector<char>& seen) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<VertexId> queue{start};
    seen[start] = 1;
    int count = 0;
    while (!queue.empty()) {
        VertexId v = queue.back();
        queue.pop_back();
        ++count;
        for (VertexId w : g.neighbors(v)) {
            if (alive[w] && !seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return count;
}

bool connected_after_removal(const Graph& g, const std::vector<char>& alive, int alive_count) {
    if (alive_count <= 1) return true;
    const int n = g.vertex_count();
    VertexId start = -1;
    for (VertexId v = 0; v < n; ++v) {
        if (alive[v]) {
            start = v;
            break;
        }
    }
    std::vector<char> seen(n, 0);
    return count_reachable(g, alive, start, seen) == alive_count;
}

// Enumerates all subsets of {0..n-1} of the given size, invoking fn with a
// membership mask; stops early when fn returns false.
bool for_each_subset(int n, int size, const std::function<bool(const std::vector<char>&)>& fn) {
    std::vector<int> idx(size);
    std::vector<char> mask(n, 0);
    std::function<bool(int, int)> rec = [&](int pos, int from) -> bool {
        if (pos == size) return fn(mask);
        for (int v = from; v < n; ++v) {
            mask[v] = 1;
            if (!rec(pos + 1, v + 1)) return false;
            mask[v] = 0;
        }
        return true;
    };
    return rec(0, 0);
}

}  // namespace

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> alive(n, 1), seen(n, 0);
    return count_reachable(g, alive, 0, seen) == n;
}

std::vector<int> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int next = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<VertexId> queue{s};
        comp[s] = next;
        while (!queue.empty()) {
            VertexId v = queue.back();
            queue.pop_back();
            for (VertexId w : g.neighbors(v)) {
                if (comp[w] == -1) {
                    comp[w] = next;
                    queue.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

bool is_k_connected(const Graph& g, int k) {
    if (k < 1) {
        throw std::invalid_argument("is_k_connected: k must be positive");
    }
    const int n = g.vertex_count();
    if (n <= k) return false;
    if (!is_connected(g)) return false;
    std::vector<char> alive(n, 1);
    for (int size = 1; size < k; ++size) {
        bool ok = for_each_subset(n, size, [&](const std::vector<char>& mask) {
            for (int v = 0; v < n; ++v) alive[v] = !mask[v];
            return connected_after_removal(g, alive, n - size);
        });
        if (!ok) return false;
    }
    return true;
}

}  // namespace treepack
