#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace treepack {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;  // stored normalized u < v

// Undirected simple graph over dense vertex ids 0..n-1. Immutable after
// construction; every operation in this library is a pure function of its
// inputs, so Graph values can be shared and sent between threads freely.
class Graph {
public:
    Graph() = default;

    // Rejects out-of-range endpoints and self-loops; parallel edges are
    // deduplicated.
    static Graph from_edge_list(int vertex_count, const std::vector<Edge>& pairs);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }
    bool has_edge(VertexId u, VertexId v) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<Edge> edges_;                       // sorted ascending, u < v
    std::vector<std::vector<VertexId>> adjacency_;  // sorted neighbor lists
};

// Anti-contraction of one vertex into two adjacent vertices. `target` keeps
// `kept_neighbors`, the new vertex (id = old n) adopts `moved_neighbors`;
// kept and moved must partition the original neighbor set. `extra_edges`
// must contain the edge target <-> new vertex.
struct VertexSplitSpec {
    VertexId target = 0;
    std::vector<VertexId> kept_neighbors;
    std::vector<VertexId> moved_neighbors;
    std::vector<Edge> extra_edges;
};

Graph split_vertex(const Graph& g, const VertexSplitSpec& spec);

// Inverse of split_vertex: merges `removed` into `kept` (the two must be
// adjacent) and compacts ids above `removed` downward by one.
Graph contract_edge(const Graph& g, VertexId kept, VertexId removed);

bool is_connected(const Graph& g);

// Component label per vertex, numbered by smallest contained vertex order.
std::vector<int> connected_components(const Graph& g);

// Exact k-connectivity: |V| > k and no vertex set of size < k disconnects g,
// decided by exhaustive cut enumeration. Desk scale (n <= ~40).
bool is_k_connected(const Graph& g, int k);

}  // namespace treepack
