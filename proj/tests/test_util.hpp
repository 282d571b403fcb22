#pragma once

#include <set>
#include <string>
#include <vector>

#include "treepack/graph.hpp"
#include "treepack/oracle.hpp"

namespace testutil {

using treepack::Edge;
using treepack::Graph;
using treepack::VertexId;

// Two triangles {0,1,2} and {3,4,5} joined by a path of `path_edges` edges
// between vertices 2 and 3; interior vertices get ids 6, 7, ...
inline Graph barbell(int path_edges) {
    std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
    VertexId prev = 2;
    int next = 6;
    for (int i = 0; i < path_edges - 1; ++i) {
        edges.push_back({prev, next});
        prev = next++;
    }
    edges.push_back({prev, 3});
    return Graph::from_edge_list(next, edges);
}

inline Graph complete(int n) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph::from_edge_list(n, edges);
}

inline Graph star(int leaves) {
    std::vector<Edge> edges;
    for (VertexId v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return Graph::from_edge_list(leaves + 1, edges);
}

inline std::vector<std::set<VertexId>> embedding_vertex_sets(
    const std::vector<treepack::TreeEmbedding>& embeddings) {
    std::vector<std::set<VertexId>> sets;
    for (const auto& e : embeddings) {
        sets.emplace_back(e.vertices.begin(), e.vertices.end());
    }
    return sets;
}

// Drops runtime_ms lines so reports can be compared for determinism.
inline std::string strip_runtimes(const std::string& report) {
    std::string out;
    std::size_t pos = 0;
    while (pos < report.size()) {
        std::size_t end = report.find('\n', pos);
        if (end == std::string::npos) end = report.size();
        std::string line = report.substr(pos, end - pos);
        if (line.rfind("runtime_ms:", 0) != 0) {
            out += line;
            out += '\n';
        }
        pos = end + 1;
    }
    return out;
}

}  // namespace testutil
