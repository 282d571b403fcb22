#include "treepack/random_graph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace treepack {

Graph random_connected_graph(int n, int m, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_connected_graph: n must be >= 1");
    const long max_edges = static_cast<long>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_edges) {
        throw std::invalid_argument("random_connected_graph: m out of range for connectivity");
    }
    std::vector<Edge> all_pairs;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) all_pairs.push_back({u, v});
    }
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::shuffle(all_pairs.begin(), all_pairs.end(), rng);
        std::vector<Edge> chosen(all_pairs.begin(), all_pairs.begin() + m);
        Graph g = Graph::from_edge_list(n, chosen);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("random_connected_graph: no connected sample found");
}

}  // namespace treepack
