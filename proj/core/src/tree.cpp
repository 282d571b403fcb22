#include "treepack/tree.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace treepack {

Graph pattern_graph(int k) {
    if (k < 0 || k > 4) {
        throw std::invalid_argument("pattern_graph: k must be in 0..4");
    }
    TreePattern pattern{k};
    const int order = pattern.order();
    std::vector<Edge> edges;
    for (int p = 0; 2 * p + 2 < order; ++p) {
        edges.push_back({p, 2 * p + 1});
        edges.push_back({p, 2 * p + 2});
    }
    return Graph::from_edge_list(order, edges);
}

std::vector<Edge> TreeEmbedding::image_edges() const {
    std::vector<Edge> edges;
    for (int p = 1; p < static_cast<int>(vertices.size()); ++p) {
        VertexId a = vertices[(p - 1) / 2];
        VertexId b = vertices[p];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

namespace {

void swap_subtrees(std::vector<VertexId>& image, int a, int b) {
    std::swap(image[a], image[b]);
    if (2 * a + 2 < static_cast<int>(image.size())) {
        swap_subtrees(image, 2 * a + 1, 2 * b + 1);
        swap_subtrees(image, 2 * a + 2, 2 * b + 2);
    }
}

}  // namespace

TreeEmbedding canonicalize(TreeEmbedding e) {
    const int order = static_cast<int>(e.vertices.size());
    for (int p = 0; 2 * p + 2 < order; ++p) {
        if (e.vertices[2 * p + 1] > e.vertices[2 * p + 2]) {
            swap_subtrees(e.vertices, 2 * p + 1, 2 * p + 2);
        }
    }
    return e;
}

std::vector<TreeEmbedding> enumerate_embeddings(const Graph& g, int k) {
    if (k < 1 || k > 3) {
        throw std::invalid_argument("enumerate_embeddings: k must be in 1..3");
    }
    const int n = g.vertex_count();
    std::vector<TreeEmbedding> result;

    if (k == 1) {
        // Every 2-edge path, keyed by its center.
        for (VertexId center = 0; center < n; ++center) {
            const auto& nbrs = g.neighbors(center);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                    result.push_back({1, {center, nbrs[i], nbrs[j]}});
                }
            }
        }
        std::sort(result.begin(), result.end());
        return result;
    }

    const int order = (1 << (k + 1)) - 1;
    if (n < order) return result;

    std::vector<VertexId> image(order, -1);
    std::vector<char> used(n, 0);

    // Positions are filled in level order; right children must exceed their
    // left sibling, so exactly the canonical representative of every
    // subgraph is generated.
    std::function<void(int)> assign = [&](int pos) {
        if (pos == order) {
            result.push_back({k, image});
            return;
        }
        const int parent = (pos - 1) / 2;
        const bool is_right = pos % 2 == 0;
        for (VertexId v : g.neighbors(image[parent])) {
            if (used[v]) continue;
            if (is_right && v < image[pos - 1]) continue;
            image[pos] = v;
            used[v] = 1;
            assign(pos + 1);
            used[v] = 0;
            image[pos] = -1;
        }
    };

    for (VertexId root = 0; root < n; ++root) {
        image[0] = root;
        used[root] = 1;
        assign(1);
        used[root] = 0;
        image[0] = -1;
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

bool is_valid_embedding(const Graph& g, const TreeEmbedding& e) {
    if (e.pattern_k < 0) return false;
    const int order = e.order();
    if (static_cast<int>(e.vertices.size()) != order) return false;
    std::set<VertexId> distinct;
    for (VertexId v : e.vertices) {
        if (v < 0 || v >= g.vertex_count()) return false;
        distinct.insert(v);
    }
    if (static_cast<int>(distinct.size()) != order) return false;
    for (int p = 1; p < order; ++p) {
        if (!g.has_edge(e.vertices[(p - 1) / 2], e.vertices[p])) return false;
    }
    for (int p = 0; 2 * p + 2 < order; ++p) {
        if (e.vertices[2 * p + 1] > e.vertices[2 * p + 2]) return false;
    }
    return true;
}

}  // namespace treepack
