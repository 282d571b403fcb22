#pragma once

#include <compare>
#include <vector>

#include "treepack/graph.hpp"

namespace treepack {

// The perfect binary tree with k+1 levels and 2^(k+1)-1 vertices, numbered
// in level order (children of position p are 2p+1 and 2p+2).
struct TreePattern {
    int k = 0;

    int order() const { return (1 << (k + 1)) - 1; }
    int levels() const { return k + 1; }
};

Graph pattern_graph(int k);  // k <= 4

// One subgraph of a host graph isomorphic to the pattern. `vertices` maps
// pattern positions (level order) to host ids and is kept in canonical form:
// at every internal position the left child image is smaller than the right
// child image. Two embeddings are equal iff their image edge sets are equal,
// which for canonical forms coincides with vector equality.
struct TreeEmbedding {
    int pattern_k = 0;
    std::vector<VertexId> vertices;

    int order() const { return (1 << (pattern_k + 1)) - 1; }
    std::vector<Edge> image_edges() const;

    auto operator<=>(const TreeEmbedding&) const = default;
};

// Reorders `vertices` into canonical form by swapping child subtrees.
TreeEmbedding canonicalize(TreeEmbedding e);

// All distinct subgraphs of g isomorphic to the pattern, deduplicated by
// image edge set and sorted by canonical form. Supports k in {1,2,3}.
std::vector<TreeEmbedding> enumerate_embeddings(const Graph& g, int k);

bool is_valid_embedding(const Graph& g, const TreeEmbedding& e);

}  // namespace treepack
