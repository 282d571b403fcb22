#pragma once

#include <vector>

#include "treepack/graph.hpp"

namespace treepack {

// One maximal chain of vertices lying between blocks (or dangling off one).
// `attached_blocks` lists the indices of adjacent blocks, ascending; -1 never
// appears, a dangling chain simply has fewer than two entries.
struct InterBlockPath {
    std::vector<int> attached_blocks;
    std::vector<VertexId> vertices;  // ordered along the chain when it is one
    bool is_simple_path = true;

    bool operator==(const InterBlockPath&) const = default;
};

// Blocks are pairwise disjoint vertex sets, numbered ascending by smallest
// member; path vertices belong to no block. `unclassified` is only ever
// populated by the protocol simulation, which can leave vertices untouched
// by every classification rule.
struct BlockDecomposition {
    std::vector<std::vector<VertexId>> blocks;
    std::vector<InterBlockPath> paths;
    std::vector<VertexId> unclassified;

    bool operator==(const BlockDecomposition&) const = default;
};

// Classical articulation-point decomposition used as the ground truth:
// biconnected components with >= 3 vertices become blocks, everything else
// becomes inter-block path vertices. Requires a connected input.
BlockDecomposition reference_blocks(const Graph& g);

// Shared normalization: orders blocks by smallest member, deduplicates
// overlapping membership in favor of the earlier block, groups the remaining
// pool vertices into chains and attaches them to adjacent blocks.
BlockDecomposition finalize_decomposition(const Graph& g,
                                          std::vector<std::vector<VertexId>> raw_blocks,
                                          const std::vector<char>& path_pool);

}  // namespace treepack
