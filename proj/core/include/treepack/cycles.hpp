#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treepack/graph.hpp"

namespace treepack {

struct CycleWitness {
    std::vector<VertexId> vertices;  // cyclic order, starting at the smallest id
    int length = 0;                  // edge count == vertices.size()
};

struct LongestCycleResult {
    std::optional<CycleWitness> cycle;  // empty iff the graph is acyclic
    bool exact = true;                  // false when the node budget was hit
    std::uint64_t nodes_expanded = 0;
};

// Exhaustive longest-cycle search by backtracking over simple paths, each
// cycle anchored at its smallest vertex. Deterministic: among equally long
// cycles the first one in DFS order (ascending ids) is kept. A node budget
// of 0 means unlimited.
LongestCycleResult find_longest_cycle(const Graph& g, std::uint64_t node_budget = 0);

}  // namespace treepack
