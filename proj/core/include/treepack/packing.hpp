#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "treepack/cycles.hpp"
#include "treepack/graph.hpp"
#include "treepack/oracle.hpp"

namespace treepack {

// Longest cycle with the packing policy applied: budget 0 selects exhaustive
// search for hosts of up to 20 vertices and a bounded search (with the
// exactness flag cleared on truncation) beyond that.
LongestCycleResult longest_cycle(const Graph& g, std::uint64_t node_budget = 0);

// Packs 3-vertex paths block by block: consecutive triples along the longest
// cycle of each block, then along leftover chains and inter-block paths.
// Always sound; optimal only on the structured families.
PackingSolution pack_t1(const Graph& g);

// A 7-vertex subgraph isomorphic to the elementary structure, together with
// the vertex mapping that realizes it. `literal` marks units grown from a
// 4-clique seed; the rest come from the direct subgraph search.
struct G3Unit {
    std::vector<VertexId> vertices;       // ascending
    std::array<VertexId, 7> mapping{};    // elementary-structure vertex -> host vertex
    bool literal = false;
};

// Two-phase search for vertex-disjoint elementary-structure subgraphs:
// 4-clique seeds grown by neighbor search first, then direct backtracking.
std::vector<G3Unit> find_g3_units(const Graph& g);

// Packs one 7-vertex perfect binary tree per elementary-structure unit found
// inside each block.
PackingSolution pack_t2(const Graph& g);

}  // namespace treepack
