#pragma once

#include "treepack/graph.hpp"

namespace treepack {

// True iff g has a complete-graph minor K^t, decided exactly by branching
// over branch-set assignments. Supports t <= 6; larger t is rejected.
bool has_clique_minor(const Graph& g, int t);

}  // namespace treepack
