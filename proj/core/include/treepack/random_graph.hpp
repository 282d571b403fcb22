#pragma once

#include <cstdint>

#include "treepack/graph.hpp"

namespace treepack {

// Default seed for the reproducibility corpus; recorded in report headers.
inline constexpr std::uint64_t kDefaultCorpusSeed = 990001;

// Uniform connected graph with exactly n vertices and m edges, by rejection
// sampling over edge subsets. Deterministic for a fixed seed.
Graph random_connected_graph(int n, int m, std::uint64_t seed);

}  // namespace treepack
