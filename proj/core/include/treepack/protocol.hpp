#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "treepack/blocks.hpp"
#include "treepack/graph.hpp"

namespace treepack {

// One growing route per neighbor port. The path always starts with the
// owning vertex followed by the port neighbor.
struct PortPath {
    VertexId neighbor = -1;
    std::vector<VertexId> path;

    bool operator==(const PortPath&) const = default;
};

struct RoutingTable {
    VertexId owner = -1;
    std::vector<PortPath> port_paths;  // ordered by neighbor id

    bool operator==(const RoutingTable&) const = default;
};

// Synchronous simulation state. The x matrix is filled once the final round
// has run; x[i][j] == x[j][i] and x[i][j] <= min(deg i, deg j).
struct SimState {
    int round = 0;
    std::vector<RoutingTable> tables;
    std::vector<std::vector<int>> x_matrix;
    std::vector<std::string> limitations;  // protocol shortfalls observed
};

struct SimOptions {
    bool early_stop = false;  // stop as soon as no table changes in a round
    bool verified = false;    // cross-check the classification against reference_blocks
    std::function<void(int round, const RoutingTable&)> trace;
};

SimState initial_state(const Graph& g);

// One synchronous refresh+broadcast round. Every vertex extends each port
// path by at most one hop, taking the lexicographically smallest candidate
// whose realized route to the new vertex stays internally disjoint from the
// routes the vertex's other ports realize to it. Pure function of the
// previous state.
SimState step_round(const SimState& state, const Graph& g);

// Number of port paths of i whose vertex sequence contains j. Requires a
// completed simulation.
int independent_path_count(const SimState& state, VertexId i, VertexId j);

// Runs the full n-round protocol, fills the x matrix, classifies every
// vertex pair, coalesces overlapping tentative blocks and normalizes the
// result. Requires a connected input with n >= 2.
std::pair<BlockDecomposition, SimState> run_block_detection(const Graph& g,
                                                            const SimOptions& options = {});

}  // namespace treepack
