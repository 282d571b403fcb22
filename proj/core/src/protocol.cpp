#include "treepack/protocol.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace treepack {

namespace {

// The route a port path realizes to a vertex it contains is the prefix up to
// that vertex. Two port paths of the same owner may share a vertex only when
// the realized routes to it meet nowhere else; that keeps every count in the
// x matrix backed by genuinely internally disjoint paths.
bool extension_compatible(const std::vector<VertexId>& candidate_prefix_internals,
                          VertexId candidate, const PortPath& other) {
    auto where = std::find(other.path.begin(), other.path.end(), candidate);
    if (where == other.path.end()) return true;
    for (auto it = other.path.begin() + 1; it != where; ++it) {
        if (std::find(candidate_prefix_internals.begin(), candidate_prefix_internals.end(),
                      *it) != candidate_prefix_internals.end()) {
            return false;
        }
    }
    return true;
}

void fill_x_matrix(SimState& state) {
    const int n = static_cast<int>(state.tables.size());
    std::vector<std::vector<int>> directional(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (const PortPath& port : state.tables[i].port_paths) {
            for (std::size_t idx = 1; idx < port.path.size(); ++idx) {
                ++directional[i][port.path[idx]];
            }
        }
    }
    state.x_matrix.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            state.x_matrix[i][j] = std::max(directional[i][j], directional[j][i]);
        }
    }
}

}  // namespace

SimState initial_state(const Graph& g) {
    SimState state;
    const int n = g.vertex_count();
    state.tables.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        state.tables[v].owner = v;
        for (VertexId w : g.neighbors(v)) {
            state.tables[v].port_paths.push_back({w, {}});
        }
    }
    return state;
}

SimState step_round(const SimState& state, const Graph& g) {
    const int n = g.vertex_count();
    if (state.round >= n) {
        throw std::logic_error("step_round: round budget exhausted");
    }
    SimState next = state;
    next.round = state.round + 1;

    if (state.round == 0) {
        // Round 1: one single-hop path per port.
        for (VertexId v = 0; v < n; ++v) {
            for (PortPath& port : next.tables[v].port_paths) {
                port.path = {v, port.neighbor};
            }
        }
    } else {
        for (VertexId v = 0; v < n; ++v) {
            RoutingTable& table = next.tables[v];
            for (std::size_t p = 0; p < table.port_paths.size(); ++p) {
                PortPath& port = table.port_paths[p];
                if (port.path.empty()) continue;
                const VertexId tail = port.path.back();
                // Candidate hops come from the tail vertex's last-broadcast
                // table: the first hop of each of its port paths.
                std::vector<VertexId> prefix_internals(port.path.begin() + 1,
                                                       port.path.end());
                for (const PortPath& offered : state.tables[tail].port_paths) {
                    const VertexId candidate = offered.neighbor;
                    if (std::find(port.path.begin(), port.path.end(), candidate) !=
                        port.path.end()) {
                        continue;
                    }
                    bool ok = true;
                    for (std::size_t q = 0; q < table.port_paths.size(); ++q) {
                        if (q == p) continue;
                        if (!extension_compatible(prefix_internals, candidate,
                                                  table.port_paths[q])) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) {
                        port.path.push_back(candidate);
                        break;
                    }
                }
            }
        }
    }

    if (next.round == n) fill_x_matrix(next);
    return next;
}

int independent_path_count(const SimState& state, VertexId i, VertexId j) {
    const int n = static_cast<int>(state.tables.size());
    if (state.round < n) {
        throw std::logic_error("independent_path_count: simulation not finished");
    }
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
        throw std::invalid_argument("independent_path_count: bad vertex pair");
    }
    int count = 0;
    for (const PortPath& port : state.tables[i].port_paths) {
        if (std::find(port.path.begin() + (port.path.empty() ? 0 : 1), port.path.end(),
                      j) != port.path.end()) {
            ++count;
        }
    }
    return count;
}

std::pair<BlockDecomposition, SimState> run_block_detection(const Graph& g,
                                                            const SimOptions& options) {
    const int n = g.vertex_count();
    if (n < 2) {
        throw std::invalid_argument("run_block_detection: need at least two vertices");
    }
    if (!is_connected(g)) {
        throw std::invalid_argument("run_block_detection: input must be connected");
    }

    SimState state = initial_state(g);
    while (state.round < n) {
        SimState next = step_round(state, g);
        if (options.trace) {
            for (const RoutingTable& table : next.tables) {
                options.trace(next.round, table);
            }
        }
        const bool unchanged = next.tables == state.tables;
        state = std::move(next);
        if (options.early_stop && unchanged) {
            state.round = n;
            fill_x_matrix(state);
            break;
        }
    }
    if (state.x_matrix.empty()) fill_x_matrix(state);

    // Classification rule chain over ordered pairs i < j. "Undo" rules are
    // no-ops; pairs matching no rule leave both vertices untouched.
    std::map<int, std::set<VertexId>> tentative;  // pivot vertex -> members
    std::vector<char> pool(n, 0);
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            const int x = state.x_matrix[i][j];
            const int di = g.degree(i);
            const int dj = g.degree(j);
            if (x == 0) continue;
            if (x == 1 && di == 2 && dj == 1) continue;
            if (x == 1 && di > 2 && dj <= 2) {
                tentative[i].insert(i);
            } else if (x == 1 && di > 2 && dj > 2) {
                tentative[i].insert(i);
                tentative[j].insert(j);
            } else if (x > 1) {
                tentative[i].insert(i);
                tentative[i].insert(j);
            } else if (x == 1 && di == 2 && dj == 2) {
                pool[i] = 1;
                pool[j] = 1;
            }
        }
    }

    // Coalesce tentative blocks that share a vertex.
    std::vector<int> pivots;
    for (const auto& [pivot, members] : tentative) pivots.push_back(pivot);
    std::map<int, int> pivot_index;
    for (std::size_t i = 0; i < pivots.size(); ++i) pivot_index[pivots[i]] = static_cast<int>(i);
    std::vector<int> parent(pivots.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::vector<int> seen_in(n, -1);
    for (const auto& [pivot, members] : tentative) {
        const int pi = pivot_index[pivot];
        for (VertexId v : members) {
            if (seen_in[v] == -1) {
                seen_in[v] = pi;
            } else {
                parent[find(pi)] = find(seen_in[v]);
            }
        }
    }
    std::map<int, std::set<VertexId>> merged;
    for (const auto& [pivot, members] : tentative) {
        auto& target = merged[find(pivot_index[pivot])];
        target.insert(members.begin(), members.end());
    }
    std::vector<std::vector<VertexId>> raw_blocks;
    for (const auto& [root, members] : merged) {
        raw_blocks.emplace_back(members.begin(), members.end());
    }

    BlockDecomposition decomposition = finalize_decomposition(g, std::move(raw_blocks), pool);

    if (!decomposition.unclassified.empty()) {
        std::string record = "unclassified vertices:";
        for (VertexId v : decomposition.unclassified) record += " " + std::to_string(v);
        state.limitations.push_back(record);
    }
    if (options.verified) {
        BlockDecomposition reference = reference_blocks(g);
        if (reference.blocks != decomposition.blocks) {
            state.limitations.push_back("block partition disagrees with the reference oracle");
        }
        if (n <= 40 && is_k_connected(g, 2)) {
            for (VertexId i = 0; i < n; ++i) {
                for (VertexId j = i + 1; j < n; ++j) {
                    if (state.x_matrix[i][j] < 2) {
                        state.limitations.push_back(
                            "2-connected input but x[" + std::to_string(i) + "][" +
                            std::to_string(j) + "] = " +
                            std::to_string(state.x_matrix[i][j]));
                    }
                }
            }
        }
    }
    return {std::move(decomposition), std::move(state)};
}

}  // namespace treepack
