#include "treepack/cycles.hpp"

#include <algorithm>
#include <functional>

namespace treepack {

LongestCycleResult find_longest_cycle(const Graph& g, std::uint64_t node_budget) {
    const int n = g.vertex_count();
    LongestCycleResult result;
    if (n < 3) return result;

    std::vector<char> used(n, 0);
    std::vector<VertexId> path;
    std::vector<VertexId> best;
    bool out_of_budget = false;

    // Cycles are anchored at their smallest vertex: from anchor s only
    // vertices > s may appear on the path, so each cycle is found once.
    std::function<void(VertexId, VertexId)> dfs = [&](VertexId anchor, VertexId v) {
        if (node_budget && result.nodes_expanded >= node_budget) {
            out_of_budget = true;
            return;
        }
        ++result.nodes_expanded;
        for (VertexId w : g.neighbors(v)) {
            if (out_of_budget) return;
            if (w == anchor && path.size() >= 3 && path.size() > best.size()) {
                best = path;
            }
            if (w <= anchor || used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            dfs(anchor, w);
            path.pop_back();
            used[w] = 0;
        }
    };

    for (VertexId s = 0; s < n && !out_of_budget; ++s) {
        if (static_cast<int>(best.size()) == n) break;  // Hamiltonian, cannot improve
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        path.assign(1, s);
        dfs(s, s);
    }

    result.exact = !out_of_budget;
    if (!best.empty()) {
        // Canonical orientation: the neighbor after the anchor is the smaller
        // of the two cycle neighbors.
        if (best.size() >= 3 && best.back() < best[1]) {
            std::reverse(best.begin() + 1, best.end());
        }
        CycleWitness witness;
        witness.length = static_cast<int>(best.size());
        witness.vertices = std::move(best);
        result.cycle = std::move(witness);
    }
    return result;
}

}  // namespace treepack
