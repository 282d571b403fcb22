#include "treepack/blocks.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace treepack {

namespace {

// Hopcroft-Tarjan biconnected components (edge-stack formulation).
std::vector<std::vector<VertexId>> biconnected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, 0), low(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<VertexId>> components;
    int timer = 0;

    std::function<void(VertexId, VertexId)> dfs = [&](VertexId v, VertexId parent) {
        disc[v] = low[v] = ++timer;
        for (VertexId w : g.neighbors(v)) {
            if (w == parent) continue;
            if (disc[w] == 0) {
                edge_stack.push_back({v, w});
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::set<VertexId> members;
                    Edge top;
                    do {
                        top = edge_stack.back();
                        edge_stack.pop_back();
                        members.insert(top.first);
                        members.insert(top.second);
                    } while (top != Edge{v, w});
                    components.emplace_back(members.begin(), members.end());
                }
            } else if (disc[w] < disc[v]) {
                edge_stack.push_back({v, w});
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };

    for (VertexId v = 0; v < n; ++v) {
        if (disc[v] == 0) dfs(v, -1);
    }
    return components;
}

}  // namespace

BlockDecomposition finalize_decomposition(const Graph& g,
                                          std::vector<std::vector<VertexId>> raw_blocks,
                                          const std::vector<char>& path_pool) {
    const int n = g.vertex_count();
    std::erase_if(raw_blocks, [](const auto& b) { return b.empty(); });
    for (auto& block : raw_blocks) std::sort(block.begin(), block.end());
    std::sort(raw_blocks.begin(), raw_blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    BlockDecomposition result;
    std::vector<int> block_of(n, -1);
    for (const auto& block : raw_blocks) {
        std::vector<VertexId> members;
        for (VertexId v : block) {
            if (block_of[v] == -1) members.push_back(v);
        }
        if (members.empty()) continue;
        const int index = static_cast<int>(result.blocks.size());
        for (VertexId v : members) block_of[v] = index;
        result.blocks.push_back(std::move(members));
    }

    std::vector<char> pooled(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        pooled[v] = path_pool[v] && block_of[v] == -1;
    }

    // Group the remaining pool vertices into chains.
    std::vector<char> seen(n, 0);
    for (VertexId s = 0; s < n; ++s) {
        if (!pooled[s] || seen[s]) continue;
        std::vector<VertexId> comp;
        std::vector<VertexId> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId w : g.neighbors(v)) {
                if (pooled[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());

        InterBlockPath path;
        std::set<int> attached;
        for (VertexId v : comp) {
            for (VertexId w : g.neighbors(v)) {
                if (block_of[w] != -1) attached.insert(block_of[w]);
            }
        }
        path.attached_blocks.assign(attached.begin(), attached.end());

        // Decide whether the component is a simple chain and orient it.
        std::vector<VertexId> ends;
        bool chain = true;
        for (VertexId v : comp) {
            int inner_degree = 0;
            for (VertexId w : g.neighbors(v)) {
                if (pooled[w]) ++inner_degree;
            }
            if (inner_degree > 2) chain = false;
            if (inner_degree <= 1) ends.push_back(v);
        }
        if (comp.size() == 1) {
            path.vertices = comp;
        } else if (chain && ends.size() == 2) {
            // Walk from the end adjacent to the lowest-indexed block; fall
            // back to the smaller end id.
            auto lowest_block_at = [&](VertexId v) {
                int best = -1;
                for (VertexId w : g.neighbors(v)) {
                    if (block_of[w] != -1 && (best == -1 || block_of[w] < best)) {
                        best = block_of[w];
                    }
                }
                return best;
            };
            VertexId start = std::min(ends[0], ends[1]);
            int b0 = lowest_block_at(ends[0]);
            int b1 = lowest_block_at(ends[1]);
            if (b0 != -1 && (b1 == -1 || b0 < b1)) start = ends[0];
            if (b1 != -1 && (b0 == -1 || b1 < b0)) start = ends[1];
            std::vector<VertexId> ordered{start};
            std::vector<char> walked(n, 0);
            walked[start] = 1;
            VertexId cur = start;
            while (ordered.size() < comp.size()) {
                VertexId next = -1;
                for (VertexId w : g.neighbors(cur)) {
                    if (pooled[w] && !walked[w]) {
                        next = w;
                        break;
                    }
                }
                if (next == -1) break;
                walked[next] = 1;
                ordered.push_back(next);
                cur = next;
            }
            path.vertices = std::move(ordered);
        } else {
            path.is_simple_path = false;
            path.vertices = comp;
        }
        result.paths.push_back(std::move(path));
    }
    std::sort(result.paths.begin(), result.paths.end(),
              [](const InterBlockPath& a, const InterBlockPath& b) {
                  return *std::min_element(a.vertices.begin(), a.vertices.end()) <
                         *std::min_element(b.vertices.begin(), b.vertices.end());
              });

    for (VertexId v = 0; v < n; ++v) {
        if (block_of[v] == -1 && !pooled[v]) result.unclassified.push_back(v);
    }
    return result;
}

BlockDecomposition reference_blocks(const Graph& g) {
    if (!is_connected(g)) {
        throw std::invalid_argument("reference_blocks: input must be connected");
    }
    const int n = g.vertex_count();
    auto components = biconnected_components(g);

    std::vector<std::vector<VertexId>> raw_blocks;
    std::vector<char> in_block(n, 0);
    for (auto& comp : components) {
        if (comp.size() >= 3) {
            for (VertexId v : comp) in_block[v] = 1;
            raw_blocks.push_back(std::move(comp));
        }
    }
    std::vector<char> pool(n, 0);
    for (VertexId v = 0; v < n; ++v) pool[v] = !in_block[v];
    return finalize_decomposition(g, std::move(raw_blocks), pool);
}

}  // namespace treepack
