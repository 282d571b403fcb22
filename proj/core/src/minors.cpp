#include "treepack/minors.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

bool has_cycle(const Graph& g) {
    // A graph is acyclic iff every component satisfies m_c = n_c - 1.
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int comps = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<VertexId> stack{s};
        comp[s] = comps;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(v)) {
                if (comp[w] == -1) {
                    comp[w] = comps;
                    stack.push_back(w);
                }
            }
        }
        ++comps;
    }
    return g.edge_count() > n - comps;
}

bool has_clique_subgraph(const Graph& g, int t) {
    const int n = g.vertex_count();
    std::vector<VertexId> clique;
    std::function<bool(int)> extend = [&](int from) -> bool {
        if (static_cast<int>(clique.size()) == t) return true;
        for (VertexId v = from; v < n; ++v) {
            bool ok = true;
            for (VertexId u : clique) {
                if (!g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            clique.push_back(v);
            if (extend(v + 1)) return true;
            clique.pop_back();
        }
        return false;
    };
    return extend(0);
}

struct BranchSearch {
    const Graph& g;
    int t;
    std::vector<int> label;  // -1 unassigned, 0 discard, 1..t branch set
    std::uint64_t nodes = 0;
    static constexpr std::uint64_t kNodeCap = 50'000'000;

    bool sets_feasible() const {
        const int n = g.vertex_count();
        std::vector<std::vector<VertexId>> sets(t);
        for (VertexId v = 0; v < n; ++v) {
            if (label[v] >= 1) sets[label[v] - 1].push_back(v);
        }
        for (const auto& s : sets) {
            if (s.empty()) return false;
        }
        // Each branch set must induce a connected subgraph.
        for (const auto& s : sets) {
            std::vector<char> in(n, 0), seen(n, 0);
            for (VertexId v : s) in[v] = 1;
            std::vector<VertexId> stack{s.front()};
            seen[s.front()] = 1;
            int reached = 0;
            while (!stack.empty()) {
                VertexId v = stack.back();
                stack.pop_back();
                ++reached;
                for (VertexId w : g.neighbors(v)) {
                    if (in[w] && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            if (reached != static_cast<int>(s.size())) return false;
        }
        // Every pair of branch sets must be joined by at least one edge.
        for (int a = 0; a < t; ++a) {
            for (int b = a + 1; b < t; ++b) {
                bool joined = false;
                for (VertexId u : sets[a]) {
                    for (VertexId v : sets[b]) {
                        if (g.has_edge(u, v)) {
                            joined = true;
                            break;
                        }
                    }
                    if (joined) break;
                }
                if (!joined) return false;
            }
        }
        return true;
    }

    bool assign(int idx, int used_sets) {
        if (++nodes > kNodeCap) {
            throw budget_error("clique-minor search nodes", kNodeCap);
        }
        const int n = g.vertex_count();
        if (n - idx < t - used_sets) return false;
        if (idx == n) return used_sets == t && sets_feasible();
        // Symmetry breaking: a new set may be opened only in order.
        for (int s = 0; s <= std::min(used_sets + 1, t); ++s) {
            label[idx] = s;
            if (assign(idx + 1, std::max(used_sets, s))) return true;
        }
        label[idx] = -1;
        return false;
    }
};

}  // namespace

bool has_clique_minor(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("has_clique_minor: t must be positive");
    if (t > 6) throw std::invalid_argument("has_clique_minor: only t <= 6 is supported");
    const int n = g.vertex_count();
    if (n < t) return false;
    if (t == 1) return true;
    if (t == 2) return g.edge_count() > 0;
    if (t == 3) return has_cycle(g);
    if (has_clique_subgraph(g, t)) return true;
    BranchSearch search{g, t, std::vector<int>(n, -1)};
    return search.assign(0, 0);
}

}  // namespace treepack
