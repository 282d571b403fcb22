#include "treepack/packing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "treepack/families.hpp"
#include "treepack/protocol.hpp"
#include "treepack/tree.hpp"

namespace treepack {

namespace {

constexpr std::uint64_t kBoundedCycleBudget = 2'000'000;

// Induced subgraph plus the local-to-global vertex map.
std::pair<Graph, std::vector<VertexId>> induced_subgraph(const Graph& g,
                                                         std::vector<VertexId> vertices) {
    std::sort(vertices.begin(), vertices.end());
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        local[vertices[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        if (local[u] != -1 && local[v] != -1) {
            edges.push_back({local[u], local[v]});
        }
    }
    return {Graph::from_edge_list(static_cast<int>(vertices.size()), edges), vertices};
}

TreeEmbedding triple_embedding(VertexId a, VertexId center, VertexId b) {
    return canonicalize({1, {center, a, b}});
}

// Appends the consecutive-triple grouping of `chain` (already oriented) to
// the solution, honoring the global used set.
void pack_chain(const std::vector<VertexId>& chain, std::vector<char>& used,
                std::vector<TreeEmbedding>& out) {
    for (std::size_t i = 0; i + 2 < chain.size(); i += 3) {
        VertexId a = chain[i], b = chain[i + 1], c = chain[i + 2];
        if (used[a] || used[b] || used[c]) continue;
        used[a] = used[b] = used[c] = 1;
        out.push_back(triple_embedding(a, b, c));
    }
}

// Greedy disjoint 2-edge paths among `allowed` vertices, canonical order.
void pack_greedy_t1(const Graph& g, const std::vector<VertexId>& allowed,
                    std::vector<char>& used, std::vector<TreeEmbedding>& out) {
    auto [sub, to_global] = induced_subgraph(g, allowed);
    for (const TreeEmbedding& e : enumerate_embeddings(sub, 1)) {
        VertexId center = to_global[e.vertices[0]];
        VertexId a = to_global[e.vertices[1]];
        VertexId b = to_global[e.vertices[2]];
        if (used[center] || used[a] || used[b]) continue;
        used[center] = used[a] = used[b] = 1;
        out.push_back(triple_embedding(a, center, b));
    }
}

std::vector<std::vector<VertexId>> component_vertex_sets(const Graph& g) {
    auto comp = connected_components(g);
    int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::vector<VertexId>> sets(count);
    for (VertexId v = 0; v < g.vertex_count(); ++v) sets[comp[v]].push_back(v);
    return sets;
}

}  // namespace

LongestCycleResult longest_cycle(const Graph& g, std::uint64_t node_budget) {
    if (node_budget == 0 && g.vertex_count() > 20) {
        node_budget = kBoundedCycleBudget;
    }
    return find_longest_cycle(g, node_budget);
}

PackingSolution pack_t1(const Graph& g) {
    PackingSolution solution;
    std::vector<char> used(g.vertex_count(), 0);

    for (const auto& comp_vertices : component_vertex_sets(g)) {
        if (comp_vertices.size() < 3) continue;
        auto [comp, to_global] = induced_subgraph(g, comp_vertices);
        auto [decomposition, state] = run_block_detection(comp);

        for (const auto& block : decomposition.blocks) {
            auto [block_graph, block_to_comp] = induced_subgraph(comp, block);
            auto cycle = longest_cycle(block_graph);
            std::vector<char> on_cycle(comp.vertex_count(), 0);
            if (cycle.cycle) {
                std::vector<VertexId> chain;
                for (VertexId v : cycle.cycle->vertices) {
                    chain.push_back(to_global[block_to_comp[v]]);
                    on_cycle[block_to_comp[v]] = 1;
                }
                pack_chain(chain, used, solution.embeddings);
            }

            // Leftover structures inside the block, one component at a time.
            std::vector<VertexId> rest;
            for (VertexId v : block) {
                if (!on_cycle[v]) rest.push_back(v);
            }
            if (rest.empty()) continue;
            auto [rest_graph, rest_to_comp] = induced_subgraph(comp, rest);
            for (const auto& part : component_vertex_sets(rest_graph)) {
                std::vector<VertexId> part_comp_ids;
                for (VertexId v : part) part_comp_ids.push_back(rest_to_comp[v]);

                // A chain is packed by consecutive triples from the end
                // nearest the cycle; anything else is packed greedily.
                std::vector<VertexId> ends;
                bool chain_like = true;
                for (VertexId v : part) {
                    int inner = 0;
                    for (VertexId w : rest_graph.neighbors(v)) {
                        if (std::binary_search(part.begin(), part.end(), w)) ++inner;
                    }
                    if (inner > 2) chain_like = false;
                    if (inner <= 1) ends.push_back(v);
                }
                if (chain_like && (part.size() == 1 || ends.size() == 2)) {
                    VertexId start = part.front();
                    if (part.size() > 1) {
                        auto attaches = [&](VertexId local) {
                            for (VertexId w : comp.neighbors(rest_to_comp[local])) {
                                if (on_cycle[w]) return true;
                            }
                            return false;
                        };
                        bool a0 = attaches(ends[0]), a1 = attaches(ends[1]);
                        start = std::min(ends[0], ends[1]);
                        if (a0 && !a1) start = ends[0];
                        if (a1 && !a0) start = ends[1];
                    }
                    std::vector<VertexId> ordered{start};
                    std::set<VertexId> walked{start};
                    VertexId cur = start;
                    while (ordered.size() < part.size()) {
                        VertexId next = -1;
                        for (VertexId w : rest_graph.neighbors(cur)) {
                            if (std::binary_search(part.begin(), part.end(), w) &&
                                !walked.count(w)) {
                                next = w;
                                break;
                            }
                        }
                        if (next == -1) break;
                        walked.insert(next);
                        ordered.push_back(next);
                        cur = next;
                    }
                    std::vector<VertexId> global_chain;
                    for (VertexId v : ordered) global_chain.push_back(to_global[rest_to_comp[v]]);
                    pack_chain(global_chain, used, solution.embeddings);
                } else {
                    std::vector<VertexId> global_part;
                    for (VertexId v : part_comp_ids) global_part.push_back(to_global[v]);
                    pack_greedy_t1(g, global_part, used, solution.embeddings);
                }
            }
        }

        for (const auto& path : decomposition.paths) {
            if (path.vertices.size() < 3) continue;
            if (path.is_simple_path) {
                std::vector<VertexId> chain;
                for (VertexId v : path.vertices) chain.push_back(to_global[v]);
                pack_chain(chain, used, solution.embeddings);
            } else {
                std::vector<VertexId> global_part;
                for (VertexId v : path.vertices) global_part.push_back(to_global[v]);
                pack_greedy_t1(g, global_part, used, solution.embeddings);
            }
        }
    }

    std::sort(solution.embeddings.begin(), solution.embeddings.end());
    solution.size = static_cast<int>(solution.embeddings.size());
    return solution;
}

namespace {

// Backtracking monomorphism of the elementary structure into g, restricted
// to allowed/unused vertices. Returns the first mapping in lexicographic
// order of assignments, or false.
bool find_g3_mapping(const Graph& g, const Graph& pattern, const std::vector<char>& allowed,
                     const std::vector<char>& used, std::array<VertexId, 7>& mapping) {
    std::vector<char> taken(g.vertex_count(), 0);
    std::function<bool(int)> assign = [&](int pos) -> bool {
        if (pos == 7) return true;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (!allowed[v] || used[v] || taken[v]) continue;
            if (g.degree(v) < pattern.degree(pos)) continue;
            bool ok = true;
            for (int prev = 0; prev < pos; ++prev) {
                if (pattern.has_edge(prev, pos) && !g.has_edge(mapping[prev], v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            mapping[pos] = v;
            taken[v] = 1;
            if (assign(pos + 1)) return true;
            taken[v] = 0;
        }
        return false;
    };
    return assign(0);
}

// Monomorphism of the elementary structure onto exactly the seven vertices
// of `candidate` (all must be used).
bool g3_onto_vertices(const Graph& g, const Graph& pattern,
                      const std::vector<VertexId>& candidate,
                      std::array<VertexId, 7>& mapping) {
    std::array<char, 7> taken{};
    std::function<bool(int)> assign = [&](int pos) -> bool {
        if (pos == 7) return true;
        for (int c = 0; c < 7; ++c) {
            if (taken[c]) continue;
            VertexId v = candidate[c];
            bool ok = true;
            for (int prev = 0; prev < pos; ++prev) {
                if (pattern.has_edge(prev, pos) && !g.has_edge(mapping[prev], v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            mapping[pos] = v;
            taken[c] = 1;
            if (assign(pos + 1)) return true;
            taken[c] = 0;
        }
        return false;
    };
    return assign(0);
}

std::vector<std::vector<VertexId>> enumerate_4cliques(const Graph& g,
                                                      const std::vector<char>& allowed) {
    std::vector<std::vector<VertexId>> cliques;
    const int n = g.vertex_count();
    for (VertexId a = 0; a < n; ++a) {
        if (!allowed[a]) continue;
        for (VertexId b : g.neighbors(a)) {
            if (b <= a || !allowed[b]) continue;
            for (VertexId c : g.neighbors(b)) {
                if (c <= b || !allowed[c] || !g.has_edge(a, c)) continue;
                for (VertexId d : g.neighbors(c)) {
                    if (d <= c || !allowed[d] || !g.has_edge(a, d) || !g.has_edge(b, d)) {
                        continue;
                    }
                    cliques.push_back({a, b, c, d});
                }
            }
        }
    }
    return cliques;
}

std::vector<G3Unit> find_g3_units_restricted(const Graph& g, const std::vector<char>& allowed) {
    const Graph pattern = canonical_g3();
    const int n = g.vertex_count();
    std::vector<G3Unit> units;
    std::vector<char> used(n, 0);

    // Literal phase: grow vertex-disjoint 4-clique seeds into full units by
    // searching their neighborhoods.
    std::vector<std::vector<VertexId>> seeds;
    {
        std::vector<char> seed_used(n, 0);
        for (const auto& clique : enumerate_4cliques(g, allowed)) {
            bool clash = false;
            for (VertexId v : clique) clash = clash || seed_used[v];
            if (clash) continue;
            for (VertexId v : clique) seed_used[v] = 1;
            seeds.push_back(clique);
        }
    }
    for (const auto& clique : seeds) {
        bool clash = false;
        for (VertexId v : clique) clash = clash || used[v];
        if (clash) continue;

        std::set<VertexId> frontier;
        for (VertexId v : clique) {
            for (VertexId w : g.neighbors(v)) {
                if (allowed[w] && !used[w] &&
                    std::find(clique.begin(), clique.end(), w) == clique.end()) {
                    frontier.insert(w);
                }
            }
        }
        std::vector<VertexId> extras(frontier.begin(), frontier.end());
        bool grown = false;
        std::array<VertexId, 7> mapping{};
        for (std::size_t i = 0; i < extras.size() && !grown; ++i) {
            for (std::size_t j = i + 1; j < extras.size() && !grown; ++j) {
                for (std::size_t l = j + 1; l < extras.size() && !grown; ++l) {
                    std::vector<VertexId> candidate = clique;
                    candidate.push_back(extras[i]);
                    candidate.push_back(extras[j]);
                    candidate.push_back(extras[l]);
                    if (g3_onto_vertices(g, pattern, candidate, mapping)) {
                        std::sort(candidate.begin(), candidate.end());
                        for (VertexId v : candidate) used[v] = 1;
                        units.push_back({candidate, mapping, true});
                        grown = true;
                    }
                }
            }
        }
    }

    // Fallback phase: direct backtracking for further disjoint units.
    while (true) {
        std::array<VertexId, 7> mapping{};
        if (!find_g3_mapping(g, pattern, allowed, used, mapping)) break;
        std::vector<VertexId> vertices(mapping.begin(), mapping.end());
        std::sort(vertices.begin(), vertices.end());
        for (VertexId v : vertices) used[v] = 1;
        units.push_back({vertices, mapping, false});
    }
    return units;
}

}  // namespace

std::vector<G3Unit> find_g3_units(const Graph& g) {
    return find_g3_units_restricted(g, std::vector<char>(g.vertex_count(), 1));
}

PackingSolution pack_t2(const Graph& g) {
    PackingSolution solution;

    for (const auto& comp_vertices : component_vertex_sets(g)) {
        if (comp_vertices.size() < 7) continue;
        auto [comp, to_global] = induced_subgraph(g, comp_vertices);
        auto [decomposition, state] = run_block_detection(comp);

        for (const auto& block : decomposition.blocks) {
            std::vector<char> allowed(comp.vertex_count(), 0);
            for (VertexId v : block) allowed[v] = 1;
            for (const G3Unit& unit : find_g3_units_restricted(comp, allowed)) {
                // The canonical 7-vertex tree inside the elementary
                // structure, pushed through the unit's vertex mapping.
                static constexpr std::array<int, 7> kTreeImage = {0, 3, 4, 5, 6, 1, 2};
                TreeEmbedding e;
                e.pattern_k = 2;
                for (int pos : kTreeImage) {
                    e.vertices.push_back(to_global[unit.mapping[pos]]);
                }
                solution.embeddings.push_back(canonicalize(e));
            }
        }
    }

    std::sort(solution.embeddings.begin(), solution.embeddings.end());
    solution.size = static_cast<int>(solution.embeddings.size());
    return solution;
}

}  // namespace treepack
