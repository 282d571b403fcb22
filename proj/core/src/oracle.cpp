#include "treepack/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

// Minimal dynamic bitset over vertex ids.
struct VertexMask {
    std::vector<std::uint64_t> words;

    explicit VertexMask(int n) : words((n + 63) / 64, 0) {}

    void set(int v) { words[v >> 6] |= std::uint64_t{1} << (v & 63); }
    bool test(int v) const { return (words[v >> 6] >> (v & 63)) & 1; }

    bool intersects(const VertexMask& other) const {
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (words[i] & other.words[i]) return true;
        }
        return false;
    }
    void merge(const VertexMask& other) {
        for (std::size_t i = 0; i < words.size(); ++i) words[i] |= other.words[i];
    }
    void subtract(const VertexMask& other) {
        for (std::size_t i = 0; i < words.size(); ++i) words[i] &= ~other.words[i];
    }
    int count() const {
        int total = 0;
        for (auto w : words) total += std::popcount(w);
        return total;
    }
};

std::vector<TreeEmbedding> enumerate_with_budget(const Graph& g, int k,
                                                 const OracleConfig& config) {
    auto embeddings = enumerate_embeddings(g, k);
    if (embeddings.size() > config.max_embeddings) {
        throw budget_error("max_embeddings", config.max_embeddings);
    }
    return embeddings;
}

std::vector<VertexMask> embedding_masks(const std::vector<TreeEmbedding>& embeddings,
                                        int n) {
    std::vector<VertexMask> masks;
    masks.reserve(embeddings.size());
    for (const auto& e : embeddings) {
        VertexMask m(n);
        for (VertexId v : e.vertices) m.set(v);
        masks.push_back(std::move(m));
    }
    return masks;
}

}  // namespace

PackingSolution max_packing(const Graph& g, int k, const OracleConfig& config) {
    const int n = g.vertex_count();
    const auto embeddings = enumerate_with_budget(g, k, config);
    const auto masks = embedding_masks(embeddings, n);
    const int count = static_cast<int>(embeddings.size());
    const int tree_order = (1 << (k + 1)) - 1;

    // Greedy disjoint pick in canonical order: initial incumbent.
    std::vector<int> best;
    {
        VertexMask used(n);
        for (int i = 0; i < count; ++i) {
            if (!masks[i].intersects(used)) {
                best.push_back(i);
                used.merge(masks[i]);
            }
        }
    }

    std::uint64_t nodes = 0;
    std::vector<int> chosen;
    std::function<void(int, VertexMask&, int)> search = [&](int idx, VertexMask& used,
                                                            int current) {
        if (++nodes > config.max_search_nodes) {
            throw budget_error("max_search_nodes", config.max_search_nodes);
        }
        while (idx < count && masks[idx].intersects(used)) ++idx;
        if (idx == count) {
            if (current > static_cast<int>(best.size())) best = chosen;
            return;
        }
        const int free_vertices = n - used.count();
        const int upper = current + std::min(count - idx, free_vertices / tree_order);
        if (upper <= static_cast<int>(best.size())) return;

        VertexMask taken = used;
        taken.merge(masks[idx]);
        chosen.push_back(idx);
        search(idx + 1, taken, current + 1);
        chosen.pop_back();
        search(idx + 1, used, current);
    };
    VertexMask empty(n);
    search(0, empty, 0);

    PackingSolution solution;
    for (int i : best) solution.embeddings.push_back(embeddings[i]);
    solution.size = static_cast<int>(solution.embeddings.size());
    return solution;
}

CoverSolution min_cover(const Graph& g, int k, const OracleConfig& config) {
    const int n = g.vertex_count();
    const auto embeddings = enumerate_with_budget(g, k, config);
    const auto masks = embedding_masks(embeddings, n);
    const int count = static_cast<int>(embeddings.size());

    CoverSolution solution;
    if (count == 0) return solution;

    // Max-degree greedy hitting set: initial incumbent.
    std::vector<VertexId> best;
    {
        std::vector<char> hit(count, 0);
        VertexMask cover(n);
        int remaining = count;
        while (remaining > 0) {
            std::vector<int> occurrences(n, 0);
            for (int i = 0; i < count; ++i) {
                if (hit[i]) continue;
                for (VertexId v : embeddings[i].vertices) ++occurrences[v];
            }
            VertexId pick = static_cast<VertexId>(
                std::max_element(occurrences.begin(), occurrences.end()) -
                occurrences.begin());
            cover.set(pick);
            best.push_back(pick);
            for (int i = 0; i < count; ++i) {
                if (!hit[i] && masks[i].test(pick)) {
                    hit[i] = 1;
                    --remaining;
                }
            }
        }
        std::sort(best.begin(), best.end());
    }

    std::uint64_t nodes = 0;
    std::vector<VertexId> current;
    std::function<void(const VertexMask&)> search = [&](const VertexMask& cover) {
        if (++nodes > config.max_search_nodes) {
            throw budget_error("max_search_nodes", config.max_search_nodes);
        }
        int first_uncovered = -1;
        for (int i = 0; i < count; ++i) {
            if (!masks[i].intersects(cover)) {
                first_uncovered = i;
                break;
            }
        }
        if (first_uncovered == -1) {
            if (current.size() < best.size()) {
                best = current;
                std::sort(best.begin(), best.end());
            }
            return;
        }
        // Lower bound: greedily chosen pairwise-disjoint uncovered embeddings
        // each require a distinct additional vertex.
        int lower = 0;
        {
            VertexMask taken(n);
            for (int i = first_uncovered; i < count; ++i) {
                if (masks[i].intersects(cover) || masks[i].intersects(taken)) continue;
                taken.merge(masks[i]);
                ++lower;
            }
        }
        if (current.size() + lower >= best.size()) return;

        std::vector<VertexId> branch = embeddings[first_uncovered].vertices;
        std::sort(branch.begin(), branch.end());
        for (VertexId v : branch) {
            VertexMask extended = cover;
            extended.set(v);
            current.push_back(v);
            search(extended);
            current.pop_back();
        }
    };
    search(VertexMask(n));

    solution.vertices = best;
    solution.size = static_cast<int>(best.size());

    // Definitional check: removing the cover leaves no embedding.
    VertexMask cover(n);
    for (VertexId v : solution.vertices) cover.set(v);
    for (int i = 0; i < count; ++i) {
        if (!masks[i].intersects(cover)) {
            throw std::logic_error("min_cover: computed cover misses an embedding");
        }
    }
    return solution;
}

std::string ValidationReport::summary() const {
    std::string out;
    out += "packing size " + std::to_string(packing_size) + ": ";
    out += packing_embeddings_valid ? "embeddings valid" : "INVALID EMBEDDING";
    out += ", ";
    if (packing_disjoint) {
        out += "disjoint";
    } else {
        out += "NOT DISJOINT (shared vertex " +
               std::to_string(shared_vertex.value_or(-1)) + ")";
    }
    out += "; cover size " + std::to_string(cover_size) + ": ";
    out += cover_valid ? "valid" : "INVALID (an embedding survives)";
    out += "; weak duality ";
    out += weak_duality_ok ? "holds" : "VIOLATED";
    return out;
}

ValidationReport validate_solution(const Graph& g, int k, const PackingSolution& packing,
                                   const CoverSolution& cover) {
    ValidationReport report;
    report.packing_size = packing.size;
    report.cover_size = cover.size;

    std::vector<char> used(g.vertex_count(), 0);
    for (const auto& e : packing.embeddings) {
        if (e.pattern_k != k || !is_valid_embedding(g, e)) {
            report.packing_embeddings_valid = false;
        }
        for (VertexId v : e.vertices) {
            if (v >= 0 && v < g.vertex_count()) {
                if (used[v] && !report.shared_vertex) {
                    report.packing_disjoint = false;
                    report.shared_vertex = v;
                }
                used[v] = 1;
            }
        }
    }

    std::vector<char> covered(g.vertex_count(), 0);
    for (VertexId v : cover.vertices) {
        if (v >= 0 && v < g.vertex_count()) covered[v] = 1;
    }
    for (const auto& e : enumerate_embeddings(g, k)) {
        bool hit = false;
        for (VertexId v : e.vertices) {
            if (covered[v]) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            report.cover_valid = false;
            report.uncovered_witness = e;
            break;
        }
    }

    report.weak_duality_ok = packing.size <= cover.size;
    return report;
}

}  // namespace treepack
