#include "treepack/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "treepack/cycles.hpp"

namespace treepack {

Graph path_family(int r) {
    if (r < 1) throw std::invalid_argument("path_family: r must be >= 1");
    std::vector<Edge> edges;
    for (int v = 0; v < 3 * r; ++v) edges.push_back({v, v + 1});
    return Graph::from_edge_list(3 * r + 1, edges);
}

Graph cycle_family(int r) {
    if (r < 1) throw std::invalid_argument("cycle_family: r must be >= 1");
    const int n = 3 * r;
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    return Graph::from_edge_list(n, edges);
}

Graph chorded_cycle_family(int r, const std::vector<ChordSpec>& chords) {
    if (r < 1) throw std::invalid_argument("chorded_cycle_family: r must be >= 1");
    const int cycle_len = 3 * r;
    for (std::size_t c = 0; c < chords.size(); ++c) {
        const ChordSpec& chord = chords[c];
        if (chord.start_index < 0 || chord.start_index >= cycle_len ||
            chord.end_index < 0 || chord.end_index >= cycle_len ||
            chord.start_index == chord.end_index) {
            throw std::invalid_argument("chord " + std::to_string(c) +
                                        ": endpoints must be distinct cycle positions");
        }
        if (chord.length <= 0 || chord.length % 3 != 0) {
            throw std::invalid_argument("chord " + std::to_string(c) +
                                        ": length must be a positive multiple of three");
        }
        const int arc = (chord.end_index - chord.start_index + cycle_len) % cycle_len;
        const int longer_arc = std::max(arc, cycle_len - arc);
        if (chord.length + longer_arc > cycle_len) {
            throw std::invalid_argument(
                "chord " + std::to_string(c) + " (" + std::to_string(chord.start_index) +
                "," + std::to_string(chord.end_index) + ",len " +
                std::to_string(chord.length) + ") violates the longest-cycle premise: " +
                "together with the " + std::to_string(longer_arc) +
                "-edge arc it forms a cycle of length " +
                std::to_string(chord.length + longer_arc) + " > " +
                std::to_string(cycle_len));
        }
    }

    std::vector<Edge> edges;
    for (int v = 0; v < cycle_len; ++v) edges.push_back({v, (v + 1) % cycle_len});
    int next_id = cycle_len;
    for (const ChordSpec& chord : chords) {
        VertexId prev = chord.start_index;
        for (int step = 0; step < chord.length - 1; ++step) {
            edges.push_back({prev, next_id});
            prev = next_id++;
        }
        edges.push_back({prev, chord.end_index});
    }
    Graph g = Graph::from_edge_list(next_id, edges);

    if (chords.size() > 1) {
        // Chords can combine into a cycle longer than the base one even when
        // each passes the arithmetic check above.
        auto longest = find_longest_cycle(g);
        if (longest.cycle && longest.cycle->length > cycle_len) {
            std::string cyc;
            for (VertexId v : longest.cycle->vertices) {
                cyc += (cyc.empty() ? "" : " ") + std::to_string(v);
            }
            throw std::invalid_argument(
                "chord combination violates the longest-cycle premise: found a cycle of "
                "length " + std::to_string(longest.cycle->length) + " > " +
                std::to_string(cycle_len) + " (" + cyc + ")");
        }
    }
    return g;
}

Graph erdos_posa_family(int r, int h, int i) {
    if (r < 2) throw std::invalid_argument("erdos_posa_family: r must be >= 2");
    if (h < 1) throw std::invalid_argument("erdos_posa_family: h must be >= 1");
    const int cycle_len = 3 * r;
    if (i < 0 || 3 * i + 4 >= cycle_len) {
        throw std::invalid_argument("erdos_posa_family: attach index overflows the cycle");
    }
    const VertexId a = 3 * i + 1;
    const VertexId b = 3 * i + 4;
    std::vector<Edge> edges;
    for (int v = 0; v < cycle_len; ++v) edges.push_back({v, (v + 1) % cycle_len});
    int next_id = cycle_len;
    for (int p = 0; p < h; ++p) {
        VertexId x = next_id++;
        VertexId y = next_id++;
        edges.push_back({a, x});
        edges.push_back({x, y});
        edges.push_back({y, b});
    }
    return Graph::from_edge_list(next_id, edges);
}

Graph canonical_g3() {
    return Graph::from_edge_list(7, {{0, 4},
                                     {0, 3},
                                     {0, 2},
                                     {1, 5},
                                     {1, 4},
                                     {1, 3},
                                     {2, 6},
                                     {2, 4},
                                     {3, 5},
                                     {3, 6},
                                     {4, 6},
                                     {5, 6}});
}

Graph h_chain(int r) {
    if (r < 1) throw std::invalid_argument("h_chain: r must be >= 1");
    const Graph base = canonical_g3();
    std::vector<Edge> edges;
    for (int copy = 0; copy < r; ++copy) {
        const int offset = 7 * copy;
        for (const auto& [u, v] : base.edges()) {
            edges.push_back({u + offset, v + offset});
        }
        if (copy > 0) {
            for (int j = 0; j < 7; ++j) {
                edges.push_back({7 * (copy - 1) + j, 7 * copy + j});
            }
        }
    }
    return Graph::from_edge_list(7 * r, edges);
}

Graph build_family(const FamilySpec& spec) {
    switch (spec.family) {
        case FamilyTag::path:
            return path_family(spec.r);
        case FamilyTag::cycle:
            return cycle_family(spec.r);
        case FamilyTag::chorded_cycle:
            return chorded_cycle_family(spec.r, spec.chords);
        case FamilyTag::erdos_posa:
            return erdos_posa_family(spec.r, spec.h, spec.attach_index);
        case FamilyTag::g3:
            return canonical_g3();
        case FamilyTag::h_chain:
            return h_chain(spec.r);
    }
    throw std::invalid_argument("build_family: unknown family tag");
}

std::string family_tag_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::path: return "path";
        case FamilyTag::cycle: return "cycle";
        case FamilyTag::chorded_cycle: return "chorded_cycle";
        case FamilyTag::erdos_posa: return "erdos_posa";
        case FamilyTag::g3: return "g3";
        case FamilyTag::h_chain: return "h_chain";
    }
    return "unknown";
}

}  // namespace treepack
