#include <stdexcept>

#include "doctest.h"
#include "naive_oracle.hpp"
#include "test_util.hpp"
#include "treepack/families.hpp"
#include "treepack/graph.hpp"
#include "treepack/io.hpp"
#include "treepack/minors.hpp"
#include "treepack/tree.hpp"

using namespace treepack;

TEST_CASE("path and cycle families") {
    Graph p1 = path_family(1);
    CHECK(p1.vertex_count() == 4);
    CHECK(p1.edge_count() == 3);
    Graph p3 = path_family(3);
    CHECK(p3.vertex_count() == 10);
    CHECK(p3.edge_count() == 9);
    CHECK_THROWS_AS(path_family(0), std::invalid_argument);

    CHECK(cycle_family(2).vertex_count() == 6);
    CHECK(cycle_family(1).vertex_count() == 3);
    Graph c12 = cycle_family(4);
    CHECK(c12.vertex_count() == 12);
    for (VertexId v = 0; v < 12; ++v) CHECK(c12.degree(v) == 2);
    CHECK_THROWS_AS(cycle_family(0), std::invalid_argument);
}

TEST_CASE("chorded cycle construction arithmetic") {
    Graph g = chorded_cycle_family(4, {{0, 6, 6}});
    CHECK(g.vertex_count() == 17);
    CHECK(g.edge_count() == 18);
    CHECK(naive::two_connected(g));

    Graph case2 = chorded_cycle_family(2, {{0, 3, 3}});
    CHECK(case2.vertex_count() == 8);
    CHECK(case2.edge_count() == 9);

    Graph two = chorded_cycle_family(6, {{0, 6, 6}, {9, 15, 6}});
    CHECK(two.vertex_count() == 28);
    CHECK(two.edge_count() == 30);
}

TEST_CASE("chorded cycle rejects longest-cycle violations") {
    // A 6-edge chord plus the 6-edge arc would close a 12-cycle in a C9 host.
    CHECK_THROWS_WITH_AS(chorded_cycle_family(3, {{0, 6, 6}}),
                         doctest::Contains("length 12"), std::invalid_argument);
    CHECK_THROWS_AS(chorded_cycle_family(2, {{0, 3, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(chorded_cycle_family(2, {{0, 0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(chorded_cycle_family(2, {{0, 7, 3}}), std::invalid_argument);

    // Each of these passes the per-chord arithmetic but the pair combines
    // into a 14-cycle; the assembled-graph check must catch it.
    CHECK_THROWS_WITH_AS(chorded_cycle_family(4, {{0, 6, 6}, {1, 7, 6}}),
                         doctest::Contains("chord combination"), std::invalid_argument);
}

TEST_CASE("accepted chorded instances keep the base cycle longest") {
    for (const auto& chords : std::vector<std::vector<ChordSpec>>{
             {{0, 3, 3}}, {{0, 6, 6}}}) {
        int r = chords[0].length == 3 ? 2 : 4;
        Graph g = chorded_cycle_family(r, chords);
        CHECK(naive::longest_cycle_length(g) == 3 * r);
    }
}

TEST_CASE("erdos-posa family arithmetic") {
    Graph a = erdos_posa_family(2, 1, 0);
    CHECK(a.vertex_count() == 8);
    CHECK(a.edge_count() == 9);
    Graph b = erdos_posa_family(2, 2, 0);
    CHECK(b.vertex_count() == 10);
    CHECK(b.edge_count() == 12);
    Graph c = erdos_posa_family(3, 2, 0);
    CHECK(c.vertex_count() == 13);
    CHECK(c.edge_count() == 15);
    CHECK(naive::two_connected(a));
    CHECK_THROWS_AS(erdos_posa_family(2, 1, 1), std::invalid_argument);  // 3i+4 >= 3r
    CHECK_THROWS_AS(erdos_posa_family(1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(erdos_posa_family(2, 0, 0), std::invalid_argument);
}

TEST_CASE("canonical G3 structure") {
    Graph g3 = canonical_g3();
    CHECK(g3.vertex_count() == 7);
    CHECK(g3.edge_count() == 12);
    CHECK(naive::three_connected(g3));

    // K4 minor via the three matched contractions.
    Graph step1 = contract_edge(g3, 0, 4);       // ids 5,6 -> 4,5
    Graph step2 = contract_edge(step1, 1, 4);    // old 5; id 6->5 now 4
    Graph step3 = contract_edge(step2, 2, 4);    // old 6
    CHECK(step3 == testutil::complete(4));
    CHECK(has_clique_minor(g3, 4));
    CHECK(!naive::has_k4_subgraph(g3));

    // The documented tree: root 0, second level {3,4}, leaves {6,5} under 3
    // and {2,1} under 4.
    TreeEmbedding quoted = canonicalize({2, {0, 3, 4, 6, 5, 2, 1}});
    CHECK(is_valid_embedding(g3, quoted));
}

TEST_CASE("h_chain structure") {
    CHECK(h_chain(1) == canonical_g3());
    Graph chain = h_chain(2);
    CHECK(chain.vertex_count() == 14);
    CHECK(chain.edge_count() == 31);
    CHECK(naive::three_connected(chain));
    CHECK_THROWS_AS(h_chain(0), std::invalid_argument);
}

TEST_CASE("generators are deterministic") {
    CHECK(format_graph(h_chain(3)) == format_graph(h_chain(3)));
    CHECK(format_graph(chorded_cycle_family(4, {{0, 6, 6}})) ==
          format_graph(chorded_cycle_family(4, {{0, 6, 6}})));
    for (const FamilyTag tag : {FamilyTag::path, FamilyTag::cycle, FamilyTag::g3,
                                FamilyTag::h_chain}) {
        FamilySpec spec;
        spec.family = tag;
        spec.r = 2;
        CHECK(is_connected(build_family(spec)));
    }
}
