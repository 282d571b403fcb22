#include <stdexcept>

#include "doctest.h"
#include "naive_oracle.hpp"
#include "test_util.hpp"
#include "treepack/families.hpp"
#include "treepack/random_graph.hpp"
#include "treepack/tree.hpp"

using namespace treepack;

TEST_CASE("pattern_graph shapes") {
    Graph t0 = pattern_graph(0);
    CHECK(t0.vertex_count() == 1);
    CHECK(t0.edge_count() == 0);

    Graph t1 = pattern_graph(1);
    CHECK(t1.vertex_count() == 3);
    CHECK(t1.edges() == std::vector<Edge>{{0, 1}, {0, 2}});

    Graph t2 = pattern_graph(2);
    CHECK(t2.vertex_count() == 7);
    CHECK(t2.edge_count() == 6);
    std::multiset<int> degrees;
    for (VertexId v = 0; v < 7; ++v) degrees.insert(t2.degree(v));
    CHECK(degrees == std::multiset<int>{1, 1, 1, 1, 2, 3, 3});

    CHECK_THROWS_AS(pattern_graph(5), std::invalid_argument);
}

TEST_CASE("enumerate_embeddings counts on small hosts") {
    CHECK(enumerate_embeddings(cycle_family(2), 1).size() == 6);
    CHECK(enumerate_embeddings(cycle_family(1), 1).size() == 3);
    CHECK(enumerate_embeddings(testutil::complete(4), 2).empty());  // n < 7
    CHECK(enumerate_embeddings(Graph::from_edge_list(2, {{0, 1}}), 1).empty());
    CHECK_THROWS_AS(enumerate_embeddings(cycle_family(2), 4), std::invalid_argument);
}

TEST_CASE("G3 hosts exactly 15 distinct 7-vertex perfect binary trees") {
    // Golden value; cross-checked against the full permutation scan below.
    auto embeddings = enumerate_embeddings(canonical_g3(), 2);
    CHECK(embeddings.size() == 15);

    // Independent count: all 7! level-order assignments, deduplicated by
    // image edge set.
    const Graph g3 = canonical_g3();
    std::vector<VertexId> perm{0, 1, 2, 3, 4, 5, 6};
    std::set<std::vector<Edge>> edge_sets;
    do {
        bool ok = true;
        for (int p = 1; p < 7 && ok; ++p) {
            ok = g3.has_edge(perm[(p - 1) / 2], perm[p]);
        }
        if (ok) edge_sets.insert(TreeEmbedding{2, perm}.image_edges());
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(edge_sets.size() == 15);
}

TEST_CASE("center-count identity for 2-edge paths") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = random_connected_graph(10, 12 + static_cast<int>(seed % 8),
                                         kDefaultCorpusSeed + 500 + seed);
        CHECK(static_cast<long>(enumerate_embeddings(g, 1).size()) ==
              naive::t1_embedding_count(g));
    }
}

TEST_CASE("every enumerated embedding validates") {
    for (int k = 1; k <= 2; ++k) {
        Graph host = h_chain(2);
        for (const auto& e : enumerate_embeddings(host, k)) {
            CHECK(is_valid_embedding(host, e));
        }
    }
}

TEST_CASE("enumeration on the pattern itself finds one embedding") {
    for (int k = 1; k <= 3; ++k) {
        Graph t = pattern_graph(k);
        auto embeddings = enumerate_embeddings(t, k);
        REQUIRE(embeddings.size() == 1);
        CHECK(is_valid_embedding(t, embeddings.front()));
    }
}

TEST_CASE("embeddings are deduplicated by edge set") {
    // On a star every pair of leaves forms the same path pattern through the
    // center; different leaf pairs are different subgraphs.
    auto embeddings = enumerate_embeddings(testutil::star(3), 1);
    CHECK(embeddings.size() == 3);
    std::set<std::vector<Edge>> sets;
    for (const auto& e : embeddings) sets.insert(e.image_edges());
    CHECK(sets.size() == embeddings.size());
}

TEST_CASE("is_valid_embedding negatives") {
    Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK(is_valid_embedding(p3, {1, {1, 0, 2}}));
    CHECK(!is_valid_embedding(p3, {1, {1, 0, 0}}));   // repeated vertex
    CHECK(!is_valid_embedding(p3, {1, {0, 1, 2}}));   // 0-2 is not an edge
    CHECK(!is_valid_embedding(p3, {1, {1, 2, 0}}));   // not canonical
    CHECK(!is_valid_embedding(p3, {1, {1, 0}}));      // wrong order count
}

TEST_CASE("canonicalize sorts child images at every level") {
    TreeEmbedding raw{2, {0, 3, 4, 6, 5, 2, 1}};
    TreeEmbedding canon = canonicalize(raw);
    CHECK(canon.vertices == std::vector<VertexId>{0, 3, 4, 5, 6, 1, 2});
    CHECK(canon.image_edges() == raw.image_edges());
    CHECK(canonicalize(canon) == canon);
}
