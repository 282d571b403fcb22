#include "doctest.h"
#include "naive_oracle.hpp"
#include "test_util.hpp"
#include "treepack/errors.hpp"
#include "treepack/families.hpp"
#include "treepack/oracle.hpp"
#include "treepack/random_graph.hpp"
#include "treepack/tree.hpp"

using namespace treepack;

TEST_CASE("max_packing on the named instances") {
    CHECK(max_packing(cycle_family(2), 1).size == 2);
    CHECK(max_packing(path_family(3), 1).size == 3);
    CHECK(max_packing(Graph::from_edge_list(2, {{0, 1}}), 1).size == 0);
    CHECK(max_packing(h_chain(2), 2).size == 2);
}

TEST_CASE("min_cover on the named instances") {
    CHECK(min_cover(cycle_family(3), 1).size == 3);
    CoverSolution star_cover = min_cover(testutil::star(3), 1);
    CHECK(star_cover.size == 1);
    CHECK(star_cover.vertices == std::vector<VertexId>{0});
    CHECK(min_cover(chorded_cycle_family(4, {{0, 6, 6}}), 1).size == 5);
    CHECK(min_cover(Graph::from_edge_list(2, {{0, 1}}), 1).size == 0);
}

TEST_CASE("h_chain covering numbers") {
    CHECK(min_cover(h_chain(1), 2).size == 1);
    // Frozen from the exhaustive run: two covering vertices do not suffice.
    CHECK(min_cover(h_chain(2), 2).size == 5);
}

TEST_CASE("oracle agrees with power-set exhaustion on small instances") {
    std::vector<Graph> hosts = {
        cycle_family(1),  cycle_family(2),       path_family(2),
        testutil::star(3), testutil::barbell(4), erdos_posa_family(2, 1, 0),
    };
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        hosts.push_back(random_connected_graph(8, 8 + static_cast<int>(seed % 4),
                                               kDefaultCorpusSeed + 600 + seed));
    }
    for (const Graph& g : hosts) {
        auto embeddings = enumerate_embeddings(g, 1);
        if (embeddings.size() > 13) continue;
        auto sets = testutil::embedding_vertex_sets(embeddings);
        CHECK(max_packing(g, 1).size == naive::max_disjoint(sets));
        CHECK(min_cover(g, 1).size == naive::min_hitting(g.vertex_count(), sets));
    }
}

TEST_CASE("weak duality and cover re-enumeration on a random corpus") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_connected_graph(10, 11 + static_cast<int>(seed % 7),
                                         kDefaultCorpusSeed + 700 + seed);
        auto packing = max_packing(g, 1);
        auto cover = min_cover(g, 1);
        CHECK(packing.size <= cover.size);

        std::set<VertexId> removed(cover.vertices.begin(), cover.vertices.end());
        for (const auto& e : enumerate_embeddings(g, 1)) {
            bool hit = false;
            for (VertexId v : e.vertices) hit = hit || removed.count(v);
            CHECK(hit);
        }
    }
}

TEST_CASE("oracle determinism") {
    Graph g = erdos_posa_family(2, 2, 0);
    auto p1 = max_packing(g, 1);
    auto p2 = max_packing(g, 1);
    CHECK(p1.embeddings == p2.embeddings);
    auto c1 = min_cover(g, 1);
    auto c2 = min_cover(g, 1);
    CHECK(c1.vertices == c2.vertices);
}

TEST_CASE("budget errors name the exhausted budget") {
    OracleConfig tiny;
    tiny.max_embeddings = 2;
    CHECK_THROWS_WITH_AS(max_packing(cycle_family(3), 1, tiny),
                         doctest::Contains("max_embeddings"), budget_error);
    OracleConfig starved;
    starved.max_search_nodes = 1;
    CHECK_THROWS_WITH_AS(min_cover(cycle_family(3), 1, starved),
                         doctest::Contains("max_search_nodes"), budget_error);
}

TEST_CASE("validate_solution reports") {
    Graph c6 = cycle_family(2);
    auto packing = max_packing(c6, 1);
    auto cover = min_cover(c6, 1);
    ValidationReport good = validate_solution(c6, 1, packing, cover);
    CHECK(good.all_ok());
    CHECK(good.packing_size == 2);
    CHECK(good.cover_size == 2);

    // A cover that misses an embedding.
    CoverSolution bad_cover{{0}, 1};
    ValidationReport missing = validate_solution(c6, 1, packing, bad_cover);
    CHECK(!missing.cover_valid);
    REQUIRE(missing.uncovered_witness.has_value());
    CHECK(is_valid_embedding(c6, *missing.uncovered_witness));

    // Two embeddings sharing vertex 2.
    PackingSolution overlap;
    overlap.embeddings = {canonicalize({1, {1, 0, 2}}), canonicalize({1, {2, 1, 3}})};
    overlap.size = 2;
    ValidationReport shared = validate_solution(c6, 1, overlap, cover);
    CHECK(!shared.packing_disjoint);
    CHECK(shared.shared_vertex.has_value());
    CHECK((*shared.shared_vertex == 1 || *shared.shared_vertex == 2));
    CHECK(!shared.all_ok());
    CHECK(shared.summary().find("NOT DISJOINT") != std::string::npos);
}
