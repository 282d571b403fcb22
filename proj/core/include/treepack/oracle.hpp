#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treepack/graph.hpp"
#include "treepack/tree.hpp"

namespace treepack {

// Resource limits for the exact solvers. Exceeding one raises budget_error;
// the oracle never degrades to an approximation silently.
struct OracleConfig {
    std::size_t max_embeddings = 50'000;
    std::uint64_t max_search_nodes = 10'000'000;
};

struct PackingSolution {
    std::vector<TreeEmbedding> embeddings;  // pairwise vertex-disjoint
    int size = 0;
};

struct CoverSolution {
    std::vector<VertexId> vertices;  // ascending
    int size = 0;
};

// Maximum number of pairwise vertex-disjoint subgraphs isomorphic to the
// k-pattern, by branch and bound over the embedding conflict structure.
// Exact and deterministic.
PackingSolution max_packing(const Graph& g, int k, const OracleConfig& config = {});

// Minimum vertex set meeting every embedding, i.e. a minimum hitting set
// over the embeddings' vertex sets. Exact and deterministic.
CoverSolution min_cover(const Graph& g, int k, const OracleConfig& config = {});

struct ValidationReport {
    int packing_size = 0;
    int cover_size = 0;
    bool packing_embeddings_valid = true;
    bool packing_disjoint = true;
    std::optional<VertexId> shared_vertex;        // set when disjointness fails
    bool cover_valid = true;
    std::optional<TreeEmbedding> uncovered_witness;  // an embedding the cover misses
    bool weak_duality_ok = true;                  // packing_size <= cover_size

    bool all_ok() const {
        return packing_embeddings_valid && packing_disjoint && cover_valid &&
               weak_duality_ok;
    }
    std::string summary() const;
};

// Checks disjointness, embedding validity and cover validity; violations are
// reported in the result, never thrown.
ValidationReport validate_solution(const Graph& g, int k, const PackingSolution& packing,
                                   const CoverSolution& cover);

}  // namespace treepack
