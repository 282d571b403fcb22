#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treepack/oracle.hpp"

namespace treepack {

enum class Verdict { confirmed, refuted, out_of_budget };

std::string verdict_name(Verdict v);

// One entry of the reproduction suite: an expected (alpha, beta) pair or a
// single expected value, the oracle-computed counterpart, and the verdict.
// `hard_ok` tracks the assertions that must hold regardless of whether the
// claimed value itself survives.
struct ClaimRecord {
    std::string id;
    std::optional<int> paper_alpha;
    std::optional<int> paper_beta;
    std::optional<int> computed_alpha;
    std::optional<int> computed_beta;
    Verdict verdict = Verdict::confirmed;
    bool hard_ok = true;
    std::string note;
    std::int64_t runtime_ms = 0;
};

struct ClaimSuite {
    std::vector<ClaimRecord> records;
    std::uint64_t corpus_seed = 0;
    int confirmed = 0;
    int refuted = 0;
    int out_of_budget = 0;
    int hard_failures = 0;
};

// Runs every claim in the built-in catalog against the exact oracle.
// Deterministic apart from the runtime_ms fields.
ClaimSuite run_claim_suite(const OracleConfig& config = {});

// Key/value record rendering; field order is fixed.
std::string render_report(const ClaimSuite& suite);

}  // namespace treepack
