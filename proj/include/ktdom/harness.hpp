#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ktdom/claims.hpp"
#include "ktdom/family.hpp"
#include "ktdom/ledger.hpp"

namespace ktdom {

struct RunConfig {
    // Instances: family descriptions and/or input file paths.
    std::vector<std::string> family_texts;
    std::vector<std::string> input_paths;
    int k = 1;
    int ell = 0;                     // second multiplicity where a claim needs one
    std::string quantity = "Gamma";  // gamma | Gamma | tau | upsilon
    bool as_ong = false;             // solve tau/upsilon on H_G of a graph input

    // Verification grids.
    std::vector<std::string> claims;
    std::optional<std::pair<int, int>> n_range;
    std::optional<std::pair<int, int>> m_range;
    std::optional<std::pair<int, int>> k_range;
    std::optional<int> corpus_max;  // connected graphs up to this order
    std::vector<std::vector<int>> parts_lists;

    // Conjecture scan.
    bool question = false;  // scan the K_n x K_m question instead of pairs
    int max_product_order = 16;

    // Execution.
    int workers = 1;
    std::optional<long long> budget_ms;  // per instance
    bool timings = false;                // fill elapsed_ms (breaks byte-identity)

    SolveOptions solve_options() const;
};

std::vector<LedgerRow> run_solve(const RunConfig& config);

struct VerifySummary {
    std::vector<LedgerRow> rows;
    std::vector<ClaimReport> reports;
    std::string table;  // printable verdict table
    int exit_code = 0;  // 2 when a proved claim is violated
};
VerifySummary run_verify(const RunConfig& config);

struct ScanSummary {
    std::vector<LedgerRow> rows;
    std::string table;
};
ScanSummary run_scan(const RunConfig& config);

// "a..b" or "a"; throws ParameterError on junk.
std::pair<int, int> parse_range(const std::string& text);

// Ascending partitions of every total in [2, max_total] into >= 2 parts.
std::vector<std::vector<int>> all_parts_lists(int max_total);

}  // namespace ktdom
