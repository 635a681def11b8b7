#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ktdom/vertex_set.hpp"

namespace ktdom {

// One result row.  Columns are fixed for downstream diffing:
//   instance,n,delta,k,quantity,value,witness,elapsed_ms,claim,verdict
// Witnesses use 1-based indices joined by ';' (the file convention).
// elapsed_ms stays empty unless timings were requested, so identical runs
// produce byte-identical ledgers.
struct LedgerRow {
    std::string instance;
    int n = 0;
    int delta = 0;
    int k = 0;
    std::string quantity;
    std::string value;
    std::string witness;
    std::optional<long long> elapsed_ms;
    std::string claim;
    std::string verdict;
};

std::string csv_header();
std::string to_csv(const LedgerRow& row);
std::string rows_to_csv(const std::vector<LedgerRow>& rows);
std::string rows_to_json(const std::vector<LedgerRow>& rows);

std::string witness_string(const VertexSet& witness);  // 1-based, ';' joined

}  // namespace ktdom
