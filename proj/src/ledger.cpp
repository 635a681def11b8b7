#include "ktdom/ledger.hpp"

#include <sstream>

#include <json.hpp>

namespace ktdom {

std::string csv_header() {
    return "instance,n,delta,k,quantity,value,witness,elapsed_ms,claim,verdict";
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_csv(const LedgerRow& row) {
    std::ostringstream out;
    out << csv_field(row.instance) << ',' << row.n << ',' << row.delta << ',' << row.k << ','
        << csv_field(row.quantity) << ',' << csv_field(row.value) << ','
        << csv_field(row.witness) << ',';
    if (row.elapsed_ms) out << *row.elapsed_ms;
    out << ',' << csv_field(row.claim) << ',' << csv_field(row.verdict);
    return out.str();
}

std::string rows_to_csv(const std::vector<LedgerRow>& rows) {
    std::ostringstream out;
    out << csv_header() << '\n';
    for (const auto& row : rows) out << to_csv(row) << '\n';
    return out.str();
}

std::string rows_to_json(const std::vector<LedgerRow>& rows) {
    nlohmann::json array = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json j{{"instance", row.instance}, {"n", row.n},
                         {"delta", row.delta},       {"k", row.k},
                         {"quantity", row.quantity}, {"value", row.value},
                         {"witness", row.witness},   {"claim", row.claim},
                         {"verdict", row.verdict}};
        if (row.elapsed_ms) j["elapsed_ms"] = *row.elapsed_ms;
        else j["elapsed_ms"] = nullptr;
        array.push_back(std::move(j));
    }
    return array.dump(2) + "\n";
}

std::string witness_string(const VertexSet& witness) {
    std::string out;
    for (int v : witness.members()) {
        if (!out.empty()) out += ';';
        out += std::to_string(v + 1);
    }
    return out;
}

}  // namespace ktdom
