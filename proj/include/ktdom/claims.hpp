#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ktdom/domination.hpp"
#include "ktdom/graph.hpp"
#include "ktdom/hypergraph.hpp"

namespace ktdom {

enum class Verdict {
    holds,
    violated,             // a proved claim failed; treated as a hard error
    inapplicable,         // a precondition of the claim is not met here
    unresolved,           // conjecture/question data point, consistent
    violated_conjecture,  // conjecture/question data point that breaks the guess
};

std::string verdict_name(Verdict v);

struct ClaimReport {
    std::string claim_id;
    std::string params;    // parameter point, human readable
    std::string expected;  // value or inequality text
    std::string observed;
    Verdict verdict = Verdict::inapplicable;
    // The claim's primary solver-computed quantity, when it has one;
    // surfaces as the ledger's value column.
    std::optional<int> observed_value;
};

// Parameter point for check_claim; each claim documents which fields it
// reads (see claim_description and the README table).
struct ClaimParams {
    std::vector<Graph> graphs;
    std::vector<std::string> names;  // display names parallel to graphs
    std::vector<int> parts;
    std::vector<int> parts2;
    int k = 0;
    int ell = 0;
    int n = 0;
    int m = 0;
    SolveOptions options;
};

// Closed forms and bounds.
int formula_upper_total_path(int n);   // 2*floor((n+1)/3), n >= 2
int formula_upper_total_cycle(int n);  // n >= 3
// k + max{x : (l-1)x = k, x <= min(k, smallest of the l largest parts)}
// over l in {2..p}; InapplicableError when no (l, x) qualifies.
int formula_gamma_upper_multipartite(const std::vector<int>& parts, int k);
// k + min{x : (l-1)x = k, x <= min(k, smallest part)} over l in {2..p}.
int bound_gamma_multipartite(const std::vector<int>& parts, int k);

ClaimReport bound_n_minus_delta_plus_k(const Graph& g, int k);

// Splits V into a size-m core S with delta(G[S]) >= k and every outside
// vertex having >= k neighbors in S -- equivalently, S is a kTDS of size m.
// Returns the lexicographically least such (S, V-S), or nothing.
std::optional<std::pair<VertexSet, VertexSet>> decompose_k_join(const Graph& g, int k, int m);

ClaimReport check_claim(const std::string& claim_id, const ClaimParams& params);

const std::vector<std::string>& claim_ids();
std::string claim_description(const std::string& id);
// C14 and C21 are a conjecture and an open question; everything else is a
// proved statement whose violation is a hard failure.
bool claim_is_proved(const std::string& id);

}  // namespace ktdom
