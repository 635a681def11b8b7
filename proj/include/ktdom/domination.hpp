#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ktdom/graph.hpp"
#include "ktdom/vertex_set.hpp"

namespace ktdom {

// A vertex certifying that a member of S cannot be deleted: some vertex
// `witness` adjacent to it whose neighborhood meets S in exactly k vertices.
struct OpnWitness {
    int witness = 0;
    VertexSet trace;  // N(witness) & S, always of size k
    bool external = false;

    friend bool operator==(const OpnWitness&, const OpnWitness&) = default;
};

struct SolveResult {
    int value = 0;
    VertexSet witness;  // lexicographically least optimum
    std::uint64_t nodes_explored = 0;
    std::chrono::microseconds elapsed{0};
};

struct SolveOptions {
    // Full 2^n scan up to this order; branch and bound above it.
    int exhaustive_threshold = 20;
    // Largest component solved exactly; KTDOM_MAX_N overrides, never past 64.
    int hard_vertex_limit = default_vertex_limit();
    std::optional<std::chrono::milliseconds> time_budget;

    static int default_vertex_limit();
};

// true iff every vertex of g has at least k neighbors inside s.
bool is_ktds(const Graph& g, const VertexSet& s, int k);

// All witnesses of v with respect to s, ordered by witness index.
// v must belong to s.
std::vector<OpnWitness> opn_k(const Graph& g, const VertexSet& s, int v, int k);

// Minimality via the deletion criterion and via the witness criterion; the
// two agree on every k-tuple total dominating set (property-tested).
bool is_minimal_ktds(const Graph& g, const VertexSet& s, int k);
bool is_minimal_ktds_deletion(const Graph& g, const VertexSet& s, int k);

// Visits every minimal kTDS exactly once in lexicographic order of the
// member sequences; the visitor returns false to stop early.
// Requires delta(g) >= k (the family is empty otherwise).
void enumerate_minimal_ktds(const Graph& g, int k,
                            const std::function<bool(const VertexSet&)>& visitor);
std::vector<VertexSet> collect_minimal_ktds(const Graph& g, int k);
// Like enumerate but reports 0 instead of failing when delta(g) < k.
std::uint64_t count_minimal_ktds(const Graph& g, int k);

// Exact minimum kTDS cardinality / maximum minimal-kTDS cardinality.
SolveResult gamma_ktt(const Graph& g, int k, const SolveOptions& options = {});
SolveResult Gamma_ktt(const Graph& g, int k, const SolveOptions& options = {});

// A maximum-cardinality minimal kTDS in which every member has an external
// witness, if any exists among the maximum ones.
std::optional<VertexSet> is_gamma_external(const Graph& g, int k,
                                           const SolveOptions& options = {});

}  // namespace ktdom
