#pragma once

#include <vector>

#include "ktdom/domination.hpp"
#include "ktdom/graph.hpp"
#include "ktdom/vertex_set.hpp"

namespace ktdom {

// Vertex set plus a multiset of edges; duplicate edges are kept (the open
// neighborhood hypergraph has one edge per vertex, twins included), empty
// edges are rejected.
struct Hypergraph {
    int n = 0;
    std::vector<Mask> edges;

    Hypergraph() = default;
    Hypergraph(int n, std::vector<Mask> edges);
    static Hypergraph from_lists(int n, const std::vector<std::vector<int>>& lists);

    int edge_count() const { return static_cast<int>(edges.size()); }
    int min_edge_size() const;
    std::vector<std::vector<int>> edge_lists() const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

// Edge i is the open neighborhood of vertex i; requires delta(g) >= 1.
Hypergraph open_neighborhood_hypergraph(const Graph& g);

// true iff every edge meets s in at least k vertices.
bool is_k_transversal(const Hypergraph& h, const VertexSet& s, int k);

// Minimality by the deletion test: no member can be dropped.
bool is_minimal_k_transversal(const Hypergraph& h, const VertexSet& s, int k);

// Exact minimum / maximum cardinality of a minimal k-transversal.
// Every edge must have at least k vertices.
SolveResult tau_k(const Hypergraph& h, int k, const SolveOptions& options = {});
SolveResult upsilon_k(const Hypergraph& h, int k, const SolveOptions& options = {});

}  // namespace ktdom
