#pragma once

#include <random>
#include <vector>

#include "ktdom/graph.hpp"

namespace ktdom {

// Exhaustive corpora of pairwise non-isomorphic graphs, built once and
// cached.  Canonicalization is brute force over vertex permutations, which
// keeps the supported range at n <= 7 (1044 graphs, 853 connected).
std::vector<Graph> all_graphs(int n);
std::vector<Graph> connected_graphs(int n);

// Every connected graph with 1 <= order <= n.
std::vector<Graph> connected_graphs_up_to(int n);

// Seeded generators for property tests.
Graph random_graph(int n, std::mt19937& rng, double edge_probability = 0.5);
Graph random_graph_min_degree(int n, int delta, std::mt19937& rng);

// Circulant graph: i ~ i +/- o (mod n) for each offset o.
Graph make_circulant(int n, const std::vector<int>& offsets);

}  // namespace ktdom
