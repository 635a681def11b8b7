#pragma once

#include <utility>
#include <vector>

#include "ktdom/bits.hpp"
#include "ktdom/errors.hpp"
#include "ktdom/vertex_set.hpp"

namespace ktdom {

using Edge = std::pair<int, int>;

// Finite simple undirected graph on vertices 0..n-1, adjacency as bitmasks.
// Immutable after construction: products, joins and unions allocate fresh
// graphs. Loops are rejected; symmetry holds by construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);  // edgeless
    Graph(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    int edge_count() const;
    Mask neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return popcount(adj_[v]); }
    bool adjacent(int u, int v) const { return (adj_[u] & vbit(v)) != 0; }
    int min_degree() const;  // 0 for the empty graph
    int max_degree() const;
    bool is_regular(int k) const { return n_ > 0 && min_degree() == k && max_degree() == k; }
    Mask vertex_mask() const { return full_mask(n_); }
    std::vector<Edge> edges() const;  // sorted, u < v

    std::vector<Mask> components() const;
    bool is_connected() const { return n_ <= 1 || components().size() == 1; }

    // Induced subgraph on `vs`; old_index maps new labels back to the host's.
    Graph induced(Mask vs, std::vector<int>* old_index = nullptr) const;

    bool same_edges(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    int n_ = 0;
    std::vector<Mask> adj_;
};

Graph cartesian_product(const Graph& g, const Graph& h);
Graph cross_product(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

// Canonical k-join: each g-vertex attached to the k lowest-indexed h-vertices.
// Requires delta(h) >= k.
Graph k_join(const Graph& g, const Graph& h, int k);

// General k-join member: targets[i] lists the h-vertices attached to g-vertex
// i; every list must have at least k entries.
Graph k_join(const Graph& g, const Graph& h, int k,
             const std::vector<std::vector<int>>& targets);

}  // namespace ktdom
