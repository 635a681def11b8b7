#include "ktdom/graph.hpp"

#include <algorithm>

namespace ktdom {

namespace {

void check_order(int n) {
    if (n < 0) throw ParameterError("negative vertex count");
    if (n > kMaxVertices)
        throw ParameterError("graph too large for the bitmask representation: " +
                             std::to_string(n) + " > " + std::to_string(kMaxVertices));
}

}  // namespace

Graph::Graph(int n) : n_(n) {
    check_order(n);
    adj_.assign(static_cast<std::size_t>(n), Mask{0});
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParameterError("edge endpoint out of range: (" + std::to_string(u) + "," +
                                 std::to_string(v) + ") in graph of order " + std::to_string(n));
        if (u == v) throw ParameterError("loop rejected at vertex " + std::to_string(u));
        adj_[u] |= vbit(v);
        adj_[v] |= vbit(u);
    }
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return n_ == 0 ? 0 : d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (Mask s = adj_[u] & ~full_mask(u + 1); s; s &= s - 1)
            out.emplace_back(u, lowest_bit(s));
    return out;  // already sorted: u ascending, then v
}

std::vector<Mask> Graph::components() const {
    std::vector<Mask> out;
    Mask seen = 0;
    for (int v = 0; v < n_; ++v) {
        if (seen & vbit(v)) continue;
        Mask comp = vbit(v);
        Mask frontier = comp;
        while (frontier) {
            Mask next = 0;
            for (Mask s = frontier; s; s &= s - 1) next |= adj_[lowest_bit(s)];
            frontier = next & ~comp;
            comp |= frontier;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

Graph Graph::induced(Mask vs, std::vector<int>* old_index) const {
    std::vector<int> map;
    for (Mask s = vs; s; s &= s - 1) map.push_back(lowest_bit(s));
    Graph out(static_cast<int>(map.size()));
    for (std::size_t i = 0; i < map.size(); ++i) {
        Mask row = adj_[map[i]] & vs;
        for (Mask s = row; s; s &= s - 1) {
            int j = static_cast<int>(std::lower_bound(map.begin(), map.end(), lowest_bit(s)) -
                                     map.begin());
            out.adj_[i] |= vbit(j);
        }
    }
    if (old_index) *old_index = std::move(map);
    return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    if (static_cast<long long>(ng) * nh > kMaxVertices)
        throw ParameterError("product graph too large: " + std::to_string(ng) + "*" +
                             std::to_string(nh) + " vertices");
    std::vector<Edge> edges;
    // (i,j) -> i*nh + j; edges when one coordinate is equal and the other adjacent
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < nh; ++j) {
            for (Mask s = h.neighbors(j) & ~full_mask(j + 1); s; s &= s - 1)
                edges.emplace_back(i * nh + j, i * nh + lowest_bit(s));
            for (Mask s = g.neighbors(i) & ~full_mask(i + 1); s; s &= s - 1)
                edges.emplace_back(i * nh + j, lowest_bit(s) * nh + j);
        }
    return Graph(ng * nh, edges);
}

Graph cross_product(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    if (static_cast<long long>(ng) * nh > kMaxVertices)
        throw ParameterError("product graph too large: " + std::to_string(ng) + "*" +
                             std::to_string(nh) + " vertices");
    std::vector<Edge> edges;
    // (i,j)~(i',j') iff ii' in E(g) and jj' in E(h)
    for (int i = 0; i < ng; ++i)
        for (Mask si = g.neighbors(i) & ~full_mask(i + 1); si; si &= si - 1) {
            int i2 = lowest_bit(si);
            for (int j = 0; j < nh; ++j)
                for (Mask sj = h.neighbors(j); sj; sj &= sj - 1) {
                    int j2 = lowest_bit(sj);
                    int a = i * nh + j, b = i2 * nh + j2;
                    if (a < b) edges.emplace_back(a, b);
                    else edges.emplace_back(b, a);
                }
        }
    return Graph(ng * nh, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int ng = g.order();
    std::vector<Edge> edges = g.edges();
    for (const auto& [u, v] : h.edges()) edges.emplace_back(u + ng, v + ng);
    return Graph(ng + h.order(), edges);
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    std::vector<Edge> edges = g.edges();
    for (const auto& [u, v] : h.edges()) edges.emplace_back(u + ng, v + ng);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) edges.emplace_back(u, ng + v);
    return Graph(ng + nh, edges);
}

Graph k_join(const Graph& g, const Graph& h, int k) {
    std::vector<std::vector<int>> targets(static_cast<std::size_t>(g.order()));
    if (k > h.order())
        throw ParameterError("k-join needs k <= |V(H)|, got k=" + std::to_string(k));
    for (auto& t : targets)
        for (int v = 0; v < k; ++v) t.push_back(v);
    return k_join(g, h, k, targets);
}

Graph k_join(const Graph& g, const Graph& h, int k,
             const std::vector<std::vector<int>>& targets) {
    if (k < 1) throw ParameterError("k-join needs k >= 1");
    if (h.min_degree() < k)
        throw DomainError("k-join requires delta(H) >= k: delta=" +
                          std::to_string(h.min_degree()) + ", k=" + std::to_string(k));
    if (targets.size() != static_cast<std::size_t>(g.order()))
        throw ParameterError("k-join needs one target list per vertex of G");
    const int ng = g.order();
    std::vector<Edge> edges = g.edges();
    for (const auto& [u, v] : h.edges()) edges.emplace_back(u + ng, v + ng);
    for (int u = 0; u < ng; ++u) {
        if (static_cast<int>(targets[u].size()) < k)
            throw ParameterError("k-join target list for vertex " + std::to_string(u) +
                                 " has fewer than k entries");
        for (int v : targets[u]) {
            if (v < 0 || v >= h.order())
                throw ParameterError("k-join target out of range: " + std::to_string(v));
            edges.emplace_back(u, ng + v);
        }
    }
    return Graph(ng + h.order(), edges);
}

}  // namespace ktdom
