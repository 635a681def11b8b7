#include "ktdom/hypergraph.hpp"

#include <algorithm>
#include <string>

namespace ktdom {

Hypergraph::Hypergraph(int n_, std::vector<Mask> edges_) : n(n_), edges(std::move(edges_)) {
    if (n < 0 || n > kMaxVertices)
        throw ParameterError("hypergraph vertex count out of range: " + std::to_string(n));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i] == 0)
            throw ParameterError("empty hyperedge at position " + std::to_string(i));
        if (edges[i] & ~full_mask(n))
            throw ParameterError("hyperedge " + std::to_string(i) + " has a vertex outside [0, " +
                                 std::to_string(n) + ")");
    }
}

Hypergraph Hypergraph::from_lists(int n, const std::vector<std::vector<int>>& lists) {
    std::vector<Mask> edges;
    edges.reserve(lists.size());
    for (const auto& list : lists) edges.push_back(VertexSet::from_members(n, list).bits);
    return Hypergraph(n, std::move(edges));
}

int Hypergraph::min_edge_size() const {
    int best = n + 1;
    for (Mask e : edges) best = std::min(best, popcount(e));
    return edges.empty() ? 0 : best;
}

std::vector<std::vector<int>> Hypergraph::edge_lists() const {
    std::vector<std::vector<int>> out;
    out.reserve(edges.size());
    for (Mask e : edges) out.push_back(VertexSet(n, e).members());
    return out;
}

Hypergraph open_neighborhood_hypergraph(const Graph& g) {
    if (g.order() > 0 && g.min_degree() < 1)
        throw DomainError("open neighborhood hypergraph undefined: isolated vertex present");
    std::vector<Mask> edges;
    edges.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) edges.push_back(g.neighbors(v));
    return Hypergraph(g.order(), std::move(edges));
}

bool is_k_transversal(const Hypergraph& h, const VertexSet& s, int k) {
    if (k < 1) throw ParameterError("k must be at least 1");
    if (s.host_size != h.n) throw ParameterError("vertex set host does not match hypergraph");
    for (Mask e : h.edges)
        if (popcount(e & s.bits) < k) return false;
    return true;
}

bool is_minimal_k_transversal(const Hypergraph& h, const VertexSet& s, int k) {
    if (!is_k_transversal(h, s, k)) return false;
    // Deletion test: dropping v fails exactly when some edge through v sits
    // at the threshold.
    for (Mask t = s.bits; t; t &= t - 1) {
        const int v = lowest_bit(t);
        bool tight = false;
        for (Mask e : h.edges)
            if ((e & vbit(v)) && popcount(e & s.bits) == k) {
                tight = true;
                break;
            }
        if (!tight) return false;
    }
    return true;
}

namespace {

// Search state with per-edge counters maintained incrementally along the
// include/exclude branches.
struct TransversalSearch {
    const Hypergraph& h;
    int k;
    bool maximize;
    std::vector<int> in_count;    // |e & in|
    std::vector<int> pot_count;   // |e & (in | und)|
    std::vector<std::vector<int>> through;  // edges through each vertex
    int best_value;
    Mask best_witness = 0;
    std::uint64_t nodes = 0;
    bool armed_deadline = false;
    std::chrono::steady_clock::time_point deadline{};

    TransversalSearch(const Hypergraph& h_, int k_, bool maximize_, const SolveOptions& options)
        : h(h_), k(k_), maximize(maximize_) {
        in_count.assign(h.edges.size(), 0);
        pot_count.assign(h.edges.size(), 0);
        through.assign(static_cast<std::size_t>(h.n), {});
        for (std::size_t i = 0; i < h.edges.size(); ++i) {
            pot_count[i] = popcount(h.edges[i]);
            for (Mask t = h.edges[i]; t; t &= t - 1)
                through[static_cast<std::size_t>(lowest_bit(t))].push_back(static_cast<int>(i));
        }
        best_value = maximize ? -1 : h.n + 1;
        if (options.time_budget) {
            armed_deadline = true;
            deadline = std::chrono::steady_clock::now() + *options.time_budget;
        }
    }

    void tick() {
        if (armed_deadline && (++nodes & 0xFFF) == 0 &&
            std::chrono::steady_clock::now() > deadline)
            throw TimeoutError("time budget exhausted");
        if (!armed_deadline) ++nodes;
    }

    bool tight_edge_through(int v) const {
        for (int e : through[static_cast<std::size_t>(v)])
            if (in_count[static_cast<std::size_t>(e)] == k) return true;
        return false;
    }

    bool live_member(int v) const {
        for (int e : through[static_cast<std::size_t>(v)])
            if (in_count[static_cast<std::size_t>(e)] <= k &&
                pot_count[static_cast<std::size_t>(e)] >= k)
                return true;
        return false;
    }

    void offer(Mask in) {
        const int sz = popcount(in);
        const bool better =
            maximize ? (sz > best_value || (sz == best_value && set_lex_less(in, best_witness)))
                     : (sz < best_value || (sz == best_value && set_lex_less(in, best_witness)));
        if (better) {
            best_value = sz;
            best_witness = in;
        }
    }

    void dfs(Mask in, Mask und) {
        tick();
        int max_deficit = 0;
        for (std::size_t i = 0; i < h.edges.size(); ++i) {
            if (pot_count[i] < k) return;
            max_deficit = std::max(max_deficit, k - in_count[i]);
        }
        if (max_deficit == 0) {
            // `in` is a k-transversal; supersets cannot be minimal.
            if (maximize) {
                for (Mask t = in; t; t &= t - 1)
                    if (!tight_edge_through(lowest_bit(t))) return;
            }
            offer(in);
            return;
        }
        for (Mask t = in; t; t &= t - 1)
            if (!live_member(lowest_bit(t))) return;
        const int sz = popcount(in);
        if (maximize) {
            if (sz + popcount(und) <= best_value) return;
        } else {
            if (sz + max_deficit >= best_value) return;
        }
        if (!und) return;
        const int v = lowest_bit(und);
        const Mask rest = und & (und - 1);
        for (int e : through[static_cast<std::size_t>(v)]) ++in_count[static_cast<std::size_t>(e)];
        dfs(in | vbit(v), rest);
        for (int e : through[static_cast<std::size_t>(v)]) {
            --in_count[static_cast<std::size_t>(e)];
            --pot_count[static_cast<std::size_t>(e)];
        }
        dfs(in, rest);
        for (int e : through[static_cast<std::size_t>(v)]) ++pot_count[static_cast<std::size_t>(e)];
    }

    // Plain subset scan used below the exhaustive threshold.
    void scan() {
        const Mask full = full_mask(h.n);
        Mask m = 0;
        while (true) {
            tick();
            bool transversal = true;
            for (Mask e : h.edges)
                if (popcount(e & m) < k) {
                    transversal = false;
                    break;
                }
            if (transversal) {
                bool ok = true;
                if (maximize) {
                    for (Mask t = m; t && ok; t &= t - 1) {
                        bool tight = false;
                        for (Mask e : h.edges)
                            if ((e & (t & ~(t - 1))) && popcount(e & m) == k) {
                                tight = true;
                                break;
                            }
                        ok = tight;
                    }
                }
                if (ok) offer(m);
            }
            if (m == full) break;
            ++m;
        }
    }
};

SolveResult solve_transversal(const Hypergraph& h, int k, const SolveOptions& options,
                              bool maximize) {
    if (k < 1) throw ParameterError("k must be at least 1");
    if (!h.edges.empty() && h.min_edge_size() < k)
        throw DomainError("no k-transversal exists: an edge has fewer than k vertices");
    if (h.n > options.hard_vertex_limit)
        throw ResourceError("hypergraph of order " + std::to_string(h.n) +
                            " exceeds the exact-search limit " +
                            std::to_string(options.hard_vertex_limit) +
                            " (set KTDOM_MAX_N to raise it, at your own risk)");
    const auto start = std::chrono::steady_clock::now();
    TransversalSearch search(h, k, maximize, options);
    if (h.n <= options.exhaustive_threshold) {
        search.scan();
    } else {
        // Edges of size exactly k force all their vertices in.
        Mask forced = 0;
        for (Mask e : h.edges)
            if (popcount(e) == k) forced |= e;
        for (Mask t = forced; t; t &= t - 1)
            for (int e : search.through[static_cast<std::size_t>(lowest_bit(t))])
                ++search.in_count[static_cast<std::size_t>(e)];
        search.dfs(forced, full_mask(h.n) & ~forced);
    }
    SolveResult result;
    result.value = search.best_value;
    result.witness = VertexSet(h.n, search.best_witness);
    result.nodes_explored = search.nodes;
    result.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    return result;
}

}  // namespace

SolveResult tau_k(const Hypergraph& h, int k, const SolveOptions& options) {
    return solve_transversal(h, k, options, /*maximize=*/false);
}

SolveResult upsilon_k(const Hypergraph& h, int k, const SolveOptions& options) {
    return solve_transversal(h, k, options, /*maximize=*/true);
}

}  // namespace ktdom
