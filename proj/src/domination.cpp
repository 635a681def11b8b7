#include "ktdom/domination.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace ktdom {

namespace {

struct Deadline {
    bool armed = false;
    std::chrono::steady_clock::time_point at{};
    std::uint64_t ticks = 0;

    static Deadline from(const SolveOptions& options) {
        Deadline d;
        if (options.time_budget) {
            d.armed = true;
            d.at = std::chrono::steady_clock::now() + *options.time_budget;
        }
        return d;
    }

    void tick() {
        if (armed && (++ticks & 0xFFF) == 0 && std::chrono::steady_clock::now() > at)
            throw TimeoutError("time budget exhausted");
    }
};

// Depth-first search over vertex subsets in lexicographic order of the
// member sequences, include-first.  Stops descending once `in` dominates
// (no proper superset of a kTDS is a minimal kTDS) and cuts branches where
// some vertex can no longer reach k in-neighbors or some included vertex
// has lost every potential witness.  on_ktds returns false to abort.
// prune(in, und, max_deficit) returning true cuts the subtree.
template <class OnKtds, class Prune>
bool minimal_dfs(const Graph& g, int k, Mask in, Mask und, std::uint64_t& nodes,
                 Deadline& deadline, OnKtds&& on_ktds, Prune&& prune) {
    ++nodes;
    deadline.tick();
    const int n = g.order();
    const Mask pot = in | und;
    Mask exactly = 0, live = 0;
    int max_deficit = 0;
    for (int x = 0; x < n; ++x) {
        const Mask nb = g.neighbors(x);
        const int cin = popcount(nb & in);
        if (cin < k) {
            if (popcount(nb & pot) < k) return true;
            max_deficit = std::max(max_deficit, k - cin);
            live |= vbit(x);
        } else if (cin == k) {
            exactly |= vbit(x);
            live |= vbit(x);
        }
    }
    if (max_deficit == 0) return on_ktds(in, exactly);
    for (Mask s = in; s; s &= s - 1)
        if (!(g.neighbors(lowest_bit(s)) & live)) return true;
    if (prune(in, und, max_deficit)) return true;
    if (!und) return true;
    const int v = lowest_bit(und);
    const Mask rest = und & (und - 1);
    if (!minimal_dfs(g, k, in | vbit(v), rest, nodes, deadline, on_ktds, prune)) return false;
    return minimal_dfs(g, k, in, rest, nodes, deadline, on_ktds, prune);
}

bool minimal_from_exact(const Graph& g, Mask s, Mask exactly) {
    for (Mask t = s; t; t &= t - 1)
        if (!(g.neighbors(lowest_bit(t)) & exactly)) return false;
    return true;
}

// Vertices forced into every kTDS: the whole neighborhood of every vertex
// of degree exactly k.
Mask forced_members(const Graph& g, int k) {
    Mask forced = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == k) forced |= g.neighbors(v);
    return forced;
}

struct ComponentBest {
    int value = -1;
    Mask witness = 0;
    std::uint64_t nodes = 0;
};

// Exhaustive scan over all subsets of one component.
ComponentBest scan_component(const Graph& g, int k, bool maximize, Deadline& deadline) {
    const int n = g.order();
    const Mask full = full_mask(n);
    ComponentBest best;
    best.value = maximize ? -1 : n + 1;
    Mask m = 0;
    while (true) {
        ++best.nodes;
        deadline.tick();
        Mask exactly = 0;
        bool ktds = true;
        for (int x = 0; x < n && ktds; ++x) {
            const int cin = popcount(g.neighbors(x) & m);
            if (cin < k) ktds = false;
            else if (cin == k) exactly |= vbit(x);
        }
        if (ktds && (maximize ? minimal_from_exact(g, m, exactly) : true)) {
            const int sz = popcount(m);
            const bool better = maximize
                                    ? (sz > best.value ||
                                       (sz == best.value && set_lex_less(m, best.witness)))
                                    : (sz < best.value ||
                                       (sz == best.value && set_lex_less(m, best.witness)));
            if (better) {
                best.value = sz;
                best.witness = m;
            }
        }
        if (m == full) break;
        ++m;
    }
    return best;
}

// Branch-and-bound over one component.
ComponentBest branch_component(const Graph& g, int k, bool maximize, Deadline& deadline) {
    const int n = g.order();
    const int delta = g.min_degree();
    const int cap = delta >= k + 1 ? n - delta + k : n;  // upper bound on minimal sizes
    const Mask forced = forced_members(g, k);
    ComponentBest best;
    best.value = maximize ? -1 : n + 1;
    auto on_ktds = [&](Mask in, Mask exactly) {
        if (maximize && !minimal_from_exact(g, in, exactly)) return true;
        const int sz = popcount(in);
        const bool better =
            maximize ? (sz > best.value || (sz == best.value && set_lex_less(in, best.witness)))
                     : (sz < best.value || (sz == best.value && set_lex_less(in, best.witness)));
        if (better) {
            best.value = sz;
            best.witness = in;
        }
        return true;
    };
    auto prune = [&](Mask in, Mask und, int deficit) {
        const int sz = popcount(in);
        if (maximize) {
            if (sz > cap) return true;
            return std::min(sz + popcount(und), cap) <= best.value;
        }
        return sz + deficit >= best.value;
    };
    minimal_dfs(g, k, forced, full_mask(n) & ~forced, best.nodes, deadline, on_ktds, prune);
    return best;
}

SolveResult solve(const Graph& g, int k, const SolveOptions& options, bool maximize) {
    if (k < 1) throw ParameterError("k must be at least 1");
    if (g.min_degree() < k)
        throw DomainError("no kTDS exists: delta(G)=" + std::to_string(g.min_degree()) +
                          " < k=" + std::to_string(k));
    const auto start = std::chrono::steady_clock::now();
    Deadline deadline = Deadline::from(options);

    SolveResult result;
    result.value = 0;
    Mask witness = 0;
    // Both quantities are additive over connected components, and the union
    // of the per-component lexicographic optima is the global one.
    for (Mask comp : g.components()) {
        const int nc = popcount(comp);
        if (nc > options.hard_vertex_limit)
            throw ResourceError("component of order " + std::to_string(nc) +
                                " exceeds the exact-search limit " +
                                std::to_string(options.hard_vertex_limit) +
                                " (set KTDOM_MAX_N to raise it, at your own risk)");
        std::vector<int> old_index;
        const bool whole = nc == g.order();
        const Graph sub = whole ? g : g.induced(comp, &old_index);
        ComponentBest best = nc <= options.exhaustive_threshold
                                 ? scan_component(sub, k, maximize, deadline)
                                 : branch_component(sub, k, maximize, deadline);
        result.value += best.value;
        result.nodes_explored += best.nodes;
        if (whole) {
            witness = best.witness;
        } else {
            for (Mask s = best.witness; s; s &= s - 1)
                witness |= vbit(old_index[static_cast<std::size_t>(lowest_bit(s))]);
        }
    }
    result.witness = VertexSet(g.order(), witness);
    result.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    return result;
}

}  // namespace

int SolveOptions::default_vertex_limit() {
    if (const char* env = std::getenv("KTDOM_MAX_N")) {
        try {
            const int v = std::stoi(env);
            return std::clamp(v, 1, kMaxVertices);
        } catch (const std::exception&) {
            throw ParameterError(std::string("KTDOM_MAX_N is not an integer: ") + env);
        }
    }
    return 32;
}

bool is_ktds(const Graph& g, const VertexSet& s, int k) {
    if (k < 1) throw ParameterError("k must be at least 1");
    if (s.host_size != g.order()) throw ParameterError("vertex set host does not match graph");
    for (int x = 0; x < g.order(); ++x)
        if (popcount(g.neighbors(x) & s.bits) < k) return false;
    return true;
}

std::vector<OpnWitness> opn_k(const Graph& g, const VertexSet& s, int v, int k) {
    if (k < 1) throw ParameterError("k must be at least 1");
    if (s.host_size != g.order()) throw ParameterError("vertex set host does not match graph");
    if (!s.contains(v))
        throw ParameterError("opn_k: vertex " + std::to_string(v) + " is not a member of S");
    std::vector<OpnWitness> out;
    for (int cand = 0; cand < g.order(); ++cand) {
        if (!(g.neighbors(cand) & vbit(v))) continue;
        const Mask trace = g.neighbors(cand) & s.bits;
        if (popcount(trace) != k) continue;
        OpnWitness w;
        w.witness = cand;
        w.trace = VertexSet(g.order(), trace);
        w.external = !s.contains(cand);
        out.push_back(w);
    }
    return out;
}

bool is_minimal_ktds(const Graph& g, const VertexSet& s, int k) {
    if (k < 1) throw ParameterError("k must be at least 1");
    if (s.host_size != g.order()) throw ParameterError("vertex set host does not match graph");
    Mask exactly = 0;
    for (int x = 0; x < g.order(); ++x) {
        const int cin = popcount(g.neighbors(x) & s.bits);
        if (cin < k) return false;
        if (cin == k) exactly |= vbit(x);
    }
    return minimal_from_exact(g, s.bits, exactly);
}

bool is_minimal_ktds_deletion(const Graph& g, const VertexSet& s, int k) {
    if (!is_ktds(g, s, k)) return false;
    for (Mask t = s.bits; t; t &= t - 1) {
        const VertexSet smaller(s.host_size, s.bits & ~vbit(lowest_bit(t)));
        if (is_ktds(g, smaller, k)) return false;
    }
    return true;
}

void enumerate_minimal_ktds(const Graph& g, int k,
                            const std::function<bool(const VertexSet&)>& visitor) {
    if (k < 1) throw ParameterError("k must be at least 1");
    if (g.min_degree() < k)
        throw DomainError("no kTDS exists: delta(G)=" + std::to_string(g.min_degree()) +
                          " < k=" + std::to_string(k));
    std::uint64_t nodes = 0;
    Deadline deadline;
    auto on_ktds = [&](Mask in, Mask exactly) {
        if (!minimal_from_exact(g, in, exactly)) return true;
        return visitor(VertexSet(g.order(), in));
    };
    auto prune = [](Mask, Mask, int) { return false; };
    minimal_dfs(g, k, Mask{0}, g.vertex_mask(), nodes, deadline, on_ktds, prune);
}

std::vector<VertexSet> collect_minimal_ktds(const Graph& g, int k) {
    std::vector<VertexSet> out;
    enumerate_minimal_ktds(g, k, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::uint64_t count_minimal_ktds(const Graph& g, int k) {
    if (g.min_degree() < k) return 0;  // the family is empty, not an error
    std::uint64_t count = 0;
    enumerate_minimal_ktds(g, k, [&](const VertexSet&) {
        ++count;
        return true;
    });
    return count;
}

SolveResult gamma_ktt(const Graph& g, int k, const SolveOptions& options) {
    return solve(g, k, options, /*maximize=*/false);
}

SolveResult Gamma_ktt(const Graph& g, int k, const SolveOptions& options) {
    return solve(g, k, options, /*maximize=*/true);
}

std::optional<VertexSet> is_gamma_external(const Graph& g, int k, const SolveOptions& options) {
    const int target = Gamma_ktt(g, k, options).value;
    Deadline deadline = Deadline::from(options);
    const int delta = g.min_degree();
    const int cap = delta >= k + 1 ? g.order() - delta + k : g.order();
    std::optional<VertexSet> found;
    std::uint64_t nodes = 0;
    auto on_ktds = [&](Mask in, Mask exactly) {
        if (popcount(in) != target || !minimal_from_exact(g, in, exactly)) return true;
        const Mask external_exact = exactly & ~in;
        for (Mask t = in; t; t &= t - 1)
            if (!(g.neighbors(lowest_bit(t)) & external_exact)) return true;
        found = VertexSet(g.order(), in);
        return false;  // lexicographically first qualifying set wins
    };
    auto prune = [&](Mask in, Mask und, int) {
        const int sz = popcount(in);
        if (sz > cap) return true;
        return std::min(sz + popcount(und), cap) < target;
    };
    minimal_dfs(g, k, Mask{0}, g.vertex_mask(), nodes, deadline, on_ktds, prune);
    return found;
}

}  // namespace ktdom
