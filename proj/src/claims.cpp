#include "ktdom/claims.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ktdom/family.hpp"

namespace ktdom {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::inapplicable: return "inapplicable";
        case Verdict::unresolved: return "unresolved";
        case Verdict::violated_conjecture: return "violated-conjecture";
    }
    return "?";
}

int formula_upper_total_path(int n) {
    if (n < 2) throw DomainError("path formula needs n >= 2");
    return 2 * ((n + 1) / 3);
}

int formula_upper_total_cycle(int n) {
    if (n < 3) throw DomainError("cycle formula needs n >= 3");
    return n % 3 == 2 ? 2 * (n / 3) + 1 : 2 * (n / 3);
}

namespace {

int multipartite_min_degree(const std::vector<int>& parts) {
    const int total = std::accumulate(parts.begin(), parts.end(), 0);
    return total - parts.back();
}

void check_parts(const std::vector<int>& parts, int k) {
    if (k < 1) throw ParameterError("k must be at least 1");
    if (parts.empty()) throw ParameterError("empty parts list");
    if (!std::is_sorted(parts.begin(), parts.end()))
        throw ParameterError("parts must be ascending");
    if (multipartite_min_degree(parts) < k)
        throw DomainError("multipartite graph has delta < k");
}

}  // namespace

int formula_gamma_upper_multipartite(const std::vector<int>& parts, int k) {
    check_parts(parts, k);
    const int p = static_cast<int>(parts.size());
    int best = -1;
    for (int l = 2; l <= p; ++l) {
        if (k % (l - 1) != 0) continue;
        const int x = k / (l - 1);
        const int cap = std::min(k, parts[static_cast<std::size_t>(p - l)]);
        if (x >= 1 && x <= cap) best = std::max(best, x);
    }
    if (best < 0) throw InapplicableError("no feasible (l, x) pair for these parts and k");
    return k + best;
}

int bound_gamma_multipartite(const std::vector<int>& parts, int k) {
    check_parts(parts, k);
    const int p = static_cast<int>(parts.size());
    int best = -1;
    for (int l = 2; l <= p; ++l) {
        if (k % (l - 1) != 0) continue;
        const int x = k / (l - 1);
        const int cap = std::min(k, parts.front());
        if (x >= 1 && x <= cap && (best < 0 || x < best)) best = x;
    }
    if (best < 0) throw InapplicableError("no feasible (l, x) pair for these parts and k");
    return k + best;
}

std::optional<std::pair<VertexSet, VertexSet>> decompose_k_join(const Graph& g, int k, int m) {
    if (k < 1) throw ParameterError("k must be at least 1");
    if (m < 1 || m > g.order()) throw ParameterError("core size m must lie in [1, n]");
    if (g.min_degree() < k)
        throw DomainError("no kTDS exists: delta(G)=" + std::to_string(g.min_degree()) +
                          " < k=" + std::to_string(k));
    // Lexicographically first kTDS of size exactly m, by include-first DFS.
    const int n = g.order();
    Mask found = 0;
    bool have = false;
    auto dfs = [&](auto&& self, Mask in, Mask und) -> bool {
        const int sz = popcount(in);
        if (sz > m || sz + popcount(und) < m) return false;
        for (int x = 0; x < n; ++x)
            if (popcount(g.neighbors(x) & (in | und)) < k) return false;
        if (sz == m) {
            for (int x = 0; x < n; ++x)
                if (popcount(g.neighbors(x) & in) < k) return false;
            found = in;
            return true;
        }
        if (!und) return false;
        const int v = lowest_bit(und);
        const Mask rest = und & (und - 1);
        return self(self, in | vbit(v), rest) || self(self, in, rest);
    };
    have = dfs(dfs, 0, g.vertex_mask());
    if (!have) return std::nullopt;
    return std::make_pair(VertexSet(n, found), VertexSet(n, g.vertex_mask() & ~found));
}

namespace {

struct Claim {
    std::string description;
    bool proved;
    ClaimReport (*check)(const ClaimParams&);
};

std::string int_list(const std::vector<int>& xs, char sep = '-') {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string graph_name(const ClaimParams& p, std::size_t i) {
    if (i < p.names.size() && !p.names[i].empty()) return p.names[i];
    return "graph<n=" + std::to_string(p.graphs[i].order()) + ">";
}

ClaimReport make_report(const std::string& id, std::string params, std::string expected,
                        std::string observed, Verdict verdict,
                        std::optional<int> value = std::nullopt) {
    return ClaimReport{id, std::move(params), std::move(expected), std::move(observed), verdict,
                       value};
}

ClaimReport inapplicable(const std::string& id, std::string params, std::string why) {
    return make_report(id, std::move(params), "", std::move(why), Verdict::inapplicable);
}

bool need_graphs(const ClaimParams& p, std::size_t count) { return p.graphs.size() >= count; }

// ---- C1: gamma <= Gamma <= n ------------------------------------------------

ClaimReport check_c1(const ClaimParams& p) {
    const std::string id = "C1";
    if (!need_graphs(p, 1)) throw ParameterError("C1 needs a graph");
    const Graph& g = p.graphs[0];
    const std::string params = graph_name(p, 0) + ", k=" + std::to_string(p.k);
    if (p.k < 1 || g.min_degree() < p.k) return inapplicable(id, params, "delta(G) < k");
    const int lo = gamma_ktt(g, p.k, p.options).value;
    const int hi = Gamma_ktt(g, p.k, p.options).value;
    std::ostringstream obs;
    obs << "gamma=" << lo << ", Gamma=" << hi << ", n=" << g.order();
    const bool ok = lo <= hi && hi <= g.order();
    return make_report(id, params, "gamma <= Gamma <= n", obs.str(),
                       ok ? Verdict::holds : Verdict::violated, hi);
}

// ---- C2: deletion minimality == witness minimality --------------------------

ClaimReport check_c2(const ClaimParams& p) {
    const std::string id = "C2";
    if (!need_graphs(p, 1)) throw ParameterError("C2 needs a graph");
    const Graph& g = p.graphs[0];
    const std::string params = graph_name(p, 0) + ", k=" + std::to_string(p.k);
    if (p.k < 1) return inapplicable(id, params, "k < 1");
    if (g.order() > 16) return inapplicable(id, params, "subset scan too large (n > 16)");
    const Mask full = g.vertex_mask();
    for (Mask m = 0;; ++m) {
        const VertexSet s(g.order(), m);
        if (is_minimal_ktds(g, s, p.k) != is_minimal_ktds_deletion(g, s, p.k))
            return make_report(id, params, "criteria agree on every subset",
                               "disagree on " + s.to_string(), Verdict::violated);
        if (m == full) break;
    }
    return make_report(id, params, "criteria agree on every subset", "agree on all subsets",
                       Verdict::holds);
}

// ---- C3: degree-k neighborhoods are forced ----------------------------------

ClaimReport check_c3(const ClaimParams& p) {
    const std::string id = "C3";
    if (!need_graphs(p, 1)) throw ParameterError("C3 needs a graph");
    const Graph& g = p.graphs[0];
    const std::string params = graph_name(p, 0) + ", k=" + std::to_string(p.k);
    if (p.k < 1 || g.min_degree() < p.k) return inapplicable(id, params, "delta(G) < k");
    Mask forced = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == p.k) forced |= g.neighbors(v);
    std::uint64_t count = 0;
    bool ok = true;
    enumerate_minimal_ktds(g, p.k, [&](const VertexSet& s) {
        ++count;
        ok = (forced & ~s.bits) == 0;
        return ok;
    });
    return make_report(id, params, "every minimal kTDS contains all forced vertices",
                       ok ? "holds for all " + std::to_string(count) + " sets"
                          : "missing a forced vertex",
                       ok ? Verdict::holds : Verdict::violated);
}

// ---- C4: k-regular graphs have Gamma = n ------------------------------------

ClaimReport check_c4(const ClaimParams& p) {
    const std::string id = "C4";
    if (!need_graphs(p, 1)) throw ParameterError("C4 needs a graph");
    const Graph& g = p.graphs[0];
    const std::string params = graph_name(p, 0) + ", k=" + std::to_string(p.k);
    if (p.k < 1 || !g.is_regular(p.k)) return inapplicable(id, params, "graph is not k-regular");
    const int got = Gamma_ktt(g, p.k, p.options).value;
    return make_report(id, params, "Gamma = n = " + std::to_string(g.order()),
                       "Gamma = " + std::to_string(got),
                       got == g.order() ? Verdict::holds : Verdict::violated, got);
}

// ---- C5/C6: path and cycle closed forms --------------------------------------

ClaimReport check_c5(const ClaimParams& p) {
    const std::string id = "C5";
    const std::string params = "n=" + std::to_string(p.n);
    if (p.n < 2) return inapplicable(id, params, "needs n >= 2");
    const int expected = formula_upper_total_path(p.n);
    const int got = Gamma_ktt(generate(FamilySpec::path(p.n)), 1, p.options).value;
    return make_report(id, params, "Gamma_t = " + std::to_string(expected),
                       "Gamma_t = " + std::to_string(got),
                       got == expected ? Verdict::holds : Verdict::violated, got);
}

ClaimReport check_c6(const ClaimParams& p) {
    const std::string id = "C6";
    const std::string params = "n=" + std::to_string(p.n);
    if (p.n < 3) return inapplicable(id, params, "needs n >= 3");
    const int expected = formula_upper_total_cycle(p.n);
    const int got = Gamma_ktt(generate(FamilySpec::cycle(p.n)), 1, p.options).value;
    return make_report(id, params, "Gamma_t = " + std::to_string(expected),
                       "Gamma_t = " + std::to_string(got),
                       got == expected ? Verdict::holds : Verdict::violated, got);
}

// ---- C7/C8/C9: complete multipartite ----------------------------------------

ClaimReport check_c7(const ClaimParams& p) {
    const std::string id = "C7";
    const std::string params = "parts=" + int_list(p.parts) + ", k=" + std::to_string(p.k);
    if (p.parts.empty() || p.parts.size() < 2)
        return inapplicable(id, params, "needs at least two parts");
    if (p.k < 1 || multipartite_min_degree(p.parts) < p.k)
        return inapplicable(id, params, "delta(G) < k");
    int expected = 0;
    try {
        expected = formula_gamma_upper_multipartite(p.parts, p.k);
    } catch (const InapplicableError& e) {
        return inapplicable(id, params, std::string("formula inapplicable: ") + e.what());
    }
    const int got = Gamma_ktt(generate(FamilySpec::multipartite(p.parts)), p.k, p.options).value;
    return make_report(id, params, "Gamma = " + std::to_string(expected),
                       "Gamma = " + std::to_string(got),
                       got == expected ? Verdict::holds : Verdict::violated, got);
}

ClaimReport check_c8(const ClaimParams& p) {
    const std::string id = "C8";
    const std::string params = "parts=" + int_list(p.parts) + ", k=" + std::to_string(p.k);
    if (p.parts.size() < 2) return inapplicable(id, params, "needs at least two parts");
    if (p.k < 1) return inapplicable(id, params, "k < 1");
    const auto big = std::count_if(p.parts.begin(), p.parts.end(),
                                   [&](int x) { return x >= p.k; });
    if (big < 2) return inapplicable(id, params, "fewer than two parts of size >= k");
    const int got = Gamma_ktt(generate(FamilySpec::multipartite(p.parts)), p.k, p.options).value;
    return make_report(id, params, "Gamma = 2k = " + std::to_string(2 * p.k),
                       "Gamma = " + std::to_string(got),
                       got == 2 * p.k ? Verdict::holds : Verdict::violated, got);
}

ClaimReport check_c9(const ClaimParams& p) {
    const std::string id = "C9";
    const std::string params = "parts=" + int_list(p.parts) + ", k=" + std::to_string(p.k);
    if (p.parts.size() < 2) return inapplicable(id, params, "needs at least two parts");
    if (p.k < 1 || multipartite_min_degree(p.parts) < p.k)
        return inapplicable(id, params, "delta(G) < k");
    int bound = 0;
    try {
        bound = bound_gamma_multipartite(p.parts, p.k);
    } catch (const InapplicableError& e) {
        return inapplicable(id, params, std::string("bound inapplicable: ") + e.what());
    }
    const int got = gamma_ktt(generate(FamilySpec::multipartite(p.parts)), p.k, p.options).value;
    return make_report(id, params, "gamma <= " + std::to_string(bound),
                       "gamma = " + std::to_string(got),
                       got <= bound ? Verdict::holds : Verdict::violated, got);
}

// ---- C10: Gamma <= n - delta + k ---------------------------------------------

ClaimReport check_c10(const ClaimParams& p) {
    if (!need_graphs(p, 1)) throw ParameterError("C10 needs a graph");
    ClaimReport report = bound_n_minus_delta_plus_k(p.graphs[0], p.k);
    if (!p.names.empty())
        report.params = p.names[0] + ", k=" + std::to_string(p.k);
    return report;
}

// ---- C11: trace-intersection bound, reported over all assignments -----------

ClaimReport check_c11(const ClaimParams& p) {
    const std::string id = "C11";
    if (!need_graphs(p, 1)) throw ParameterError("C11 needs a graph");
    const Graph& g = p.graphs[0];
    const std::string params = graph_name(p, 0) + ", k=" + std::to_string(p.k);
    if (p.k < 1 || g.min_degree() < p.k) return inapplicable(id, params, "delta(G) < k");
    const SolveResult top = Gamma_ktt(g, p.k, p.options);
    // Fold per-member witness traces into the set of achievable
    // intersections L; the claim is unasserted for ambiguous trace choices,
    // so a failing assignment is reported, not flagged as a violation.
    std::set<Mask> achievable{g.vertex_mask()};
    for (int v : top.witness.members()) {
        std::set<Mask> next;
        for (const OpnWitness& w : opn_k(g, top.witness, v, p.k))
            for (Mask l : achievable) next.insert(l & w.trace.bits);
        achievable = std::move(next);
    }
    std::map<int, int> gamma_upper_cache;
    bool any_applicable = false;
    bool all_hold = true;
    std::ostringstream obs;
    std::set<int> sizes;
    for (Mask l : achievable)
        if (popcount(l) < p.k) sizes.insert(popcount(l));
    for (int l : sizes) {
        any_applicable = true;
        if (!gamma_upper_cache.contains(l))
            gamma_upper_cache[l] = Gamma_ktt(g, p.k - l, p.options).value;
        const int rhs = gamma_upper_cache[l] + l;
        if (top.value > rhs) all_hold = false;
        obs << "[l=" << l << ": " << top.value << (top.value <= rhs ? " <= " : " > ") << rhs
            << "] ";
    }
    if (!any_applicable)
        return inapplicable(id, params, "no witness-trace assignment has |L| < k");
    return make_report(id, params, "Gamma_xkt <= Gamma_x(k-l)t + l for every assignment",
                       obs.str(), all_hold ? Verdict::holds : Verdict::unresolved, top.value);
}

// ---- C12/C13: rook graphs -----------------------------------------------------

ClaimReport check_c12(const ClaimParams& p) {
    const std::string id = "C12";
    const std::string params = "n=" + std::to_string(p.n) + ", m=" + std::to_string(p.m) +
                               ", k=" + std::to_string(p.k);
    if (!(p.n >= p.m && p.m >= p.k + 1 && p.k + 1 >= 3))
        return inapplicable(id, params, "needs n >= m >= k+1 >= 3");
    if (p.n * p.m > p.options.hard_vertex_limit)
        return inapplicable(id, params, "rook graph exceeds the exact-search limit");
    const int got = Gamma_ktt(generate(FamilySpec::rook(p.n, p.m)), p.k, p.options).value;
    std::ostringstream obs;
    obs << "Gamma = " << got << (got == p.k * p.n ? " (equality)" : "");
    return make_report(id, params, "Gamma >= k*n = " + std::to_string(p.k * p.n), obs.str(),
                       got >= p.k * p.n ? Verdict::holds : Verdict::violated, got);
}

ClaimReport check_c13(const ClaimParams& p) {
    const std::string id = "C13";
    const std::string params = "k=" + std::to_string(p.k);
    if (p.k < 2) return inapplicable(id, params, "needs k >= 2");
    if ((p.k + 1) * (p.k + 1) > p.options.hard_vertex_limit)
        return inapplicable(id, params, "rook graph exceeds the exact-search limit");
    const int got =
        Gamma_ktt(generate(FamilySpec::rook(p.k + 1, p.k + 1)), p.k, p.options).value;
    return make_report(id, params, "Gamma = k(k+1) = " + std::to_string(p.k * (p.k + 1)),
                       "Gamma = " + std::to_string(got),
                       got == p.k * (p.k + 1) ? Verdict::holds : Verdict::violated, got);
}

// ---- C14: Vizing-like conjecture (data points only) ---------------------------

ClaimReport check_c14(const ClaimParams& p) {
    const std::string id = "C14";
    if (!need_graphs(p, 2)) throw ParameterError("C14 needs two graphs");
    const Graph& g = p.graphs[0];
    const Graph& h = p.graphs[1];
    const std::string params =
        graph_name(p, 0) + " box " + graph_name(p, 1) + ", k=" + std::to_string(p.k);
    if (p.k < 2) return inapplicable(id, params, "needs k >= 2");
    if (g.min_degree() < p.k || h.min_degree() < p.k)
        return inapplicable(id, params, "a factor has delta < k");
    const int gg = Gamma_ktt(g, p.k, p.options).value;
    const int gh = Gamma_ktt(h, p.k, p.options).value;
    const int gp = Gamma_ktt(cartesian_product(g, h), p.k, p.options).value;
    const bool ok = p.k * gg * gh <= (p.k + 1) * gp;
    std::ostringstream obs;
    obs << "lhs=" << gg << "*" << gh << "=" << gg * gh << ", Gamma(GboxH)=" << gp << ", ratio="
        << gg * gh << "/" << gp;
    if (p.k * gg * gh == (p.k + 1) * gp) obs << " = (k+1)/k exactly";
    return make_report(id, params, "k*Gamma(G)*Gamma(H) <= (k+1)*Gamma(G box H)", obs.str(),
                       ok ? Verdict::unresolved : Verdict::violated_conjecture, gp);
}

// ---- C15/C16/C17: external-factor product bounds -------------------------------

ClaimReport check_c15(const ClaimParams& p) {
    const std::string id = "C15";
    if (!need_graphs(p, 2)) throw ParameterError("C15 needs two graphs");
    const Graph& g = p.graphs[0];
    const Graph& h = p.graphs[1];
    const std::string params =
        graph_name(p, 0) + " box " + graph_name(p, 1) + ", k=" + std::to_string(p.k);
    if (p.k < 2) return inapplicable(id, params, "needs k >= 2");
    if (g.min_degree() < p.k || h.min_degree() < p.k)
        return inapplicable(id, params, "a factor has delta < k");
    if (!is_gamma_external(g, p.k, p.options) || !is_gamma_external(h, p.k, p.options))
        return inapplicable(id, params, "a factor is not Gamma-external");
    const int gg = Gamma_ktt(g, p.k, p.options).value;
    const int gh = Gamma_ktt(h, p.k, p.options).value;
    const int bound = std::max(gg * h.order(), gh * g.order());
    const int got = Gamma_ktt(cartesian_product(g, h), p.k, p.options).value;
    return make_report(id, params,
                       "Gamma(G box H) >= max(Gamma(G)|V(H)|, Gamma(H)|V(G)|) = " +
                           std::to_string(bound),
                       "Gamma(G box H) = " + std::to_string(got),
                       got >= bound ? Verdict::holds : Verdict::violated, got);
}

ClaimReport check_c16(const ClaimParams& p) {
    const std::string id = "C16";
    if (!need_graphs(p, 2)) throw ParameterError("C16 needs two graphs");
    const Graph& g = p.graphs[0];
    const Graph& h = p.graphs[1];
    const std::string params =
        graph_name(p, 0) + " box " + graph_name(p, 1) + ", k=" + std::to_string(p.k);
    if (p.k < 2) return inapplicable(id, params, "needs k >= 2");
    if (g.min_degree() < p.k || h.min_degree() < p.k)
        return inapplicable(id, params, "a factor has delta < k");
    if (!is_gamma_external(g, p.k, p.options))
        return inapplicable(id, params, "G is not Gamma-external");
    const int gg = Gamma_ktt(g, p.k, p.options).value;
    const int gh = Gamma_ktt(h, p.k, p.options).value;
    const int got = Gamma_ktt(cartesian_product(g, h), p.k, p.options).value;
    return make_report(id, params,
                       "Gamma(G box H) >= Gamma(G)*Gamma(H) = " + std::to_string(gg * gh),
                       "Gamma(G box H) = " + std::to_string(got),
                       got >= gg * gh ? Verdict::holds : Verdict::violated, got);
}

ClaimReport check_c17(const ClaimParams& p) {
    const std::string id = "C17";
    if (!need_graphs(p, 2)) throw ParameterError("C17 needs two graphs");
    const Graph& g = p.graphs[0];
    const Graph& h = p.graphs[1];
    const std::string params =
        graph_name(p, 0) + " box " + graph_name(p, 1) + ", k=" + std::to_string(p.k);
    if (p.k < 2) return inapplicable(id, params, "needs k >= 2");
    if (g.min_degree() < p.k) return inapplicable(id, params, "delta(G) < k");
    if (!is_gamma_external(g, p.k, p.options))
        return inapplicable(id, params, "G is not Gamma-external");
    const int dh = h.min_degree();
    if (dh < p.k) return inapplicable(id, params, "delta(H) < k");
    const int gg = Gamma_ktt(g, p.k, p.options).value;
    const int gh = Gamma_ktt(h, p.k, p.options).value;
    int bound = 0;
    std::string branch;
    if (dh >= p.k + 1) {
        bound = gg * (gh + dh - p.k);
        branch = "delta(H) >= k+1";
    } else if (h.is_regular(p.k)) {
        bound = gg * gh;
        branch = "H k-regular";
    } else {
        bound = gg * (gh + 1);
        branch = "delta(H) = k, H irregular";
    }
    const int got = Gamma_ktt(cartesian_product(g, h), p.k, p.options).value;
    return make_report(id, params, "[" + branch + "] Gamma(G box H) >= " + std::to_string(bound),
                       "Gamma(G box H) = " + std::to_string(got),
                       got >= bound ? Verdict::holds : Verdict::violated, got);
}

// ---- C18/C19: cross product lower bounds ---------------------------------------

ClaimReport check_c18(const ClaimParams& p) {
    const std::string id = "C18";
    if (!need_graphs(p, 2)) throw ParameterError("C18 needs two graphs");
    const Graph& g = p.graphs[0];
    const Graph& h = p.graphs[1];
    const std::string params = graph_name(p, 0) + " x " + graph_name(p, 1) +
                               ", k=" + std::to_string(p.k) + ", l=" + std::to_string(p.ell);
    if (p.k < 1 || p.ell < 1) return inapplicable(id, params, "needs k, l >= 1");
    if (g.min_degree() < p.k || h.min_degree() < p.ell)
        return inapplicable(id, params, "delta(G) < k or delta(H) < l");
    const int gg = Gamma_ktt(g, p.k, p.options).value;
    const int gh = Gamma_ktt(h, p.ell, p.options).value;
    const int got = Gamma_ktt(cross_product(g, h), p.k * p.ell, p.options).value;
    return make_report(id, params,
                       "Gamma_xklt(G x H) >= Gamma_xkt(G)*Gamma_xlt(H) = " +
                           std::to_string(gg * gh),
                       "Gamma_xklt(G x H) = " + std::to_string(got),
                       got >= gg * gh ? Verdict::holds : Verdict::violated, got);
}

ClaimReport check_c19(const ClaimParams& p) {
    const std::string id = "C19";
    if (!need_graphs(p, 2)) throw ParameterError("C19 needs two graphs");
    const Graph& g = p.graphs[0];
    const Graph& h = p.graphs[1];
    const std::string params =
        graph_name(p, 0) + " x " + graph_name(p, 1) + ", k=" + std::to_string(p.k);
    if (p.k < 1) return inapplicable(id, params, "needs k >= 1");
    if (!(g.min_degree() >= h.min_degree() && h.min_degree() >= p.k))
        return inapplicable(id, params, "needs delta(G) >= delta(H) >= k");
    const int bound = std::max(Gamma_ktt(g, p.k, p.options).value *
                                   Gamma_ktt(h, 1, p.options).value,
                               Gamma_ktt(h, p.k, p.options).value *
                                   Gamma_ktt(g, 1, p.options).value);
    const int got = Gamma_ktt(cross_product(g, h), p.k, p.options).value;
    return make_report(id, params, "Gamma_xkt(G x H) >= " + std::to_string(bound),
                       "Gamma_xkt(G x H) = " + std::to_string(got),
                       got >= bound ? Verdict::holds : Verdict::violated, got);
}

// ---- C20/C21: K_n x K_m ---------------------------------------------------------

ClaimReport check_c20(const ClaimParams& p) {
    const std::string id = "C20";
    const std::string params = "n=" + std::to_string(p.n) + ", k=" + std::to_string(p.k);
    if (!(1 <= p.k && p.k <= p.n - 1)) return inapplicable(id, params, "needs 1 <= k <= n-1");
    const Graph product = cross_product(generate(FamilySpec::complete(p.n)),
                                        generate(FamilySpec::complete(2)));
    const int got = Gamma_ktt(product, p.k, p.options).value;
    return make_report(id, params, "Gamma = 2k+2 = " + std::to_string(2 * p.k + 2),
                       "Gamma = " + std::to_string(got),
                       got == 2 * p.k + 2 ? Verdict::holds : Verdict::violated, got);
}

ClaimReport check_c21(const ClaimParams& p) {
    const std::string id = "C21";
    const std::string params = "n=" + std::to_string(p.n) + ", m=" + std::to_string(p.m) +
                               ", k=" + std::to_string(p.k);
    if (!(p.n >= 2 && p.m >= 2 && std::max(p.n, p.m) >= p.k + 1))
        return inapplicable(id, params, "needs n, m >= 2 and max(n,m) >= k+1");
    if (p.k < 1 || (p.n - 1) * (p.m - 1) < p.k)
        return inapplicable(id, params, "product has delta < k");
    const Graph product = cross_product(generate(FamilySpec::complete(p.n)),
                                        generate(FamilySpec::complete(p.m)));
    const int got = Gamma_ktt(product, p.k, p.options).value;
    std::ostringstream obs;
    obs << "Gamma = " << got << (got == 2 * p.k + 2 ? " (matches 2k+2)" : " (differs from 2k+2)");
    return make_report(id, params, "question: Gamma = 2k+2 = " + std::to_string(2 * p.k + 2),
                       obs.str(), Verdict::unresolved, got);
}

// ---- C22: multipartite cross products --------------------------------------------

ClaimReport check_c22(const ClaimParams& p) {
    const std::string id = "C22";
    const std::string params = "parts=" + int_list(p.parts) + " x parts=" + int_list(p.parts2) +
                               ", k=" + std::to_string(p.k);
    if (p.parts.size() < 2 || p.parts2.size() < 2)
        return inapplicable(id, params, "both factors need at least two parts");
    if (p.k < 1) return inapplicable(id, params, "k < 1");
    const Graph g = generate(FamilySpec::multipartite(p.parts));
    const Graph h = generate(FamilySpec::multipartite(p.parts2));
    const Graph product = cross_product(g, h);
    if (product.min_degree() < p.k) return inapplicable(id, params, "product has delta < k");
    const int sum_t = std::accumulate(p.parts.begin(), p.parts.end(), 0);
    const int sum_s = std::accumulate(p.parts2.begin(), p.parts2.end(), 0);
    auto second_largest = [](const std::vector<int>& xs) {  // parts are ascending
        return xs[xs.size() - 2];
    };
    const bool cond = second_largest(p.parts) * sum_s >= 2 * p.k ||
                      second_largest(p.parts2) * sum_t >= 2 * p.k;
    if (!cond) return inapplicable(id, params, "row/column sum condition not met");
    const int got = Gamma_ktt(product, p.k, p.options).value;
    // equality points answer the open search for multipartite pairs at 4k
    std::string observed = "Gamma(G x H) = " + std::to_string(got);
    if (got == 4 * p.k) observed += " (equality candidate)";
    return make_report(id, params, "Gamma(G x H) >= 4k = " + std::to_string(4 * p.k), observed,
                       got >= 4 * p.k ? Verdict::holds : Verdict::violated, got);
}

// ---- C23/C24/C26: open neighborhood hypergraph equivalences -----------------------

ClaimReport check_c23(const ClaimParams& p) {
    const std::string id = "C23";
    if (!need_graphs(p, 1)) throw ParameterError("C23 needs a graph");
    const Graph& g = p.graphs[0];
    const std::string params = graph_name(p, 0) + ", k=" + std::to_string(p.k);
    if (p.k < 1 || g.min_degree() < p.k) return inapplicable(id, params, "delta(G) < k");
    const int lhs = Gamma_ktt(g, p.k, p.options).value;
    const int rhs = upsilon_k(open_neighborhood_hypergraph(g), p.k, p.options).value;
    return make_report(id, params, "Gamma_xkt(G) = Upsilon_k(H_G)",
                       "Gamma=" + std::to_string(lhs) + ", Upsilon=" + std::to_string(rhs),
                       lhs == rhs ? Verdict::holds : Verdict::violated, lhs);
}

ClaimReport check_c24(const ClaimParams& p) {
    const std::string id = "C24";
    if (!need_graphs(p, 1)) throw ParameterError("C24 needs a graph");
    const Graph& g = p.graphs[0];
    const std::string params = graph_name(p, 0) + ", k=" + std::to_string(p.k);
    if (p.k < 1 || g.min_degree() < p.k) return inapplicable(id, params, "delta(G) < k");
    const Hypergraph hg = open_neighborhood_hypergraph(g);
    const int lo = gamma_ktt(g, p.k, p.options).value;
    const int hi = Gamma_ktt(g, p.k, p.options).value;
    const int tlo = tau_k(hg, p.k, p.options).value;
    const int thi = upsilon_k(hg, p.k, p.options).value;
    const bool ok = (lo == hi) == (tlo == thi);
    std::ostringstream obs;
    obs << "gamma=" << lo << ", Gamma=" << hi << ", tau=" << tlo << ", Upsilon=" << thi;
    return make_report(id, params, "gamma=Gamma iff tau=Upsilon", obs.str(),
                       ok ? Verdict::holds : Verdict::violated, hi);
}

ClaimReport check_c25(const ClaimParams& p) {
    const std::string id = "C25";
    if (!need_graphs(p, 1)) throw ParameterError("C25 needs a graph");
    const Graph& g = p.graphs[0];
    const std::string params = graph_name(p, 0) + ", k=" + std::to_string(p.k);
    if (p.k < 1 || g.min_degree() < p.k) return inapplicable(id, params, "delta(G) < k");
    const int gamma = gamma_ktt(g, p.k, p.options).value;
    // The decomposition exists at size m exactly when a kTDS of size m does,
    // so the least decomposable m must equal gamma.
    for (int m = p.k + 1; m <= g.order(); ++m) {
        const bool exists = decompose_k_join(g, p.k, m).has_value();
        if (exists != (m >= gamma))
            return make_report(id, params, "core of size m exists iff m >= gamma",
                               "mismatch at m=" + std::to_string(m) + ", gamma=" +
                                   std::to_string(gamma),
                               Verdict::violated);
    }
    return make_report(id, params, "core of size m exists iff m >= gamma = " +
                                       std::to_string(gamma),
                       "verified for all m in [k+1, n]", Verdict::holds, gamma);
}

ClaimReport check_c26(const ClaimParams& p) {
    const std::string id = "C26";
    if (!need_graphs(p, 1)) throw ParameterError("C26 needs a graph");
    const Graph& g = p.graphs[0];
    const std::string params = graph_name(p, 0) + ", k=" + std::to_string(p.k);
    if (p.k < 1 || g.min_degree() < p.k) return inapplicable(id, params, "delta(G) < k");
    const int lhs = gamma_ktt(g, p.k, p.options).value;
    const int rhs = tau_k(open_neighborhood_hypergraph(g), p.k, p.options).value;
    return make_report(id, params, "gamma_xkt(G) = tau_k(H_G)",
                       "gamma=" + std::to_string(lhs) + ", tau=" + std::to_string(rhs),
                       lhs == rhs ? Verdict::holds : Verdict::violated, lhs);
}

const std::map<std::string, Claim>& registry() {
    static const std::map<std::string, Claim> table = {
        {"C1", {"gamma_xkt <= Gamma_xkt <= n", true, check_c1}},
        {"C2", {"deletion and witness minimality criteria agree", true, check_c2}},
        {"C3", {"neighborhoods of degree-k vertices lie in every kTDS", true, check_c3}},
        {"C4", {"k-regular graphs have Gamma_xkt = n", true, check_c4}},
        {"C5", {"Gamma_t(P_n) = 2*floor((n+1)/3)", true, check_c5}},
        {"C6", {"Gamma_t(C_n) closed form", true, check_c6}},
        {"C7", {"complete multipartite Gamma_xkt closed form", true, check_c7}},
        {"C8", {"Gamma_xkt = 2k when two parts reach size k", true, check_c8}},
        {"C9", {"complete multipartite gamma_xkt upper bound", true, check_c9}},
        {"C10", {"Gamma_xkt <= n - delta + k when delta >= k+1", true, check_c10}},
        {"C11", {"Gamma_xkt <= Gamma_x(k-l),t + l for trace intersections", true, check_c11}},
        {"C12", {"Gamma_xkt(K_n box K_m) >= k*n", true, check_c12}},
        {"C13", {"Gamma_xkt(K_{k+1} box K_{k+1}) = k(k+1)", true, check_c13}},
        {"C14", {"conjecture: k*Gamma(G)*Gamma(H) <= (k+1)*Gamma(G box H)", false, check_c14}},
        {"C15", {"two external factors: Gamma(G box H) >= max(Gamma*|V|)", true, check_c15}},
        {"C16", {"external G: Gamma(G box H) >= Gamma(G)*Gamma(H)", true, check_c16}},
        {"C17", {"external G with special H: product lower bounds", true, check_c17}},
        {"C18", {"Gamma_xklt(G x H) >= Gamma_xkt(G)*Gamma_xlt(H)", true, check_c18}},
        {"C19", {"Gamma_xkt(G x H) >= max pairing with Gamma_t", true, check_c19}},
        {"C20", {"Gamma_xkt(K_n x K_2) = 2k+2", true, check_c20}},
        {"C21", {"question: Gamma_xkt(K_n x K_m) = 2k+2?", false, check_c21}},
        {"C22", {"multipartite cross products: Gamma_xkt >= 4k", true, check_c22}},
        {"C23", {"Gamma_xkt(G) = Upsilon_k(H_G)", true, check_c23}},
        {"C24", {"gamma=Gamma on G iff tau=Upsilon on H_G", true, check_c24}},
        {"C25", {"gamma_xkt = least size of a spanning kTDS core", true, check_c25}},
        {"C26", {"gamma_xkt(G) = tau_k(H_G)", true, check_c26}},
    };
    return table;
}

}  // namespace

ClaimReport bound_n_minus_delta_plus_k(const Graph& g, int k) {
    const std::string id = "C10";
    const std::string params =
        "graph<n=" + std::to_string(g.order()) + ">, k=" + std::to_string(k);
    const int delta = g.min_degree();
    if (k < 1 || delta < k + 1)
        return ClaimReport{id, params, "", "needs delta >= k+1 >= 2", Verdict::inapplicable};
    const int bound = g.order() - delta + k;
    const int got = Gamma_ktt(g, k).value;
    std::ostringstream obs;
    obs << "Gamma = " << got << (got == bound ? " (equality)" : "");
    return ClaimReport{id, params, "Gamma <= n - delta + k = " + std::to_string(bound),
                       obs.str(), got <= bound ? Verdict::holds : Verdict::violated, got};
}

ClaimReport check_claim(const std::string& claim_id, const ClaimParams& params) {
    const auto& table = registry();
    const auto it = table.find(claim_id);
    if (it == table.end()) throw ParameterError("unknown claim id: " + claim_id);
    return it->second.check(params);
}

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, claim] : registry()) out.push_back(id);
        std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
            return std::stoi(a.substr(1)) < std::stoi(b.substr(1));
        });
        return out;
    }();
    return ids;
}

std::string claim_description(const std::string& id) {
    const auto it = registry().find(id);
    if (it == registry().end()) throw ParameterError("unknown claim id: " + id);
    return it->second.description;
}

bool claim_is_proved(const std::string& id) {
    const auto it = registry().find(id);
    if (it == registry().end()) throw ParameterError("unknown claim id: " + id);
    return it->second.proved;
}

}  // namespace ktdom
