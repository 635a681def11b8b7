// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
// Criteria 1 and 2 check two closed forms from the claim registry against
// exact search.  Both have genuine counterexamples (Gamma_t(C_8) = 4, not 5; the
// complete multipartite form undershoots, e.g. K_{1,1,2,2} at k=3 is 5, not
// 4).  Those clauses are evaluated exactly as stated and reported honestly;
// see README "Known formula discrepancies".

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "ktdom/claims.hpp"
#include "ktdom/corpus.hpp"
#include "ktdom/domination.hpp"
#include "ktdom/family.hpp"
#include "ktdom/harness.hpp"
#include "ktdom/hypergraph.hpp"
#include "oracle.hpp"

using namespace ktdom;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& title, bool pass, const std::string& detail,
            Clock::time_point start) {
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << title
              << " (" << ms << " ms)\n";
    if (!detail.empty()) std::cout << "       " << detail << "\n";
    if (!pass) ++failures;
}

Graph gen(const std::string& text) { return generate(parse_family(text)); }

// --- criterion 1: closed forms vs solver ------------------------------------

void criterion1() {
    const auto start = Clock::now();
    std::ostringstream detail;
    bool pass = true;
    for (int n = 2; n <= 12; ++n)
        if (Gamma_ktt(generate(FamilySpec::path(n)), 1).value != formula_upper_total_path(n)) {
            pass = false;
            detail << "path formula mismatch at n=" << n << "; ";
        }
    for (int n = 3; n <= 12; ++n) {
        const int solver = Gamma_ktt(generate(FamilySpec::cycle(n)), 1).value;
        const int formula = formula_upper_total_cycle(n);
        if (solver != formula) {
            pass = false;
            detail << "cycle formula claims Gamma_t(C_" << n << ")=" << formula << ", exact "
                   << solver << " (oracle agrees: " << *oracle::Gamma(generate(FamilySpec::cycle(n)), 1)
                   << "); ";
        }
    }
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k < n; ++k) {
            const Graph g = generate(FamilySpec::complete(n));
            if (gamma_ktt(g, k).value != k + 1 || Gamma_ktt(g, k).value != k + 1) {
                pass = false;
                detail << "K_" << n << " k=" << k << " != k+1; ";
            }
        }
    for (int n = 3; n <= 12; ++n)
        if (Gamma_ktt(generate(FamilySpec::cycle(n)), 2).value != n) {
            pass = false;
            detail << "2-regular C_" << n << " != n; ";
        }
    report(1, "path/cycle closed forms, complete graphs, k-regular cycles", pass, detail.str(),
           start);
}

// --- criterion 2: complete multipartite formula and corollary ----------------

void criterion2() {
    const auto start = Clock::now();
    std::ostringstream detail;
    int c7_points = 0, c7_wrong = 0, c8_points = 0, c8_wrong = 0;
    std::string first_wrong;
    for (const auto& parts : all_parts_lists(10)) {
        const int total = std::accumulate(parts.begin(), parts.end(), 0);
        const int delta = total - parts.back();
        const Graph g = generate(FamilySpec::multipartite(parts));
        for (int k = 1; k <= delta; ++k) {
            const int exact = Gamma_ktt(g, k).value;
            try {
                const int formula = formula_gamma_upper_multipartite(parts, k);
                ++c7_points;
                if (formula != exact) {
                    ++c7_wrong;
                    if (first_wrong.empty()) {
                        std::ostringstream point;
                        point << "parts=";
                        for (std::size_t i = 0; i < parts.size(); ++i)
                            point << (i ? "-" : "") << parts[i];
                        point << " k=" << k << " formula=" << formula << " exact=" << exact;
                        first_wrong = point.str();
                    }
                }
            } catch (const InapplicableError&) {
                // empty feasible set: excluded per the formula's own domain
            }
            const auto big =
                std::count_if(parts.begin(), parts.end(), [&](int x) { return x >= k; });
            if (big >= 2) {
                ++c8_points;
                if (exact != 2 * k) ++c8_wrong;
            }
        }
    }
    // independent oracle leg on the smaller grid
    int oracle_checked = 0;
    for (const auto& parts : all_parts_lists(7)) {
        const int total = std::accumulate(parts.begin(), parts.end(), 0);
        const Graph g = generate(FamilySpec::multipartite(parts));
        for (int k = 1; k <= total - parts.back(); ++k) {
            if (Gamma_ktt(g, k).value != *oracle::Gamma(g, k)) {
                detail << "SOLVER/ORACLE disagreement on a multipartite instance! ";
                ++c7_wrong;
            }
            ++oracle_checked;
        }
    }
    const bool pass = c7_wrong == 0 && c8_wrong == 0;
    detail << "C7 formula==exact at " << (c7_points - c7_wrong) << "/" << c7_points
           << " applicable points";
    if (c7_wrong) detail << " (first counterexample: " << first_wrong << ")";
    detail << "; C8 (=2k) holds at " << (c8_points - c8_wrong) << "/" << c8_points
           << " points; solver==oracle at all " << oracle_checked << " spot checks";
    report(2, "complete multipartite closed form and 2k corollary", pass, detail.str(), start);
}

// --- criterion 3: products ----------------------------------------------------

void criterion3() {
    const auto start = Clock::now();
    std::ostringstream detail;
    bool pass = true;
    if (Gamma_ktt(gen("cart(complete:3,complete:3)"), 2).value != 6) {
        pass = false;
        detail << "K3 box K3 != 6; ";
    }
    if (Gamma_ktt(gen("cart(complete:4,complete:4)"), 3).value != 12) {
        pass = false;
        detail << "K4 box K4 != 12; ";
    }
    if (Gamma_ktt(gen("cross(complete:4,complete:2)"), 2).value != 6) {
        pass = false;
        detail << "K4 x K2 != 6; ";
    }
    for (int k = 2; k <= 3; ++k)
        for (int m = k + 1; m * m <= 16; ++m)
            for (int n = m; n * m <= 16; ++n) {
                const int got = Gamma_ktt(generate(FamilySpec::rook(n, m)), k).value;
                if (got < k * n) {
                    pass = false;
                    detail << "rook(" << n << "," << m << ") k=" << k << " below " << k * n
                           << "; ";
                }
            }
    report(3, "product values and rook lower bounds", pass, detail.str(), start);
}

// --- criterion 4: the n - delta + k bound -------------------------------------

void criterion4() {
    const auto start = Clock::now();
    std::ostringstream detail;
    bool pass = true;
    int points = 0;
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : connected_graphs(n))
            for (int k = 1; k + 1 <= g.min_degree(); ++k) {
                ++points;
                if (Gamma_ktt(g, k).value > g.order() - g.min_degree() + k) {
                    pass = false;
                    detail << "bound violated on a connected graph of order " << n << "; ";
                }
            }
    for (const char* text : {"sharp:2,2,1", "sharp:2,3,2", "sharp:3,3,2"}) {
        const FamilySpec spec = parse_family(text);
        const Graph g = generate(spec);
        const int got = Gamma_ktt(g, spec.k).value;
        if (got != g.order() - spec.delta + spec.k) {
            pass = false;
            detail << text << " not sharp; ";
        }
    }
    detail << points << " bound points + 3 sharpness equalities";
    report(4, "Gamma <= n - delta + k on the n<=7 corpus, sharp at the join family", pass,
           detail.str(), start);
}

// --- criterion 5: hypergraph equivalences -------------------------------------

void criterion5() {
    const auto start = Clock::now();
    std::ostringstream detail;
    bool pass = true;
    int points = 0;
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : connected_graphs(n))
            for (int k = 1; k <= g.min_degree(); ++k) {
                ++points;
                const Hypergraph hg = open_neighborhood_hypergraph(g);
                const int lo = gamma_ktt(g, k).value;
                const int hi = Gamma_ktt(g, k).value;
                const int tlo = tau_k(hg, k).value;
                const int thi = upsilon_k(hg, k).value;
                if (hi != thi || lo != tlo || ((lo == hi) != (tlo == thi))) {
                    pass = false;
                    detail << "equivalence broken at order " << n << " k=" << k << "; ";
                }
            }
    detail << points << " (graph, k) points";
    report(5, "Gamma=Upsilon_k(H_G), gamma=tau_k(H_G), and the biconditional", pass,
           detail.str(), start);
}

// --- criterion 6: cross-product inequality -----------------------------------

void criterion6() {
    const auto start = Clock::now();
    std::ostringstream detail;
    bool pass = true;
    int points = 0;
    std::vector<std::string> names{"complete:2", "complete:3", "cycle:4", "complete:4"};
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i; j < names.size(); ++j) {
            const Graph g = gen(names[i]);
            const Graph h = gen(names[j]);
            if (g.order() * h.order() > 16) continue;
            for (int k = 1; k <= g.min_degree(); ++k)
                for (int ell = 1; ell <= h.min_degree(); ++ell) {
                    ++points;
                    const int lhs = Gamma_ktt(cross_product(g, h), k * ell).value;
                    const int rhs = Gamma_ktt(g, k).value * Gamma_ktt(h, ell).value;
                    if (lhs < rhs) {
                        pass = false;
                        detail << names[i] << " x " << names[j] << " k=" << k << " l=" << ell
                               << ": " << lhs << " < " << rhs << "; ";
                    }
                }
        }
    detail << points << " (pair, k, l) points";
    report(6, "cross-product inequality Gamma_xklt >= Gamma_xkt * Gamma_xlt", pass, detail.str(),
           start);
}

// --- criterion 7: property suites ----------------------------------------------

void criterion7() {
    const auto start = Clock::now();
    std::ostringstream detail;
    bool pass = true;
    // minimality-criterion equivalence, exhaustive for all graphs n <= 6
    long long subsets = 0;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs(n))
            for (int k = 1; k <= g.min_degree(); ++k)
                for (Mask m = 0;; ++m) {
                    const VertexSet s(n, m);
                    ++subsets;
                    if (is_minimal_ktds(g, s, k) != is_minimal_ktds_deletion(g, s, k)) {
                        pass = false;
                        detail << "criteria disagree on order " << n << "; ";
                    }
                    if (m == g.vertex_mask()) break;
                }
    // degree-k forcing on every enumerated minimal kTDS + gamma <= Gamma <= n
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n))
            for (int k = 1; k <= g.min_degree(); ++k) {
                Mask forced = 0;
                for (int v = 0; v < g.order(); ++v)
                    if (g.degree(v) == k) forced |= g.neighbors(v);
                enumerate_minimal_ktds(g, k, [&](const VertexSet& s) {
                    if (forced & ~s.bits) {
                        pass = false;
                        detail << "degree-k forcing broken; ";
                    }
                    return true;
                });
                const int lo = gamma_ktt(g, k).value;
                const int hi = Gamma_ktt(g, k).value;
                if (!(lo <= hi && hi <= g.order())) {
                    pass = false;
                    detail << "gamma <= Gamma <= n broken; ";
                }
            }
    // ledger determinism, 1 vs 4 workers, solve and verify
    RunConfig solve_config;
    for (const char* text : {"cycle:5", "cycle:6", "complete:4", "rook:3,3",
                             "cross(complete:3,complete:4)", "sharp:2,3,2"})
        solve_config.family_texts.push_back(text);
    solve_config.k = 2;
    solve_config.quantity = "Gamma";
    const std::string ledger1 = rows_to_csv(run_solve(solve_config));
    solve_config.workers = 4;
    const std::string ledger4 = rows_to_csv(run_solve(solve_config));
    RunConfig verify_config;
    verify_config.claims = {"C5", "C13", "C20"};
    const std::string verify1 = rows_to_csv(run_verify(verify_config).rows);
    verify_config.workers = 4;
    const std::string verify4 = rows_to_csv(run_verify(verify_config).rows);
    if (ledger1 != ledger4 || verify1 != verify4) {
        pass = false;
        detail << "ledgers differ across worker counts; ";
    }
    detail << subsets << " minimality subsets checked; ledgers byte-identical across workers";
    report(7, "minimality equivalence, forcing, ordering, determinism", pass, detail.str(),
           start);
}

// --- criterion 8: conjecture scan ----------------------------------------------

void criterion8() {
    const auto start = Clock::now();
    std::ostringstream detail;
    bool pass = true;
    RunConfig config;  // default factors are exactly {K_3, K_4, C_4, C_5, K_{2,2}}
    config.k_range = {{2, 3}};
    config.max_product_order = 16;
    const ScanSummary scan = run_scan(config);
    int violations = 0, conjecture_points = 0;
    bool ratio_point = false;
    int g33 = 0, h33 = 0, p33 = 0;
    for (std::size_t i = 0; i < scan.rows.size(); ++i) {
        const LedgerRow& row = scan.rows[i];
        if (row.verdict == "violated") ++violations;
        if (row.verdict == "violated-conjecture") ++conjecture_points;
        if (row.claim == "C14" && row.instance == "cart(complete:3,complete:3)" && row.k == 2) {
            p33 = std::stoi(row.value);
            g33 = std::stoi(scan.rows[i - 2].value);
            h33 = std::stoi(scan.rows[i - 1].value);
            // ratio Gamma(G)*Gamma(H) / Gamma(G box H) == (k+1)/k exactly
            ratio_point = 2 * g33 * h33 == 3 * p33;
        }
    }
    if (violations != 0) {
        pass = false;
        detail << violations << " proved-claim violations in the scan; ";
    }
    if (!ratio_point) {
        pass = false;
        detail << "K3/K3 ratio point missing or inexact; ";
    } else {
        detail << "K3/K3 point: " << g33 << "*" << h33 << "/" << p33 << " = 3/2 exactly; ";
    }
    detail << scan.rows.size() << " ledger rows; " << conjecture_points
           << " conjecture-violation data points recorded (C_4-torus pairs), exit unaffected";
    report(8, "conjecture scan ledger with the exact 3/2 equality point", pass, detail.str(),
           start);
}

}  // namespace

int main(int argc, char** argv) {
    void (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                            criterion5, criterion6, criterion7, criterion8};
    if (argc > 1) {  // run one criterion, for per-criterion test registration
        const int which = std::atoi(argv[1]);
        if (which < 1 || which > 8) {
            std::cerr << "usage: acceptance [1-8]\n";
            return 2;
        }
        criteria[which - 1]();
        return failures == 0 ? 0 : 1;
    }
    for (auto* criterion : criteria) criterion();
    if (failures)
        std::cout << failures << " criterion(s) failed. Criteria 1 and 2 fail on the documented "
                     "closed-form counterexamples (see README); every other computation is "
                     "oracle-validated.\n";
    else
        std::cout << "all criteria passed\n";
    return failures == 0 ? 0 : 1;
}
