#include <doctest.h>

#include <cstdlib>

#include "ktdom/corpus.hpp"
#include "ktdom/family.hpp"
#include "ktdom/domination.hpp"
#include "oracle.hpp"

using namespace ktdom;

namespace {
Graph gen(const char* text) { return generate(parse_family(text)); }
}  // namespace

TEST_CASE("is_ktds") {
    Graph k4 = gen("complete:4");
    CHECK(is_ktds(k4, VertexSet::of(4, {0, 1, 2}), 2));
    Graph c4 = gen("cycle:4");
    for (Mask m = 0; m < 16; ++m)
        if (popcount(m) == 3) CHECK(!is_ktds(c4, VertexSet(4, m), 2));
    CHECK(is_ktds(c4, VertexSet(4, 0b1111), 2));
    // undersized sets are false, not an error; delta < k makes everything false
    CHECK(!is_ktds(k4, VertexSet(4, 0), 1));
    CHECK(!is_ktds(c4, VertexSet(4, 0b1111), 3));
    CHECK_THROWS_AS(is_ktds(k4, VertexSet(3, 0), 1), ParameterError);  // host mismatch
    CHECK_THROWS_AS(is_ktds(k4, VertexSet(4, 0), 0), ParameterError);
}

TEST_CASE("opn_k witnesses") {
    // C_4, S = V, v = 0, k = 2: both neighbors witness, both inner
    Graph c4 = gen("cycle:4");
    auto ws = opn_k(c4, VertexSet(4, 0b1111), 0, 2);
    REQUIRE(ws.size() == 2);
    CHECK(ws[0].witness == 1);
    CHECK(!ws[0].external);
    CHECK(ws[0].trace == VertexSet::of(4, {0, 2}));
    CHECK(ws[1].witness == 3);
    CHECK(!ws[1].external);

    // P_3 path 0-1-2, S = {0,1}, v = 1, k = 1: 0 inner, 2 external
    Graph p3 = gen("path:3");
    ws = opn_k(p3, VertexSet::of(3, {0, 1}), 1, 1);
    REQUIRE(ws.size() == 2);
    CHECK(ws[0].witness == 0);
    CHECK(!ws[0].external);
    CHECK(ws[0].trace == VertexSet::of(3, {1}));
    CHECK(ws[1].witness == 2);
    CHECK(ws[1].external);

    // K_4, S = {0,1,2}, v = 0, k = 3: exactly the outside vertex 3
    Graph k4 = gen("complete:4");
    ws = opn_k(k4, VertexSet::of(4, {0, 1, 2}), 0, 3);
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].witness == 3);
    CHECK(ws[0].external);
    CHECK(ws[0].trace == VertexSet::of(4, {0, 1, 2}));

    CHECK_THROWS_AS(opn_k(k4, VertexSet::of(4, {1, 2}), 0, 2), ParameterError);  // v not in S
    // traces always have size k and contain v; witnesses are adjacent to v
    for (Mask m = 1; m < 16; ++m)
        for (int v = 0; v < 4; ++v) {
            if (!(m & vbit(v))) continue;
            for (const auto& w : opn_k(k4, VertexSet(4, m), v, 2)) {
                CHECK(w.trace.size() == 2);
                CHECK(w.trace.contains(v));
                CHECK(k4.adjacent(w.witness, v));
                CHECK(w.external == !(m & vbit(w.witness)));
            }
        }
}

TEST_CASE("minimality examples") {
    CHECK(is_minimal_ktds(gen("complete:4"), VertexSet::of(4, {0, 1, 2}), 2));
    CHECK(is_minimal_ktds(gen("path:4"), VertexSet::of(4, {1, 2}), 1));
    CHECK(is_minimal_ktds(gen("cycle:4"), VertexSet(4, 0b1111), 2));
    CHECK(!is_minimal_ktds(gen("complete:4"), VertexSet(4, 0b1111), 2));
    CHECK(!is_minimal_ktds(gen("complete:4"), VertexSet::of(4, {0, 1}), 2));
}

TEST_CASE("deletion and witness minimality agree on every subset (n <= 5 exhaustive)") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs(n))
            for (int k = 1; k <= std::max(1, g.min_degree()); ++k)
                for (Mask m = 0; m <= g.vertex_mask(); ++m) {
                    const VertexSet s(n, m);
                    const bool witness = is_minimal_ktds(g, s, k);
                    CHECK(witness == is_minimal_ktds_deletion(g, s, k));
                    CHECK(witness == oracle::is_minimal_ktds(oracle::adjacency_lists(g),
                                                             s.members(), k));
                    if (m == g.vertex_mask()) break;
                }
}

TEST_CASE("minimality criteria agree on random graphs n = 7, 8") {
    std::mt19937 rng(7707);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 7 + trial % 2;
        Graph g = random_graph(n, rng);
        std::uniform_int_distribution<Mask> subsets(0, g.vertex_mask());
        for (int k = 1; k <= std::max(1, g.min_degree()); ++k)
            for (int probe = 0; probe < 40; ++probe) {
                const VertexSet s(n, subsets(rng));
                CHECK(is_minimal_ktds(g, s, k) == is_minimal_ktds_deletion(g, s, k));
            }
    }
}

TEST_CASE("enumerate minimal kTDS in lexicographic order") {
    auto sets = collect_minimal_ktds(gen("complete:3"), 1);
    REQUIRE(sets.size() == 3);
    CHECK(sets[0] == VertexSet::of(3, {0, 1}));
    CHECK(sets[1] == VertexSet::of(3, {0, 2}));
    CHECK(sets[2] == VertexSet::of(3, {1, 2}));

    sets = collect_minimal_ktds(gen("cycle:4"), 2);
    REQUIRE(sets.size() == 1);
    CHECK(sets[0] == VertexSet(4, 0b1111));

    sets = collect_minimal_ktds(gen("complete:4"), 2);
    REQUIRE(sets.size() == 4);
    CHECK(sets[0] == VertexSet::of(4, {0, 1, 2}));
    CHECK(sets[3] == VertexSet::of(4, {1, 2, 3}));

    // early stop
    int seen = 0;
    enumerate_minimal_ktds(gen("complete:4"), 2, [&](const VertexSet&) { return ++seen < 2; });
    CHECK(seen == 2);

    CHECK_THROWS_AS(enumerate_minimal_ktds(gen("path:3"), 2, [](const VertexSet&) { return true; }),
                    DomainError);
    CHECK(count_minimal_ktds(gen("path:3"), 2) == 0);  // empty family, not an error
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n))
            for (int k = 1; k <= g.min_degree(); ++k) {
                const auto got = collect_minimal_ktds(g, k);
                auto expected = oracle::all_minimal_ktds(g, k);
                std::sort(expected.begin(), expected.end());  // member-sequence lex order
                REQUIRE(got.size() == expected.size());
                for (std::size_t i = 0; i < got.size(); ++i)
                    CHECK(got[i].members() == expected[i]);
                // degree-k forcing on every enumerated set
                for (const auto& s : got)
                    for (int v = 0; v < g.order(); ++v)
                        if (g.degree(v) == k) CHECK((g.neighbors(v) & ~s.bits) == 0);
            }
}

TEST_CASE("solver values from known instances") {
    CHECK(Gamma_ktt(gen("cycle:5"), 1).value == 3);
    CHECK(Gamma_ktt(gen("cart(complete:3,complete:3)"), 2).value == 6);
    CHECK(gamma_ktt(gen("complete:4"), 2).value == 3);
    CHECK(Gamma_ktt(gen("complete:4"), 2).value == 3);
    CHECK(Gamma_ktt(gen("cross(complete:4,complete:2)"), 2).value == 6);
    CHECK(Gamma_ktt(gen("rook:4,4"), 3).value == 12);
    // gamma = Gamma = k+1 on complete graphs
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k < n; ++k) {
            Graph g = generate(FamilySpec::complete(n));
            CHECK(gamma_ktt(g, k).value == k + 1);
            CHECK(Gamma_ktt(g, k).value == k + 1);
        }
}

TEST_CASE("solver results carry valid minimal witnesses and stats") {
    for (const char* text : {"cycle:6", "complete:5", "rook:3,3", "sharp:2,3,2",
                             "union(complete:3,cycle:4)"}) {
        Graph g = gen(text);
        for (int k = 1; k <= g.min_degree(); ++k) {
            const SolveResult lo = gamma_ktt(g, k);
            const SolveResult hi = Gamma_ktt(g, k);
            CHECK(lo.value <= hi.value);
            CHECK(hi.value <= g.order());
            CHECK(lo.witness.size() == lo.value);
            CHECK(hi.witness.size() == hi.value);
            CHECK(is_minimal_ktds(g, lo.witness, k));
            CHECK(is_minimal_ktds(g, hi.witness, k));
            CHECK(lo.nodes_explored > 0);
        }
    }
}

TEST_CASE("solver agrees with oracle, enumerator, and its own branch-and-bound") {
    SolveOptions forced_branching;
    forced_branching.exhaustive_threshold = 0;
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n))
            for (int k = 1; k <= g.min_degree(); ++k) {
                const SolveResult lo = gamma_ktt(g, k);
                const SolveResult hi = Gamma_ktt(g, k);
                CHECK(lo.value == *oracle::gamma(g, k));
                CHECK(hi.value == *oracle::Gamma(g, k));
                // enumerator agreement
                int max_seen = 0, min_seen = g.order() + 1;
                for (const auto& s : collect_minimal_ktds(g, k)) {
                    max_seen = std::max(max_seen, s.size());
                    min_seen = std::min(min_seen, s.size());
                }
                CHECK(hi.value == max_seen);
                CHECK(lo.value == min_seen);
                // branch-and-bound path returns identical values and witnesses
                const SolveResult lo2 = gamma_ktt(g, k, forced_branching);
                const SolveResult hi2 = Gamma_ktt(g, k, forced_branching);
                CHECK(lo2.value == lo.value);
                CHECK(hi2.value == hi.value);
                CHECK(lo2.witness == lo.witness);
                CHECK(hi2.witness == hi.witness);
            }
}

TEST_CASE("solver and enumerator agree on instances up to 12 vertices") {
    // the solver decomposes into components; the enumerator walks the whole
    // graph, so the disconnected instances cross-check the two paths
    for (const char* text : {"cycle:12", "path:11", "rook:3,4", "multipartite:2-2-3",
                             "cross(complete:3,complete:4)", "sharp:3,3,2",
                             "union(complete:3,cycle:4)", "union(path:4,path:5)"}) {
        Graph g = gen(text);
        for (int k = 1; k <= std::min(2, g.min_degree()); ++k) {
            int max_seen = 0, min_seen = g.order() + 1;
            enumerate_minimal_ktds(g, k, [&](const VertexSet& s) {
                max_seen = std::max(max_seen, s.size());
                min_seen = std::min(min_seen, s.size());
                return true;
            });
            CHECK(Gamma_ktt(g, k).value == max_seen);
            CHECK(gamma_ktt(g, k).value == min_seen);
        }
    }
}

TEST_CASE("witnesses are the lexicographically least optima") {
    // All four 3-subsets of K_4 are optimal minimal 2TDS: expect {0,1,2}.
    CHECK(Gamma_ktt(gen("complete:4"), 2).witness == VertexSet::of(4, {0, 1, 2}));
    CHECK(gamma_ktt(gen("complete:4"), 2).witness == VertexSet::of(4, {0, 1, 2}));
    // oracle-checked lex-least over a corpus
    for (const Graph& g : connected_graphs(5))
        for (int k = 1; k <= g.min_degree(); ++k) {
            const SolveResult hi = Gamma_ktt(g, k);
            for (const auto& s : oracle::all_minimal_ktds(g, k))
                if (static_cast<int>(s.size()) == hi.value) {
                    CHECK(!set_lex_less(VertexSet::from_members(g.order(), s).bits,
                                        hi.witness.bits));
                }
        }
}

TEST_CASE("k-regular graphs have Gamma = n") {
    for (int n = 3; n <= 12; ++n) CHECK(Gamma_ktt(generate(FamilySpec::cycle(n)), 2).value == n);
    for (int k = 1; k <= 3; ++k) {
        Graph unions = disjoint_union(generate(FamilySpec::complete(k + 1)),
                                      generate(FamilySpec::complete(k + 1)));
        CHECK(Gamma_ktt(unions, k).value == unions.order());
    }
    std::mt19937 rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 6);
        std::vector<int> offsets{1};
        if (rng() % 2 && n >= 5) offsets.push_back(2);
        Graph circ = make_circulant(n, offsets);
        CHECK(Gamma_ktt(circ, circ.min_degree()).value == n);
    }
}

TEST_CASE("component decomposition: values add and witnesses stay lex-least") {
    Graph g = gen("union(complete:3,cycle:4,complete:4)");
    const SolveResult hi = Gamma_ktt(g, 2);
    CHECK(hi.value == 3 + 4 + 3);
    CHECK(is_minimal_ktds(g, hi.witness, 2));
    const SolveResult lo = gamma_ktt(g, 2);
    CHECK(lo.value == 3 + 4 + 3);  // every component is forced to its own optimum here
    // a 40-vertex union still solves because limits apply per component
    Graph big = gen("union(complete:8,complete:8,complete:8,complete:8,complete:8)");
    CHECK(big.order() == 40);
    CHECK(Gamma_ktt(big, 2).value == 15);
}

TEST_CASE("domain, resource and timeout errors") {
    CHECK_THROWS_AS(gamma_ktt(gen("path:4"), 2), DomainError);
    CHECK_THROWS_AS(Gamma_ktt(Graph(0), 1), DomainError);
    CHECK_THROWS_AS(Gamma_ktt(gen("complete:4"), 0), ParameterError);

    SolveOptions tight;
    tight.hard_vertex_limit = 10;
    CHECK_THROWS_AS(Gamma_ktt(gen("rook:4,4"), 2, tight), ResourceError);

    SolveOptions no_time;
    no_time.time_budget = std::chrono::milliseconds(0);
    CHECK_THROWS_AS(Gamma_ktt(gen("cart(cycle:5,cycle:5)"), 2, no_time), TimeoutError);
}

TEST_CASE("KTDOM_MAX_N overrides the default limit") {
    CHECK(SolveOptions{}.hard_vertex_limit == 32);
    setenv("KTDOM_MAX_N", "12", 1);
    CHECK(SolveOptions{}.hard_vertex_limit == 12);
    setenv("KTDOM_MAX_N", "999", 1);
    CHECK(SolveOptions{}.hard_vertex_limit == 64);  // clamped to the representation cap
    setenv("KTDOM_MAX_N", "junk", 1);
    CHECK_THROWS_AS(SolveOptions{}, ParameterError);
    unsetenv("KTDOM_MAX_N");
    CHECK(SolveOptions{}.hard_vertex_limit == 32);
}

TEST_CASE("Gamma-external search") {
    CHECK(!is_gamma_external(gen("complete:4"), 2));
    CHECK(!is_gamma_external(gen("cycle:4"), 2));

    // P_4: the unique Gamma_t-set {1,2} is external
    auto p4 = is_gamma_external(gen("path:4"), 1);
    REQUIRE(p4.has_value());
    CHECK(*p4 == VertexSet::of(4, {1, 2}));

    // triangle with two extra degree-2 vertices: external for k = 2
    Graph ext5(5, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}});
    auto found = is_gamma_external(ext5, 2);
    REQUIRE(found.has_value());
    CHECK(*found == VertexSet::of(5, {0, 1, 2}));

    // K_6 x K_2 at k = 2: a witness exists and satisfies the definition
    Graph k6k2 = cross_product(gen("complete:6"), gen("complete:2"));
    auto big = is_gamma_external(k6k2, 2);
    REQUIRE(big.has_value());
    CHECK(big->size() == Gamma_ktt(k6k2, 2).value);
    CHECK(is_minimal_ktds(k6k2, *big, 2));
    for (int v : big->members()) {
        bool has_external = false;
        for (const auto& w : opn_k(k6k2, *big, v, 2)) has_external |= w.external;
        CHECK(has_external);
    }
    // the disjoint-halves set from the construction qualifies as well
    VertexSet halves = VertexSet::of(12, {0, 2, 4, 7, 9, 11});
    CHECK(is_minimal_ktds(k6k2, halves, 2));
    for (int v : halves.members()) {
        bool has_external = false;
        for (const auto& w : opn_k(k6k2, halves, v, 2)) has_external |= w.external;
        CHECK(has_external);
    }
}
