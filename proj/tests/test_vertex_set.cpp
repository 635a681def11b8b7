#include <doctest.h>

#include "ktdom/vertex_set.hpp"

using namespace ktdom;

TEST_CASE("vertex set construction and members") {
    VertexSet s = VertexSet::of(6, {0, 2, 5});
    CHECK(s.size() == 3);
    CHECK(s.contains(0));
    CHECK(!s.contains(1));
    CHECK(s.members() == std::vector<int>{0, 2, 5});
    CHECK(s.to_string() == "{0,2,5}");
    CHECK(VertexSet(4, 0).empty());

    CHECK_THROWS_AS(VertexSet::of(3, {3}), ParameterError);
    CHECK_THROWS_AS(VertexSet::of(3, {-1}), ParameterError);
    CHECK_THROWS_AS(VertexSet(3, 0b1000), ParameterError);
    CHECK_THROWS_AS(VertexSet(65, 0), ParameterError);
}

TEST_CASE("set order is lexicographic on member sequences") {
    auto mask = [](std::initializer_list<int> vs) {
        Mask m = 0;
        for (int v : vs) m |= vbit(v);
        return m;
    };
    // equal-size chains
    CHECK(set_lex_less(mask({0, 1, 2}), mask({0, 1, 3})));
    CHECK(set_lex_less(mask({0, 1, 3}), mask({0, 2, 3})));
    CHECK(set_lex_less(mask({0, 2, 3}), mask({1, 2, 3})));
    CHECK(set_lex_less(mask({0, 3}), mask({1, 2})));
    // prefixes sort first, longer tails later
    CHECK(set_lex_less(mask({0}), mask({0, 1})));
    CHECK(set_lex_less(mask({0, 1, 2}), mask({0, 2})));
    CHECK(set_lex_less(Mask{0}, mask({0})));
    // irreflexive, antisymmetric, transitive over a 5-element universe
    for (Mask a = 0; a < 32; ++a)
        for (Mask b = 0; b < 32; ++b) {
            if (a == b) {
                CHECK(!set_lex_less(a, b));
            } else {
                CHECK(set_lex_less(a, b) != set_lex_less(b, a));
            }
        }
    for (Mask a = 0; a < 32; ++a)
        for (Mask b = 0; b < 32; ++b)
            for (Mask c = 0; c < 32; ++c)
                if (set_lex_less(a, b) && set_lex_less(b, c)) CHECK(set_lex_less(a, c));
}
