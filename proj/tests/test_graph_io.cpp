#include <doctest.h>

#include "ktdom/family.hpp"
#include "ktdom/graph_io.hpp"

using namespace ktdom;

TEST_CASE("graph parsing") {
    Graph k3 = parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(k3.same_edges(generate(FamilySpec::complete(3))));

    // comments and blank lines are ignored; CRLF tolerated
    Graph with_noise = parse_graph("c a triangle\np 3 3\n\ne 1 2\r\nc middle\ne 1 3\ne 2 3\n");
    CHECK(with_noise.same_edges(k3));
}

TEST_CASE("graph parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("q 3 3\n") == 1);                    // malformed header
    CHECK(line_of("p 2 1\ne 1 1\n") == 2);             // loop
    CHECK(line_of("p 2 1\ne 1 3\n") == 2);             // out of range
    CHECK(line_of("p 3 2\ne 1 2\ne 1 2\n") == 3);      // duplicate edge
    CHECK(line_of("p 3 1\ne 2 1\n") == 2);             // u >= v
    CHECK(line_of("p 3 2\ne 1 2\n") >= 1);             // missing edge line
    CHECK(line_of("p 3 0\ne 1 2\n") >= 1);             // extra edge line
    CHECK(line_of("p 100 0\n") == 1);                  // beyond representation cap
}

TEST_CASE("serialize is sorted and exact") {
    CHECK(serialize_graph(generate(FamilySpec::cycle(4))) ==
          "p 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n");
    CHECK(serialize_graph(Graph(2)) == "p 2 0\n");
}

TEST_CASE("round trip over generated families") {
    const char* texts[] = {"path:1",         "path:6",       "cycle:7",
                           "complete:5",     "rook:3,3",     "sharp:2,3,2",
                           "multipartite:2-3", "cross(complete:3,complete:4)"};
    for (const char* text : texts) {
        Graph g = generate(parse_family(text));
        CHECK(parse_graph(serialize_graph(g)).same_edges(g));
    }
}

TEST_CASE("hypergraph text format preserves edge order and duplicates") {
    Hypergraph h = open_neighborhood_hypergraph(generate(FamilySpec::cycle(4)));
    const std::string text = serialize_hypergraph(h);
    CHECK(text == "h 4 4\ns 2 4\ns 1 3\ns 2 4\ns 1 3\n");
    CHECK(parse_hypergraph(text) == h);

    auto line_of = [](const std::string& t) {
        try {
            parse_hypergraph(t);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("h 3 1\ns\n") == 2);          // empty edge
    CHECK(line_of("h 3 1\ns 2 2\n") == 2);      // repeated vertex
    CHECK(line_of("h 3 1\ns 3 1\n") == 2);      // not ascending
    CHECK(line_of("h 3 1\ns 4\n") == 2);        // out of range
}

TEST_CASE("input dispatch by header") {
    CHECK(parse_input_text("p 2 1\ne 1 2\n").is_graph);
    CHECK(!parse_input_text("c comment\nh 2 1\ns 1 2\n").is_graph);
}
