#include "ktdom/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace ktdom {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == 'c') continue;
        out.push_back({number, line});
    }
    return out;
}

int parse_index(const std::string& token, int n, int line) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected a vertex index, got '" + token + "'");
    }
    if (used != token.size()) throw ParseError(line, "trailing junk in index '" + token + "'");
    if (v < 1 || v > n)
        throw ParseError(line, "vertex index " + std::to_string(v) + " outside [1, " +
                                   std::to_string(n) + "]");
    return v - 1;  // files are 1-based, the API is 0-based
}

std::pair<int, int> parse_header(const std::vector<Line>& lines, char tag) {
    if (lines.empty()) throw ParseError(1, "missing header line");
    std::istringstream in(lines.front().text);
    std::string t;
    long long n = -1, m = -1;
    in >> t >> n >> m;
    std::string rest;
    if (t != std::string(1, tag) || n < 0 || m < 0 || !in || (in >> rest))
        throw ParseError(lines.front().number,
                         std::string("malformed header, expected '") + tag + " <n> <m>'");
    if (n > kMaxVertices)
        throw ParseError(lines.front().number,
                         "order " + std::to_string(n) + " exceeds the representation cap " +
                             std::to_string(kMaxVertices));
    return {static_cast<int>(n), static_cast<int>(m)};
}

}  // namespace

Graph parse_graph(const std::string& text) {
    const auto lines = content_lines(text);
    const auto [n, m] = parse_header(lines, 'p');
    if (static_cast<int>(lines.size()) - 1 != m)
        throw ParseError(lines.empty() ? 1 : lines.back().number,
                         "expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(lines.size() - 1));
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream in(lines[i].text);
        std::string tag, su, sv, rest;
        in >> tag >> su >> sv;
        if (tag != "e" || su.empty() || sv.empty() || (in >> rest))
            throw ParseError(lines[i].number, "malformed edge line, expected 'e <u> <v>'");
        const int u = parse_index(su, n, lines[i].number);
        const int v = parse_index(sv, n, lines[i].number);
        if (u == v) throw ParseError(lines[i].number, "loop at vertex " + std::to_string(u + 1));
        if (u > v)
            throw ParseError(lines[i].number, "edge endpoints must satisfy u < v");
        if (!seen.insert({u, v}).second)
            throw ParseError(lines[i].number, "duplicate edge " + std::to_string(u + 1) + " " +
                                                  std::to_string(v + 1));
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    const auto edges = g.edges();  // sorted, u < v
    out << "p " << g.order() << " " << edges.size() << "\n";
    for (const auto& [u, v] : edges) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

Hypergraph parse_hypergraph(const std::string& text) {
    const auto lines = content_lines(text);
    const auto [n, m] = parse_header(lines, 'h');
    if (static_cast<int>(lines.size()) - 1 != m)
        throw ParseError(lines.empty() ? 1 : lines.back().number,
                         "expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(lines.size() - 1));
    std::vector<Mask> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream in(lines[i].text);
        std::string tag;
        in >> tag;
        if (tag != "s")
            throw ParseError(lines[i].number, "malformed edge line, expected 's <v1> <v2> ...'");
        Mask e = 0;
        int last = 0;
        std::string token;
        while (in >> token) {
            const int v = parse_index(token, n, lines[i].number);
            if (v + 1 <= last)
                throw ParseError(lines[i].number, "edge vertices must be strictly ascending");
            last = v + 1;
            e |= vbit(v);
        }
        if (e == 0) throw ParseError(lines[i].number, "empty hyperedge");
        edges.push_back(e);
    }
    return Hypergraph(n, std::move(edges));
}

std::string serialize_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << "h " << h.n << " " << h.edge_count() << "\n";
    for (const auto& edge : h.edge_lists()) {
        out << "s";
        for (int v : edge) out << " " << v + 1;
        out << "\n";
    }
    return out.str();
}

ParsedInput parse_input_text(const std::string& text) {
    const auto lines = content_lines(text);
    ParsedInput out;
    if (!lines.empty() && lines.front().text.rfind("h", 0) == 0) {
        out.is_graph = false;
        out.hypergraph = parse_hypergraph(text);
    } else {
        out.is_graph = true;
        out.graph = parse_graph(text);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << contents;
    if (!out) throw Error("write failed: " + path);
}

}  // namespace ktdom
