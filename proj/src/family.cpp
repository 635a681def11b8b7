#include "ktdom/family.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace ktdom {

FamilySpec FamilySpec::path(int n) {
    FamilySpec s;
    s.kind = FamilyKind::path;
    s.n = n;
    return s;
}

FamilySpec FamilySpec::cycle(int n) {
    FamilySpec s;
    s.kind = FamilyKind::cycle;
    s.n = n;
    return s;
}

FamilySpec FamilySpec::complete(int n) {
    FamilySpec s;
    s.kind = FamilyKind::complete;
    s.n = n;
    return s;
}

FamilySpec FamilySpec::multipartite(std::vector<int> parts) {
    FamilySpec s;
    s.kind = FamilyKind::multipartite;
    std::sort(parts.begin(), parts.end());
    s.parts = std::move(parts);
    return s;
}

FamilySpec FamilySpec::rook(int rows, int cols) {
    FamilySpec s;
    s.kind = FamilyKind::rook;
    s.n = rows;
    s.m = cols;
    return s;
}

FamilySpec FamilySpec::sharpness(int blocks, int delta, int k) {
    FamilySpec s;
    s.kind = FamilyKind::sharpness;
    s.blocks = blocks;
    s.delta = delta;
    s.k = k;
    return s;
}

FamilySpec FamilySpec::disjoint_union(std::vector<FamilySpec> specs) {
    FamilySpec s;
    s.kind = FamilyKind::disjoint_union;
    s.children = std::move(specs);
    return s;
}

FamilySpec FamilySpec::join_of(FamilySpec a, FamilySpec b) {
    FamilySpec s;
    s.kind = FamilyKind::join_of;
    s.children = {std::move(a), std::move(b)};
    return s;
}

FamilySpec FamilySpec::cartesian(FamilySpec a, FamilySpec b) {
    FamilySpec s;
    s.kind = FamilyKind::cartesian;
    s.children = {std::move(a), std::move(b)};
    return s;
}

FamilySpec FamilySpec::cross(FamilySpec a, FamilySpec b) {
    FamilySpec s;
    s.kind = FamilyKind::cross;
    s.children = {std::move(a), std::move(b)};
    return s;
}

FamilySpec FamilySpec::k_join_of(FamilySpec f, FamilySpec h, int k) {
    FamilySpec s;
    s.kind = FamilyKind::k_join_of;
    s.children = {std::move(f), std::move(h)};
    s.k = k;
    return s;
}

void FamilySpec::validate() const {
    switch (kind) {
        case FamilyKind::path:
        case FamilyKind::complete:
            if (n < 1) throw ParameterError(to_string() + ": order must be positive");
            break;
        case FamilyKind::cycle:
            if (n < 3) throw ParameterError("cycle needs n >= 3, got " + std::to_string(n));
            break;
        case FamilyKind::multipartite:
            if (parts.empty()) throw ParameterError("multipartite needs at least one part");
            for (int p : parts)
                if (p < 1) throw ParameterError("multipartite part sizes must be positive");
            if (!std::is_sorted(parts.begin(), parts.end()))
                throw ParameterError("multipartite parts must be ascending");
            break;
        case FamilyKind::rook:
            if (n < 1 || m < 1) throw ParameterError("rook needs positive dimensions");
            break;
        case FamilyKind::sharpness: {
            if (k < 1 || delta < k + 1)
                throw ParameterError("sharpness family needs delta >= k+1 >= 2");
            int min_blocks = (delta + k) / (k + 1);  // ceil(delta/(k+1))
            if (blocks < min_blocks)
                throw ParameterError("sharpness family needs b >= ceil(delta/(k+1)) = " +
                                     std::to_string(min_blocks));
            break;
        }
        case FamilyKind::disjoint_union:
            if (children.empty()) throw ParameterError("union needs at least one member");
            for (const auto& c : children) c.validate();
            break;
        case FamilyKind::join_of:
        case FamilyKind::cartesian:
        case FamilyKind::cross:
            for (const auto& c : children) c.validate();
            break;
        case FamilyKind::k_join_of:
            if (k < 1) throw ParameterError("kjoin needs k >= 1");
            for (const auto& c : children) c.validate();
            break;
    }
}

Graph generate(const FamilySpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case FamilyKind::path: {
            std::vector<Edge> edges;
            for (int v = 0; v + 1 < spec.n; ++v) edges.emplace_back(v, v + 1);
            return Graph(spec.n, edges);
        }
        case FamilyKind::cycle: {
            std::vector<Edge> edges;
            for (int v = 0; v + 1 < spec.n; ++v) edges.emplace_back(v, v + 1);
            edges.emplace_back(0, spec.n - 1);
            return Graph(spec.n, edges);
        }
        case FamilyKind::complete: {
            std::vector<Edge> edges;
            for (int u = 0; u < spec.n; ++u)
                for (int v = u + 1; v < spec.n; ++v) edges.emplace_back(u, v);
            return Graph(spec.n, edges);
        }
        case FamilyKind::multipartite: {
            // parts occupy consecutive index blocks, smallest part first
            int n = std::accumulate(spec.parts.begin(), spec.parts.end(), 0);
            if (n > kMaxVertices) throw ParameterError("multipartite graph too large");
            std::vector<int> part_of(static_cast<std::size_t>(n));
            int at = 0, id = 0;
            for (int p : spec.parts) {
                for (int i = 0; i < p; ++i) part_of[static_cast<std::size_t>(at++)] = id;
                ++id;
            }
            std::vector<Edge> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (part_of[static_cast<std::size_t>(u)] !=
                        part_of[static_cast<std::size_t>(v)])
                        edges.emplace_back(u, v);
            return Graph(n, edges);
        }
        case FamilyKind::rook:
            return cartesian_product(generate(FamilySpec::complete(spec.n)),
                                     generate(FamilySpec::complete(spec.m)));
        case FamilyKind::sharpness: {
            // b disjoint K_{k+1} blocks first, then delta-k join vertices
            std::vector<FamilySpec> blocks(static_cast<std::size_t>(spec.blocks),
                                           FamilySpec::complete(spec.k + 1));
            Graph cliques = generate(FamilySpec::disjoint_union(blocks));
            Graph empty(spec.delta - spec.k);
            return join(cliques, empty);
        }
        case FamilyKind::disjoint_union: {
            Graph acc = generate(spec.children.front());
            for (std::size_t i = 1; i < spec.children.size(); ++i)
                acc = disjoint_union(acc, generate(spec.children[i]));
            return acc;
        }
        case FamilyKind::join_of:
            return join(generate(spec.children[0]), generate(spec.children[1]));
        case FamilyKind::cartesian:
            return cartesian_product(generate(spec.children[0]), generate(spec.children[1]));
        case FamilyKind::cross:
            return cross_product(generate(spec.children[0]), generate(spec.children[1]));
        case FamilyKind::k_join_of:
            return k_join(generate(spec.children[0]), generate(spec.children[1]), spec.k);
    }
    throw ParameterError("unknown family kind");
}

std::string FamilySpec::to_string() const {
    switch (kind) {
        case FamilyKind::path:
            return "path:" + std::to_string(n);
        case FamilyKind::cycle:
            return "cycle:" + std::to_string(n);
        case FamilyKind::complete:
            return "complete:" + std::to_string(n);
        case FamilyKind::multipartite: {
            std::string s = "multipartite:";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) s += "-";
                s += std::to_string(parts[i]);
            }
            return s;
        }
        case FamilyKind::rook:
            return "rook:" + std::to_string(n) + "," + std::to_string(m);
        case FamilyKind::sharpness:
            return "sharp:" + std::to_string(blocks) + "," + std::to_string(delta) + "," +
                   std::to_string(k);
        case FamilyKind::disjoint_union: {
            std::string s = "union(";
            for (std::size_t i = 0; i < children.size(); ++i) {
                if (i) s += ",";
                s += children[i].to_string();
            }
            return s + ")";
        }
        case FamilyKind::join_of:
            return "join(" + children[0].to_string() + "," + children[1].to_string() + ")";
        case FamilyKind::cartesian:
            return "cart(" + children[0].to_string() + "," + children[1].to_string() + ")";
        case FamilyKind::cross:
            return "cross(" + children[0].to_string() + "," + children[1].to_string() + ")";
        case FamilyKind::k_join_of:
            return "kjoin(" + children[0].to_string() + "," + children[1].to_string() + "," +
                   std::to_string(k) + ")";
    }
    return "?";
}

namespace {

// Recursive-descent reader for the --family grammar.
struct FamilyReader {
    const std::string& text;
    std::size_t pos = 0;

    explicit FamilyReader(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& why) const {
        throw ParameterError("bad family '" + text + "': " + why);
    }

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    std::string read_name() {
        std::size_t start = pos;
        while (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) != 0))
            ++pos;
        if (start == pos) fail("expected a family name at position " + std::to_string(start));
        return text.substr(start, pos - start);
    }

    int read_int() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected a number at position " + std::to_string(start));
        long long v = std::stoll(text.substr(start, pos - start));
        if (v > kMaxVertices * 64LL) fail("argument implausibly large");
        return static_cast<int>(v);
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    std::vector<int> read_dashed_ints() {
        std::vector<int> out{read_int()};
        while (peek() == '-') {
            ++pos;
            out.push_back(read_int());
        }
        return out;
    }

    FamilySpec read_spec() {
        std::string name = read_name();
        if (name == "path" || name == "cycle" || name == "complete") {
            expect(':');
            int n = read_int();
            if (name == "path") return FamilySpec::path(n);
            if (name == "cycle") return FamilySpec::cycle(n);
            return FamilySpec::complete(n);
        }
        if (name == "multipartite") {
            expect(':');
            return FamilySpec::multipartite(read_dashed_ints());
        }
        if (name == "rook") {
            expect(':');
            int a = read_int();
            expect(',');
            return FamilySpec::rook(a, read_int());
        }
        if (name == "sharp") {
            expect(':');
            int b = read_int();
            expect(',');
            int d = read_int();
            expect(',');
            return FamilySpec::sharpness(b, d, read_int());
        }
        if (name == "cart" || name == "cross" || name == "join" || name == "union" ||
            name == "kjoin") {
            expect('(');
            std::vector<FamilySpec> args{read_spec()};
            int trailing_k = -1;
            while (peek() == ',') {
                ++pos;
                if (name == "kjoin" && std::isdigit(static_cast<unsigned char>(peek()))) {
                    trailing_k = read_int();
                    break;
                }
                args.push_back(read_spec());
            }
            expect(')');
            if (name == "union") return FamilySpec::disjoint_union(std::move(args));
            if (args.size() != 2) fail(name + " takes exactly two graph arguments");
            if (name == "cart") return FamilySpec::cartesian(args[0], args[1]);
            if (name == "cross") return FamilySpec::cross(args[0], args[1]);
            if (name == "join") return FamilySpec::join_of(args[0], args[1]);
            if (trailing_k < 0) fail("kjoin needs a trailing k argument");
            return FamilySpec::k_join_of(args[0], args[1], trailing_k);
        }
        fail("unknown family name '" + name + "'");
    }
};

}  // namespace

FamilySpec parse_family(const std::string& text) {
    FamilyReader reader(text);
    FamilySpec spec = reader.read_spec();
    if (reader.pos != text.size())
        reader.fail("trailing characters at position " + std::to_string(reader.pos));
    spec.validate();
    return spec;
}

}  // namespace ktdom
