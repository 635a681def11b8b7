#include "ktdom/corpus.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "ktdom/errors.hpp"

namespace ktdom {

namespace {

constexpr int kCorpusMaxOrder = 7;

using EdgeCode = std::uint32_t;  // one bit per vertex pair, enough for n <= 8

int pair_index(int i, int j) {  // requires i < j
    return j * (j - 1) / 2 + i;
}

EdgeCode encode(const Graph& g) {
    EdgeCode code = 0;
    for (const auto& [u, v] : g.edges()) code |= EdgeCode{1} << pair_index(u, v);
    return code;
}

Graph decode(int n, EdgeCode code) {
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (code & (EdgeCode{1} << pair_index(i, j))) edges.emplace_back(i, j);
    return Graph(n, edges);
}

EdgeCode canonical(int n, EdgeCode code) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (code & (EdgeCode{1} << pair_index(i, j))) pairs.emplace_back(i, j);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    EdgeCode best = ~EdgeCode{0};
    do {
        EdgeCode mapped = 0;
        for (const auto& [i, j] : pairs) {
            const int a = perm[static_cast<std::size_t>(i)];
            const int b = perm[static_cast<std::size_t>(j)];
            mapped |= EdgeCode{1} << pair_index(std::min(a, b), std::max(a, b));
        }
        best = std::min(best, mapped);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

const std::vector<EdgeCode>& canonical_codes(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<EdgeCode>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (cache.empty()) cache.emplace(1, std::vector<EdgeCode>{0});
    // Extend each (t-1)-vertex representative by one vertex with every
    // possible attachment; dedup by canonical form.  Deleting the last
    // vertex of any t-vertex graph lands back in the smaller corpus, so
    // this reaches every isomorphism class.
    for (int t = 2; t <= n; ++t) {
        if (cache.contains(t)) continue;
        std::set<EdgeCode> out;
        for (EdgeCode base : cache.at(t - 1))
            for (EdgeCode ext = 0; ext < (EdgeCode{1} << (t - 1)); ++ext) {
                EdgeCode code = base;
                for (int i = 0; i < t - 1; ++i)
                    if (ext & (EdgeCode{1} << i)) code |= EdgeCode{1} << pair_index(i, t - 1);
                out.insert(canonical(t, code));
            }
        cache.emplace(t, std::vector<EdgeCode>(out.begin(), out.end()));
    }
    return cache.at(n);
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
    if (n < 1 || n > kCorpusMaxOrder)
        throw ResourceError("exhaustive corpus supports 1 <= n <= " +
                            std::to_string(kCorpusMaxOrder));
    std::vector<Graph> out;
    for (EdgeCode code : canonical_codes(n)) out.push_back(decode(n, code));
    return out;
}

std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    for (Graph& g : all_graphs(n))
        if (g.is_connected()) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> connected_graphs_up_to(int n) {
    std::vector<Graph> out;
    for (int i = 1; i <= n; ++i)
        for (Graph& g : connected_graphs(i)) out.push_back(std::move(g));
    return out;
}

Graph random_graph(int n, std::mt19937& rng, double edge_probability) {
    std::bernoulli_distribution coin(edge_probability);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_graph_min_degree(int n, int delta, std::mt19937& rng) {
    if (delta >= n) throw ParameterError("min degree must be below the order");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Graph g = random_graph(n, rng);
        if (g.min_degree() >= delta) return g;
    }
    throw Error("failed to sample a graph with the requested minimum degree");
}

Graph make_circulant(int n, const std::vector<int>& offsets) {
    std::set<Edge> edges;
    for (int o : offsets) {
        if (o < 1 || 2 * o > n) throw ParameterError("circulant offset must satisfy 1 <= o <= n/2");
        for (int v = 0; v < n; ++v) {
            const int w = (v + o) % n;
            if (v != w) edges.insert({std::min(v, w), std::max(v, w)});
        }
    }
    return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

}  // namespace ktdom
