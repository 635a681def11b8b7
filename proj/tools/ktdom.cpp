#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ktdom/corpus.hpp"
#include "ktdom/graph_io.hpp"
#include "ktdom/harness.hpp"
#include "ktdom/hypergraph.hpp"

namespace {

using namespace ktdom;

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
}

void write_rows(const std::string& out_path, const std::string& format,
                const std::vector<LedgerRow>& rows) {
    if (format == "csv") {
        emit(out_path, rows_to_csv(rows));
    } else if (format == "json") {
        emit(out_path, rows_to_json(rows));
    } else {
        throw ParameterError("unknown format '" + format + "' (expected csv or json)");
    }
}

struct CommonFlags {
    std::string out_path;
    std::string format = "csv";
    int workers = 1;
    long long budget_ms = 0;
    bool timings = false;

    void attach(CLI::App* app) {
        app->add_option("--out", out_path, "write the ledger to this path (default: stdout)");
        app->add_option("--format", format, "ledger format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        app->add_option("--workers", workers, "instance-level parallelism")->check(CLI::Range(1, 256));
        app->add_option("--budget-ms", budget_ms, "per-instance time budget in milliseconds");
        app->add_flag("--timings", timings, "record elapsed_ms (ledger is no longer byte-stable)");
    }

    void fill(RunConfig& config) const {
        config.workers = workers;
        if (budget_ms > 0) config.budget_ms = budget_ms;
        config.timings = timings;
    }
};

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(text.substr(start));
            break;
        }
        out.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

std::vector<int> parse_parts_arg(const std::string& text) {
    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t dash = text.find('-', start);
        const std::string piece =
            dash == std::string::npos ? text.substr(start) : text.substr(start, dash - start);
        try {
            parts.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw ParameterError("bad parts list '" + text + "'");
        }
        if (dash == std::string::npos) break;
        start = dash + 1;
    }
    return parts;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exact k-tuple total domination workbench"};
    app.require_subcommand(1);

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "compute gamma/Gamma/tau/upsilon for instances");
    std::vector<std::string> solve_families, solve_inputs;
    int solve_k = 1;
    std::string solve_quantity = "Gamma", as_hypergraph;
    CommonFlags solve_flags;
    solve->add_option("--family", solve_families, "family description (repeatable)");
    solve->add_option("--input", solve_inputs, "graph or hypergraph file (repeatable)");
    solve->add_option("--k", solve_k, "multiplicity k")->required();
    solve->add_option("--quantity", solve_quantity, "gamma | Gamma | tau | upsilon")
        ->check(CLI::IsMember({"gamma", "Gamma", "tau", "upsilon"}));
    solve->add_option("--as-hypergraph", as_hypergraph,
                      "'ong': solve tau/upsilon on the open neighborhood hypergraph");
    solve_flags.attach(solve);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run claim checks over parameter grids");
    std::string verify_claims, verify_n, verify_m, verify_k, verify_corpus;
    std::vector<std::string> verify_families, verify_parts;
    CommonFlags verify_flags;
    verify->add_option("--claims", verify_claims, "comma-separated claim ids, or 'all'")
        ->required();
    verify->add_option("--n", verify_n, "range a..b for size-indexed claims");
    verify->add_option("--m", verify_m, "range a..b for the second size");
    verify->add_option("--k", verify_k, "range a..b for k");
    verify->add_option("--corpus", verify_corpus,
                       "corpus selector, e.g. connected:<=7 (connected graphs up to 7)");
    verify->add_option("--family", verify_families, "explicit instances (repeatable)");
    verify->add_option("--parts", verify_parts, "multipartite parts list, e.g. 2-3 (repeatable)");
    CommonFlags* vf = &verify_flags;
    vf->attach(verify);

    // ---- scan ----
    auto* scan = app.add_subcommand("scan", "conjecture/question scans (never fail the build)");
    std::vector<std::string> scan_families;
    std::string scan_k, scan_n, scan_m;
    bool scan_question = false;
    int scan_cap = 16;
    CommonFlags scan_flags;
    scan->add_option("--family", scan_families, "pair factors (repeatable)");
    scan->add_option("--k", scan_k, "range a..b for k");
    scan->add_option("--n", scan_n, "range for the question scan");
    scan->add_option("--m", scan_m, "range for the question scan");
    scan->add_flag("--question", scan_question, "scan Gamma(K_n x K_m) against 2k+2");
    scan->add_option("--max-order", scan_cap, "skip products larger than this");
    scan_flags.attach(scan);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a family and print its file form");
    std::string gen_family, gen_out;
    bool gen_hyper = false;
    gen->add_option("--family", gen_family, "family description")->required();
    gen->add_option("--out", gen_out, "output path (default: stdout)");
    gen->add_flag("--hypergraph", gen_hyper, "emit the open neighborhood hypergraph instead");

    // ---- enumerate ----
    auto* enumerate = app.add_subcommand("enumerate", "list minimal kTDS in lexicographic order");
    std::string enum_family, enum_input, enum_out;
    int enum_k = 1;
    std::uint64_t enum_limit = 0;
    enumerate->add_option("--family", enum_family, "family description");
    enumerate->add_option("--input", enum_input, "graph file");
    enumerate->add_option("--k", enum_k, "multiplicity k")->required();
    enumerate->add_option("--limit", enum_limit, "stop after this many sets (0 = no limit)");
    enumerate->add_option("--out", enum_out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (solve->parsed()) {
        RunConfig config;
        config.family_texts = solve_families;
        config.input_paths = solve_inputs;
        config.k = solve_k;
        config.quantity = solve_quantity;
        if (!as_hypergraph.empty()) {
            if (as_hypergraph != "ong")
                throw ParameterError("--as-hypergraph only supports 'ong'");
            config.as_ong = true;
        }
        solve_flags.fill(config);
        write_rows(solve_flags.out_path, solve_flags.format, run_solve(config));
        return 0;
    }
    if (verify->parsed()) {
        RunConfig config;
        config.claims = split_commas(verify_claims);
        if (!verify_n.empty()) config.n_range = parse_range(verify_n);
        if (!verify_m.empty()) config.m_range = parse_range(verify_m);
        if (!verify_k.empty()) config.k_range = parse_range(verify_k);
        if (!verify_corpus.empty()) {
            const std::string prefix = "connected:<=";
            if (verify_corpus.rfind(prefix, 0) != 0)
                throw ParameterError("--corpus expects connected:<=N");
            config.corpus_max = std::stoi(verify_corpus.substr(prefix.size()));
        }
        config.family_texts = verify_families;
        for (const std::string& parts : verify_parts)
            config.parts_lists.push_back(parse_parts_arg(parts));
        verify_flags.fill(config);
        VerifySummary summary = run_verify(config);
        std::cout << summary.table;
        if (!verify_flags.out_path.empty() || verify_flags.format != "csv")
            write_rows(verify_flags.out_path, verify_flags.format, summary.rows);
        return summary.exit_code;
    }
    if (scan->parsed()) {
        RunConfig config;
        config.family_texts = scan_families;
        if (!scan_k.empty()) config.k_range = parse_range(scan_k);
        if (!scan_n.empty()) config.n_range = parse_range(scan_n);
        if (!scan_m.empty()) config.m_range = parse_range(scan_m);
        config.question = scan_question;
        config.max_product_order = scan_cap;
        scan_flags.fill(config);
        ScanSummary summary = run_scan(config);
        std::cerr << summary.table;
        write_rows(scan_flags.out_path, scan_flags.format, summary.rows);
        return 0;
    }
    if (gen->parsed()) {
        const Graph g = generate(parse_family(gen_family));
        emit(gen_out, gen_hyper ? serialize_hypergraph(open_neighborhood_hypergraph(g))
                                : serialize_graph(g));
        return 0;
    }
    if (enumerate->parsed()) {
        if (enum_family.empty() == enum_input.empty())
            throw ParameterError("enumerate needs exactly one of --family/--input");
        const Graph g = enum_family.empty() ? parse_graph(read_file(enum_input))
                                            : generate(parse_family(enum_family));
        std::ostringstream out;
        std::uint64_t count = 0;
        enumerate_minimal_ktds(g, enum_k, [&](const VertexSet& s) {
            bool first = true;
            for (int v : s.members()) {
                if (!first) out << ' ';
                out << (v + 1);
                first = false;
            }
            out << '\n';
            ++count;
            return enum_limit == 0 || count < enum_limit;
        });
        emit(enum_out, out.str());
        std::cerr << "count=" << count << (enum_limit && count >= enum_limit ? " (truncated)" : "")
                  << "\n";
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ktdom::ParseError& e) {
        std::cerr << nlohmann::json{{"error", "parse"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const ktdom::ParameterError& e) {
        std::cerr << nlohmann::json{{"error", "parameter"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const ktdom::DomainError& e) {
        std::cerr << nlohmann::json{{"error", "domain"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const ktdom::ResourceError& e) {
        std::cerr << nlohmann::json{{"error", "resource"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const ktdom::TimeoutError& e) {
        std::cerr << nlohmann::json{{"error", "timeout"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
}
