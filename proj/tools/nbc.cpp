#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nbc/constructors.hpp"
#include "nbc/io.hpp"
#include "nbc/search.hpp"

namespace {

using namespace nbc;

// Exit codes: 0 success / balanced / found; 1 not admissible, not balanced
// or exhausted; 2 I/O, format or usage errors; 3 search budget exceeded.

void self_verify(const ConstructionResult& result) {
    if (!verify(result.graph, result.coloring).balanced)
        throw Error("internal: " + result.provenance + " output failed verification");
}

int run_gen(const std::string& spec, const std::string& out) {
    Graph g = generate(parse_family_spec(spec));
    save_graph(g, out);
    std::cout << g.order() << " " << g.size() << "\n";
    return 0;
}

int run_check(const std::string& graph_path, int q) {
    Graph g = load_graph(graph_path);
    Palette palette(q);
    NecessaryReport report = check_necessary(g, palette);
    std::cout << "degrees divisible by " << q << ": " << (report.degrees_ok ? "yes" : "no") << "\n";
    if (report.regular)
        std::cout << "regular: yes (degree " << report.degree << ")\n";
    else
        std::cout << "regular: no\n";
    if (report.regular && report.degree > 0) {
        std::cout << "order " << g.order() << " divisible by " << q << ": "
                  << (report.order_ok ? "yes" : "no") << "\n";
        std::cout << "size " << g.size() << " divisible by " << q * q << ": "
                  << (report.size_ok ? "yes" : "no") << "\n";
    }
    if (report.pass)
        std::cout << "necessary conditions: pass\n";
    else
        std::cout << "necessary conditions: fail (" << report.detail << ")\n";
    return report.pass ? 0 : 1;
}

int run_verify(const std::string& graph_path, const std::string& coloring_path, bool json) {
    Graph g = load_graph(graph_path);
    Coloring c = load_coloring(coloring_path);
    VerificationReport report = verify(g, c);
    if (json) {
        std::cout << report_json_text(report, c.q(), g.order(), g.size());
        return report.balanced ? 0 : 1;
    }
    std::cout << "balanced: " << (report.balanced ? "yes" : "no") << "\n";
    std::cout << "q: " << c.q() << "\n";
    std::cout << "n: " << g.order() << "\n";
    std::cout << "m: " << g.size() << "\n";
    std::cout << "sigma_vertex:";
    for (auto count : report.sigma_vertex) std::cout << " " << count;
    std::cout << "\n";
    std::size_t passed = 0;
    for (const auto& check : report.identity_checks) passed += check.pass ? 1 : 0;
    std::cout << "identity checks: " << passed << "/" << report.identity_checks.size()
              << " pass\n";
    if (!report.balanced) {
        std::cout << "violations: " << report.violations.size() << "\n";
        const std::size_t shown = std::min<std::size_t>(report.violations.size(), 10);
        for (std::size_t i = 0; i < shown; ++i) {
            std::cout << "  vertex " << report.violations[i].vertex << ":";
            for (int count : report.violations[i].counts) std::cout << " " << count;
            std::cout << "\n";
        }
        if (shown < report.violations.size())
            std::cout << "  ... and " << report.violations.size() - shown << " more\n";
    }
    return report.balanced ? 0 : 1;
}

int run_construct(const std::string& spec_text, int q, const std::string& out) {
    FamilySpec spec = parse_family_spec(spec_text);
    Palette palette(q);
    ConstructionResult result = [&] {
        switch (spec.kind) {
            case Family::Multipartite:
                return color_complete_multipartite(spec.params, palette);
            case Family::Circulant:
                return color_circulant(spec.params[0],
                                       {spec.params.begin() + 1, spec.params.end()}, palette);
            default:
                throw ParseError("construct supports multipartite and circulant specs");
        }
    }();
    self_verify(result);
    save_coloring(result.coloring, out);
    return 0;
}

int run_product(const std::string& kind, const std::string& g_path, const std::string& h_path,
                const std::string& cg_path, const std::string& ch_path,
                const std::string& out_graph, const std::string& out_coloring) {
    Graph g = load_graph(g_path);
    Graph h = load_graph(h_path);
    auto need = [&](const std::string& path, const char* which) {
        if (path.empty())
            throw ParseError(std::string("product --kind ") + kind + " needs " + which);
        return load_coloring(path);
    };
    ConstructionResult result = [&] {
        if (kind == "cartesian")
            return color_cartesian_product(g, need(cg_path, "--cg"), h, need(ch_path, "--ch"));
        if (kind == "lex")
            return color_lex_product(g, need(cg_path, "--cg"), h, need(ch_path, "--ch"));
        if (kind == "lex-equal")
            return color_lex_product_equal_counts(g, h, need(ch_path, "--ch"));
        if (kind == "direct") return color_direct_product(g, need(cg_path, "--cg"), h);
        if (kind == "strong")
            return color_strong_product(g, need(cg_path, "--cg"), h, need(ch_path, "--ch"));
        if (kind == "join") return color_join(g, need(cg_path, "--cg"), h, need(ch_path, "--ch"));
        throw ParseError("unknown product kind \"" + kind + "\"");
    }();
    self_verify(result);
    save_graph(result.graph, out_graph);
    save_coloring(result.coloring, out_coloring);
    std::cout << result.graph.order() << " " << result.graph.size() << "\n";
    return 0;
}

int run_search(const std::string& graph_path, int q, std::int64_t limit, std::int64_t nodes,
               std::optional<double> timeout, bool all, const std::string& out) {
    Graph g = load_graph(graph_path);
    SearchConfig config{Palette(q)};
    config.node_budget = nodes;
    config.time_budget_seconds = timeout;
    config.enumerate_limit = all ? limit : 1;
    SearchOutcome outcome = all ? enumerate(g, config) : decide(g, config);
    std::cerr << "nodes explored: " << outcome.nodes_explored << "\n";
    switch (outcome.status) {
        case SearchStatus::BudgetExceeded:
            std::cerr << "search budget exceeded\n";
            return 3;
        case SearchStatus::Exhausted:
            std::cerr << "no balanced coloring exists\n";
            return 1;
        case SearchStatus::Found:
            break;
    }
    for (std::size_t i = 0; i < outcome.colorings.size(); ++i) {
        const std::string text = serialize_coloring(outcome.colorings[i]);
        if (out.empty()) {
            std::cout << "# solution " << i + 1 << "\n" << text;
        } else if (all) {
            write_text_file(out + "." + std::to_string(i + 1), text);
        } else {
            write_text_file(out, text);
        }
    }
    return 0;
}

int run_blowup(const std::string& graph_path, int q, const std::string& out_graph,
               const std::string& out_coloring) {
    Graph g = load_graph(graph_path);
    ConstructionResult result = blow_up(g, Palette(q));
    self_verify(result);
    save_graph(result.graph, out_graph);
    save_coloring(result.coloring, out_coloring);
    std::cout << result.graph.order() << " " << result.graph.size() << "\n";
    return 0;
}

AnchorSet parse_anchor_list(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw BadAnchors("--anchors needs \"v1,..,vq:v'1,..,v'q\"");
    AnchorSet anchors;
    anchors.primary = detail::parse_int_list(std::string_view(text).substr(0, colon), "anchors");
    anchors.secondary =
        detail::parse_int_list(std::string_view(text).substr(colon + 1), "anchors");
    return anchors;
}

int run_extend(const std::string& graph_path, const std::string& coloring_path,
               const std::string& anchors_text, const std::string& out_graph,
               const std::string& out_coloring) {
    Graph g = load_graph(graph_path);
    Coloring c = load_coloring(coloring_path);
    AnchorSet anchors =
        anchors_text.empty() ? lowest_index_anchors(g, c) : parse_anchor_list(anchors_text);
    ConstructionResult result = vertex_addition(g, c, anchors);
    self_verify(result);
    save_graph(result.graph, out_graph);
    save_coloring(result.coloring, out_coloring);
    std::cout << result.graph.order() << " " << result.graph.size() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, verify and search balanced vertex colorings"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a named family graph");
    std::string gen_spec, gen_out;
    gen->add_option("spec", gen_spec, "cycle:N | complete:N | multipartite:N1,N2,... | circulant:N:A1,A2,...")
        ->required();
    gen->add_option("-o,--output", gen_out, "graph file to write")->required();

    auto* check = app.add_subcommand("check", "test the divisibility conditions balance requires");
    std::string check_graph;
    int check_q = 0;
    check->add_option("graph", check_graph, "graph file")->required();
    check->add_option("-q,--colors", check_q, "number of colors (odd prime)")->required();

    auto* verify_cmd = app.add_subcommand("verify", "verify a coloring against a graph");
    std::string verify_graph, verify_coloring;
    bool verify_json = false;
    verify_cmd->add_option("graph", verify_graph, "graph file")->required();
    verify_cmd->add_option("coloring", verify_coloring, "coloring file")->required();
    verify_cmd->add_flag("--json", verify_json, "emit the full report as JSON");

    auto* construct = app.add_subcommand("construct", "build a closed-form balanced coloring");
    std::string construct_spec, construct_out;
    int construct_q = 0;
    construct->add_option("spec", construct_spec, "multipartite:N1,N2,... | circulant:N:A1,A2,...")
        ->required();
    construct->add_option("-q,--colors", construct_q, "number of colors (odd prime)")->required();
    construct->add_option("-o,--output", construct_out, "coloring file to write")->required();

    auto* product_cmd = app.add_subcommand("product", "build a colored product or join");
    std::string product_kind, product_g, product_h, product_cg, product_ch;
    std::string product_out_graph, product_out_coloring;
    product_cmd
        ->add_option("--kind", product_kind, "cartesian | lex | lex-equal | direct | strong | join")
        ->required();
    product_cmd->add_option("graph1", product_g, "first factor graph file")->required();
    product_cmd->add_option("graph2", product_h, "second factor graph file")->required();
    product_cmd->add_option("--cg", product_cg, "coloring of the first factor");
    product_cmd->add_option("--ch", product_ch, "coloring of the second factor");
    product_cmd->add_option("--out-graph", product_out_graph, "graph file to write")->required();
    product_cmd->add_option("--out-coloring", product_out_coloring, "coloring file to write")
        ->required();

    auto* search = app.add_subcommand("search", "exact search for a balanced coloring");
    std::string search_graph, search_out;
    int search_q = 0;
    std::int64_t search_limit = kUnlimited;
    std::int64_t search_nodes = 100'000'000;
    double search_timeout = 0.0;
    bool search_all = false;
    search->add_option("graph", search_graph, "graph file")->required();
    search->add_option("-q,--colors", search_q, "number of colors (odd prime)")->required();
    search->add_option("--limit", search_limit, "maximum number of colorings to collect");
    search->add_option("--nodes", search_nodes, "backtracking node budget");
    auto* timeout_opt = search->add_option("--timeout", search_timeout, "wall-clock budget in seconds");
    search->add_flag("--all", search_all, "enumerate colorings instead of stopping at the first");
    search->add_option("-o,--output", search_out,
                       "coloring file to write (with --all, files get .1, .2, ... suffixes)");

    auto* blowup = app.add_subcommand("blowup", "embed a graph into a balanced one");
    std::string blowup_graph, blowup_out_graph, blowup_out_coloring;
    int blowup_q = 0;
    blowup->add_option("graph", blowup_graph, "graph file")->required();
    blowup->add_option("-q,--colors", blowup_q, "number of colors (odd prime)")->required();
    blowup->add_option("--out-graph", blowup_out_graph, "graph file to write")->required();
    blowup->add_option("--out-coloring", blowup_out_coloring, "coloring file to write")->required();

    auto* extend = app.add_subcommand("extend", "grow a balanced coloring by 2q-1 vertices");
    std::string extend_graph, extend_coloring, extend_anchors;
    std::string extend_out_graph, extend_out_coloring;
    extend->add_option("graph", extend_graph, "graph file")->required();
    extend->add_option("coloring", extend_coloring, "coloring file")->required();
    extend->add_option("--anchors", extend_anchors,
                       "v1,..,vq:v'1,..,v'q (defaults to the lowest-indexed pair of each color)");
    extend->add_option("--out-graph", extend_out_graph, "graph file to write")->required();
    extend->add_option("--out-coloring", extend_out_coloring, "coloring file to write")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen(gen_spec, gen_out);
        if (check->parsed()) return run_check(check_graph, check_q);
        if (verify_cmd->parsed()) return run_verify(verify_graph, verify_coloring, verify_json);
        if (construct->parsed()) return run_construct(construct_spec, construct_q, construct_out);
        if (product_cmd->parsed())
            return run_product(product_kind, product_g, product_h, product_cg, product_ch,
                               product_out_graph, product_out_coloring);
        if (search->parsed())
            return run_search(search_graph, search_q, search_limit, search_nodes,
                              timeout_opt->count() ? std::optional<double>(search_timeout)
                                                   : std::nullopt,
                              search_all, search_out);
        if (blowup->parsed()) return run_blowup(blowup_graph, blowup_q, blowup_out_graph,
                                                blowup_out_coloring);
        if (extend->parsed())
            return run_extend(extend_graph, extend_coloring, extend_anchors, extend_out_graph,
                              extend_out_coloring);
    } catch (const NotAdmissible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const HypothesisViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InputNotBalanced& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CountsNotEqual& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
