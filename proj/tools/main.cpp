#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "sptough/enumerate.hpp"
#include "sptough/errors.hpp"
#include "sptough/multigraph.hpp"
#include "sptough/parser.hpp"
#include "sptough/sp_tree.hpp"
#include "sptough/structure.hpp"
#include "sptough/toughness.hpp"
#include "sptough/verify.hpp"

namespace {

using namespace sptough;

constexpr int exit_error = 3;

// ==================== INPUT LOADING ====================

// A loaded instance. Inputs naming an existing file are read as edge lists;
// anything else is parsed as an SP expression. Expression inputs carry their
// canonical tree and realization; edge-list inputs recover a tree on demand.
struct instance {
    multigraph graph;
    std::optional<sp_tree> tree;                   // canonical when present
    std::optional<labeled_graph> labeled;          // realization of tree
    std::optional<std::pair<int, int>> terminals;  // in graph's vertex ids
    bool from_file = false;
};

instance load_instance(const std::string& input) {
    instance inst;
    if (std::filesystem::exists(input)) {
        std::ifstream file(input);
        if (!file) throw domain_error("cannot open " + input);
        std::ostringstream text;
        text << file.rdbuf();
        inst.graph = read_edge_list(text.str());
        inst.from_file = true;
        return inst;
    }
    sp_tree tree = canonicalize(parse(input));
    inst.tree = tree;
    inst.labeled = realize(tree);
    inst.graph = inst.labeled->graph;
    inst.terminals = {inst.labeled->s, inst.labeled->t};
    return inst;
}

// Attaches a decomposition tree to an edge-list instance, trying the given
// terminals or every vertex pair in ascending order.
void attach_tree(instance& inst, const std::vector<int>& terminals) {
    if (inst.tree) return;
    const multigraph& g = inst.graph;
    std::vector<std::pair<int, int>> candidates;
    if (!terminals.empty()) {
        candidates.push_back({terminals[0], terminals[1]});
    } else {
        for (std::size_t x = 0; x < g.vertex_count(); ++x)
            for (std::size_t y = x + 1; y < g.vertex_count(); ++y)
                candidates.push_back({g.vertex_ids[x], g.vertex_ids[y]});
    }
    for (auto [s, t] : candidates) {
        auto found = recognize_with_edges(g, s, t);
        if (!found) continue;
        inst.tree = found->tree;
        inst.terminals = {s, t};
        labeled_graph lg;
        lg.graph = g;
        lg.s = s;
        lg.t = t;
        lg.leaf_to_edge = found->leaf_to_input_edge;
        inst.labeled = std::move(lg);
        return;
    }
    throw domain_error(terminals.empty()
                           ? "no terminal pair admits a series-parallel decomposition"
                           : "the given terminals admit no series-parallel decomposition");
}

std::string format_set(const std::vector<int>& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(set[i]);
    }
    return out + "}";
}

// ==================== SUBCOMMANDS ====================

int cmd_toughness(const std::string& input) {
    instance inst = load_instance(input);
    toughness_value tau = toughness(inst.graph);
    if (tau.finite())
        std::cout << to_string(tau) << ", tough set " << format_set(tau.witness) << "\n";
    else
        std::cout << to_string(tau) << "\n";
    return 0;
}

int cmd_classify(const std::string& input) {
    instance inst = load_instance(input);
    classification_report report = classify(inst.graph);

    std::string detail;
    if (const auto* cert = std::get_if<cycle_certificate>(&report.evidence)) {
        detail = "cycle of length " + std::to_string(cert->length);
    } else if (const auto* chain = std::get_if<pearl_chain>(&report.evidence)) {
        detail = "pearl chain";
        for (const chain_component& m : *chain)
            detail += m.edge ? " E" : " R(" + std::to_string(m.arm_a) + "," +
                                          std::to_string(m.arm_b) + ")";
    } else if (const auto* jump = std::get_if<jump_edge_evidence>(&report.evidence)) {
        detail = "deleting edge " + std::to_string(jump->edge_id) +
                 " keeps the toughness at " + to_string(report.tau);
    } else if (const auto* edge = std::get_if<non_decreasing_edge>(&report.evidence)) {
        detail = "deleting edge " + std::to_string(edge->edge_id) +
                 " does not lower the toughness";
    } else if (const auto* occ = std::get_if<occurrence>(&report.evidence)) {
        detail = "contains " + to_string(occ->kind) + " at vertices " +
                 format_set(occ->graph_vertices);
    }

    switch (report.result) {
        case verdict::minimally_tough:
            std::cout << "minimally " << to_string(report.tau) << "-tough (" << detail << ")\n";
            return 0;
        case verdict::not_minimally_tough:
            std::cout << "not minimally tough, toughness " << to_string(report.tau) << ": "
                      << (detail.empty() ? report.reason : detail) << "\n";
            return 1;
        case verdict::out_of_scope:
            std::cout << "out of scope, toughness " << to_string(report.tau) << ": "
                      << report.reason << "\n";
            return 2;
        case verdict::not_applicable:
            std::cout << "not applicable: " << report.reason << "\n";
            return 2;
    }
    return exit_error;
}

int cmd_verify(int max_leaves, bool simple, const std::string& suite_list) {
    verify_options options;
    options.max_leaves = max_leaves;
    options.simple_only = simple;
    if (!suite_list.empty()) {
        std::stringstream stream(suite_list);
        std::string name;
        while (std::getline(stream, name, ','))
            if (!name.empty()) options.suites.push_back(name);
    }

    verify_report report = run_verify(options);
    for (const suite_result& s : report.suites) {
        std::cout << s.name << "\t" << s.checked << "\t" << s.failed << "\n";
        if (s.failed > 0)
            std::cerr << s.name << ": first counterexample: " << s.first_counterexample << "\n";
    }
    std::cerr << "universe size " << report.universe_size << ", "
              << (report.all_passed() ? "all suites passed" : "FAILURES") << "\n";
    return report.all_passed() ? 0 : 1;
}

int cmd_render(const std::string& input, const std::string& format,
               const std::vector<int>& terminals, bool mark_tough_set, bool mark_jump_edges) {
    instance inst = load_instance(input);

    if (format == "expr") {
        attach_tree(inst, terminals);
        std::cout << serialize(*inst.tree) << "\n";
        return 0;
    }
    if (format == "edgelist") {
        for (auto [a, b] : inst.graph.edges) std::cout << a << " " << b << "\n";
        return 0;
    }

    dot_options options;
    if (!terminals.empty() && inst.from_file) {
        if (!inst.graph.has_vertex(terminals[0]) || !inst.graph.has_vertex(terminals[1]))
            throw domain_error("unknown terminal vertex");
        inst.terminals = {terminals[0], terminals[1]};
    }
    options.terminals = inst.terminals;
    if (mark_tough_set) {
        toughness_value tau = toughness(inst.graph);
        if (tau.finite()) options.tough_set = tau.witness;
    }
    if (mark_jump_edges) {
        attach_tree(inst, terminals);
        for (int leaf : jump_edges(*inst.tree))
            options.highlight_edges.push_back(inst.labeled->leaf_to_edge.at(leaf));
    }
    std::cout << to_dot(inst.graph, options);
    return 0;
}

int cmd_enumerate(int max_leaves, bool simple) {
    enumeration_config config;
    config.max_leaves = max_leaves;
    config.simple_only = simple;
    for_each_tree(config, [](const sp_tree& t) { std::cout << serialize(t) << "\n"; });
    return 0;
}

}  // namespace

// ==================== ENTRY POINT ====================

int main(int argc, char** argv) {
    CLI::App app{"exact toughness and minimal-toughness structure of series-parallel graphs"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "dot";
    std::string suite_list;
    std::vector<int> terminals;
    int max_leaves = 6;
    bool simple = false;
    bool mark_tough_set = false;
    bool mark_jump_edges = false;

    CLI::App* toughness_cmd =
        app.add_subcommand("toughness", "exact toughness with a witness tough set");
    toughness_cmd->add_option("input", input, "SP expression or edge-list file")->required();

    CLI::App* classify_cmd = app.add_subcommand(
        "classify", "structural minimal-toughness verdict (exit 0 minimal, 1 not, 2 other)");
    classify_cmd->add_option("input", input, "SP expression or edge-list file")->required();

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the property suites over the enumeration universe");
    verify_cmd->add_option("--max-leaves", max_leaves, "leaf budget (default 6)");
    verify_cmd->add_flag("--simple", simple, "restrict the graph suites to simple graphs");
    verify_cmd->add_option("--suite", suite_list, "comma-separated suite names (default all)");

    CLI::App* render_cmd = app.add_subcommand("render", "print a graph as dot, expr, or edgelist");
    render_cmd->add_option("input", input, "SP expression or edge-list file")->required();
    render_cmd->add_option("--format", format, "dot, expr, or edgelist (default dot)")
        ->check(CLI::IsMember({"dot", "expr", "edgelist"}));
    render_cmd->add_option("--terminals", terminals, "terminal vertex pair for edge-list input")
        ->expected(2);
    render_cmd->add_flag("--tough-set", mark_tough_set, "fill the witness tough set");
    render_cmd->add_flag("--jump-edges", mark_jump_edges, "highlight the jump edges");

    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate", "stream canonical SP expressions, one per line");
    enumerate_cmd->add_option("--max-leaves", max_leaves, "leaf budget (default 6)");
    enumerate_cmd->add_flag("--simple", simple, "only trees realizing simple graphs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (toughness_cmd->parsed()) return cmd_toughness(input);
        if (classify_cmd->parsed()) return cmd_classify(input);
        if (verify_cmd->parsed()) return cmd_verify(max_leaves, simple, suite_list);
        if (render_cmd->parsed())
            return cmd_render(input, format, terminals, mark_tough_set, mark_jump_edges);
        if (enumerate_cmd->parsed()) return cmd_enumerate(max_leaves, simple);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_error;
    } catch (const sp_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}
