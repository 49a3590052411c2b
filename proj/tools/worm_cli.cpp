// Command-line front end: graph generators, the forcing constructions, copy
// enumeration, WORM verification and the exact solver, wired together with
// graph6 on stdin/stdout and JSON sidecar files.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "worm/worm.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1; // violation found / infeasible / not colorable
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

struct BudgetFlags {
    double time_limit = 0.0; // seconds; 0 = unlimited
    std::uint64_t node_limit = 0;

    worm::SearchBudget to_budget() const
    {
        worm::SearchBudget b;
        if (node_limit > 0)
            b.node_limit = node_limit;
        if (time_limit > 0)
            b.time_limit_seconds = time_limit;
        return b;
    }
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& flags)
{
    cmd->add_option("--time-limit", flags.time_limit,
                    "Wall-clock limit in seconds (default: unlimited)");
    cmd->add_option("--node-limit", flags.node_limit,
                    "Search-node limit (default: unlimited)");
}

std::string read_stream(std::istream& in)
{
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string first_line(const std::string& text)
{
    const auto pos = text.find('\n');
    return pos == std::string::npos ? text : text.substr(0, pos);
}

// A graph argument is a catalog name, "-" (graph6 on stdin), a file holding
// graph6, or a literal graph6 string.
worm::Graph load_graph(const std::string& arg)
{
    if (arg == "-")
        return worm::decode_graph6(first_line(read_stream(std::cin)));
    try {
        return worm::named(arg);
    } catch (const worm::contract_error&) {
    }
    if (std::ifstream file(arg); file)
        return worm::decode_graph6(first_line(read_stream(file)));
    return worm::decode_graph6(arg);
}

worm::json load_json(const std::string& path)
{
    std::ifstream file(path);
    if (!file)
        throw worm::contract_error("cannot open file: " + path);
    return worm::json::parse(read_stream(file));
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream file(path);
    if (!file)
        throw worm::contract_error("cannot write file: " + path);
    file << content;
}

void emit_sidecars(const worm::Graph& g, const std::string& layout_path,
                   const worm::json& layout, const std::string& dot_path)
{
    std::cout << worm::encode_graph6(g) << "\n";
    if (!layout_path.empty())
        write_file(layout_path, layout.dump(2) + "\n");
    if (!dot_path.empty())
        write_file(dot_path, worm::to_dot(g));
}

worm::CopyFamily enumerate_or_exit(const worm::Graph& host, const worm::Graph& pattern,
                                   const worm::SearchBudget& budget)
{
    auto family = worm::enumerate_copies(host, pattern, budget);
    if (!family) {
        std::cerr << "copy enumeration exceeded its budget\n";
        std::exit(exit_budget);
    }
    return std::move(*family);
}

int run(int argc, char** argv)
{
    CLI::App app{"F-WORM coloring toolkit"};
    app.require_subcommand(1);

    // --- gen -------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "Emit a catalog or derived graph as graph6");
    std::vector<std::string> gen_spec;
    std::string gen_dot;
    gen->add_option("spec", gen_spec,
                    "complete N | cycle N | path N | <name> | product A B | join A B")
        ->required()
        ->expected(-1);
    gen->add_option("--dot", gen_dot, "Also write a DOT rendering to this file");
    gen->callback([&] {
        worm::Graph g;
        const auto& s = gen_spec;
        auto want = [&](std::size_t count, const char* usage) {
            if (s.size() != count)
                throw worm::contract_error(std::string("gen: expected '") + usage + "'");
        };
        if (s[0] == "complete" || s[0] == "cycle" || s[0] == "path") {
            want(2, (s[0] + " N").c_str());
            const int order = std::stoi(s[1]);
            g = s[0] == "complete" ? worm::complete(order)
              : s[0] == "cycle"    ? worm::cycle(order)
                                   : worm::path(order);
        } else if (s[0] == "product" || s[0] == "join") {
            want(3, (s[0] + " A B").c_str());
            g = s[0] == "product" ? worm::strong_product(worm::named(s[1]), worm::named(s[2]))
                                  : worm::join(worm::named(s[1]), worm::named(s[2]));
        } else {
            want(1, "<name>");
            g = worm::named(s[0]);
        }
        std::cout << worm::encode_graph6(g) << "\n";
        if (!gen_dot.empty())
            write_file(gen_dot, worm::to_dot(g));
    });

    // --- construct ---------------------------------------------------------
    auto* construct = app.add_subcommand(
        "construct", "Build gadget/c1/c2/gap graphs with layout sidecars");
    construct->require_subcommand(1);
    std::string cons_g, cons_pattern, cons_layout, cons_dot;
    int cons_n = 4;
    std::optional<int> cons_n0;

    auto* cg = construct->add_subcommand("gadget", "The near-complete forcing gadget");
    cg->add_option("--pattern", cons_pattern, "Pattern graph (2-connected)")->required();
    cg->add_option("--layout", cons_layout, "Write the layout JSON to this file");
    cg->add_option("--dot", cons_dot, "Write a DOT rendering to this file");
    cg->callback([&] {
        auto layout = worm::gadget(load_graph(cons_pattern));
        emit_sidecars(layout.graph, cons_layout, worm::layout_to_json(layout), cons_dot);
    });

    auto* cc1 = construct->add_subcommand("c1", "Gadget chains plus one copy per edge");
    cc1->add_option("--g", cons_g, "Base graph")->required();
    cc1->add_option("--pattern", cons_pattern, "Pattern graph (2-connected)")->required();
    cc1->add_option("--n0", [&cons_n0](const std::vector<std::string>& v) {
        cons_n0 = std::stoi(v[0]);
        return true;
    }, "Override the default chain length bound");
    cc1->add_option("--layout", cons_layout, "Write the layout JSON to this file");
    cc1->add_option("--dot", cons_dot, "Write a DOT rendering to this file");
    cc1->callback([&] {
        auto layout = worm::c1(load_graph(cons_g), load_graph(cons_pattern), cons_n0);
        emit_sidecars(layout.graph, cons_layout, worm::layout_to_json(layout), cons_dot);
    });

    auto* cc2 = construct->add_subcommand("c2", "c1 plus one copy per edge-spanning n-subset");
    cc2->add_option("--g", cons_g, "Base graph")->required();
    cc2->add_option("--pattern", cons_pattern, "Pattern graph (2-connected)")->required();
    cc2->add_option("--layout", cons_layout, "Write the layout JSON to this file");
    cc2->add_option("--dot", cons_dot, "Write a DOT rendering to this file");
    cc2->callback([&] {
        auto layout = worm::c2(load_graph(cons_g), load_graph(cons_pattern));
        emit_sidecars(layout.graph, cons_layout, worm::layout_to_json(layout), cons_dot);
    });

    auto* cgap = construct->add_subcommand("gap", "(G x K_{n-1}) v K_{(n-3)(n-1)}");
    cgap->add_option("--g", cons_g, "Triangle-free connected base with chi >= 3")->required();
    cgap->add_option("--n", cons_n, "Clique pattern order (>= 4)")->required();
    cgap->add_option("--layout", cons_layout, "Write the layout JSON to this file");
    cgap->add_option("--dot", cons_dot, "Write a DOT rendering to this file");
    cgap->callback([&] {
        auto layout = worm::gap_graph(load_graph(cons_g), cons_n);
        emit_sidecars(layout.graph, cons_layout, worm::layout_to_json(layout), cons_dot);
    });

    // --- copies ------------------------------------------------------------
    auto* copies = app.add_subcommand("copies", "Enumerate all pattern copies of a host");
    std::string cp_g, cp_pattern;
    BudgetFlags cp_budget;
    copies->add_option("--g", cp_g, "Host graph")->required();
    copies->add_option("--pattern", cp_pattern, "Pattern graph")->required();
    add_budget_flags(copies, cp_budget);
    copies->callback([&] {
        const auto family = enumerate_or_exit(load_graph(cp_g), load_graph(cp_pattern),
                                              cp_budget.to_budget());
        std::cout << worm::family_to_json(family).dump(2) << "\n";
    });

    // --- verify ------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "Check a coloring against the copy family");
    std::string vf_g, vf_pattern, vf_coloring;
    BudgetFlags vf_budget;
    verify_cmd->add_option("--g", vf_g, "Host graph")->required();
    verify_cmd->add_option("--pattern", vf_pattern, "Pattern graph")->required();
    verify_cmd->add_option("--coloring", vf_coloring, "Coloring JSON file")->required();
    add_budget_flags(verify_cmd, vf_budget);
    verify_cmd->callback([&] {
        const auto host = load_graph(vf_g);
        const auto family =
            enumerate_or_exit(host, load_graph(vf_pattern), vf_budget.to_budget());
        const auto coloring = worm::coloring_from_json(load_json(vf_coloring));
        const auto verdict = worm::verify(host, family, coloring);
        std::cout << worm::verdict_to_json(verdict).dump(2) << "\n";
        std::exit(verdict.ok() ? exit_ok : exit_negative);
    });

    // --- solve -------------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "Search for a coloring with exactly k colors");
    std::string sv_g, sv_pattern;
    int sv_k = 0;
    BudgetFlags sv_budget;
    solve->add_option("--g", sv_g, "Host graph")->required();
    solve->add_option("--pattern", sv_pattern, "Pattern graph")->required();
    solve->add_option("--k", sv_k, "Exact number of colors")->required();
    add_budget_flags(solve, sv_budget);
    solve->callback([&] {
        const auto host = load_graph(sv_g);
        const auto budget = sv_budget.to_budget();
        const auto family = enumerate_or_exit(host, load_graph(sv_pattern), budget);
        const auto result = worm::solve_exactly(host, family, sv_k, budget);
        worm::json out;
        out["k"] = sv_k;
        out["status"] = worm::solve_status_name(result.status);
        if (result.witness)
            out["witness"] = worm::coloring_to_json(*result.witness);
        std::cout << out.dump(2) << "\n";
        std::exit(result.status == worm::SolveStatus::feasible    ? exit_ok
                  : result.status == worm::SolveStatus::infeasible ? exit_negative
                                                                   : exit_budget);
    });

    // --- spectrum ------------------------------------------------------------
    auto* spectrum = app.add_subcommand(
        "spectrum", "Full feasible set, WORM chromatic bounds and gaps");
    std::string sp_g, sp_pattern;
    BudgetFlags sp_budget;
    int sp_threads = 1;
    bool sp_no_timing = false;
    bool sp_witnesses = false;
    spectrum->add_option("--g", sp_g, "Host graph")->required();
    spectrum->add_option("--pattern", sp_pattern, "Pattern graph")->required();
    spectrum->add_option("--threads", sp_threads, "Parallel per-k searches (default 1)");
    spectrum->add_flag("--no-timing", sp_no_timing, "Omit timing for byte-stable output");
    spectrum->add_flag("--witnesses", sp_witnesses, "Include witness colorings in the table");
    add_budget_flags(spectrum, sp_budget);
    spectrum->callback([&] {
        const auto start = std::chrono::steady_clock::now();
        const auto host = load_graph(sp_g);
        const auto budget = sp_budget.to_budget();
        const auto pattern = load_graph(sp_pattern);
        const auto family = enumerate_or_exit(host, pattern, budget);
        const auto fs = worm::feasible_set(host, family, budget, sp_threads);

        worm::json report;
        report["input"] = worm::encode_graph6(host);
        report["pattern"] = worm::encode_graph6(pattern);
        report["vertex_count"] = host.vertex_count();
        report["copy_count"] = family.size();
        auto table = worm::feasible_set_to_json(fs, sp_witnesses);
        report.update(table);
        worm::json budget_info;
        budget_info["node_limit"] =
            sp_budget.node_limit > 0 ? worm::json(sp_budget.node_limit) : worm::json("unlimited");
        budget_info["time_limit_seconds"] =
            sp_budget.time_limit > 0 ? worm::json(sp_budget.time_limit) : worm::json("unlimited");
        report["budget"] = std::move(budget_info);
        bool any_unknown = false, any_feasible = false;
        for (const auto& entry : fs.statuses) {
            any_unknown |= entry.status == worm::SolveStatus::unknown;
            any_feasible |= entry.status == worm::SolveStatus::feasible;
        }
        report["budget_exhausted"] = any_unknown;
        if (!sp_no_timing)
            report["timing_ms"] = std::chrono::duration<double, std::milli>(
                                      std::chrono::steady_clock::now() - start)
                                      .count();
        std::cout << report.dump(2) << "\n";
        std::exit(any_unknown ? exit_budget : any_feasible ? exit_ok : exit_negative);
    });

    // --- witness -------------------------------------------------------------
    auto* witness = app.add_subcommand("witness", "Deterministic proof witnesses");
    witness->require_subcommand(1);
    std::string wt_g, wt_pattern, wt_proper;
    int wt_colors = 0;
    int wt_n = 4;
    std::optional<int> wt_n0;

    auto load_proper = [&](const worm::Graph& base) {
        if (!wt_proper.empty())
            return worm::coloring_from_json(load_json(wt_proper));
        if (wt_colors > 0)
            return worm::proper_coloring_exactly(base, wt_colors);
        const auto chrom = worm::chromatic_number(base);
        return chrom.witness;
    };

    auto* wc1 = witness->add_subcommand("c1", "Chain coloring from a proper base coloring");
    wc1->add_option("--g", wt_g, "Base graph")->required();
    wc1->add_option("--pattern", wt_pattern, "Pattern graph")->required();
    wc1->add_option("--proper", wt_proper, "Proper base coloring JSON (default: chi-coloring)");
    wc1->add_option("--colors", wt_colors, "Generate a proper base coloring with exactly k colors");
    wc1->add_option("--n0", [&wt_n0](const std::vector<std::string>& v) {
        wt_n0 = std::stoi(v[0]);
        return true;
    }, "Override the chain length bound");
    wc1->callback([&] {
        const auto base = load_graph(wt_g);
        const auto layout = worm::c1(base, load_graph(wt_pattern), wt_n0);
        const auto coloring = worm::witness_c1(layout, load_proper(base));
        worm::json out = worm::coloring_to_json(coloring);
        out["used"] = coloring.used_count();
        out["outer_colors"] = worm::outer_color_count(layout, coloring);
        std::cout << out.dump(2) << "\n";
    });

    auto* wlow = witness->add_subcommand("gap-low", "The (n-1)-color gap-graph witness");
    wlow->add_option("--g", wt_g, "Base graph")->required();
    wlow->add_option("--n", wt_n, "Clique pattern order")->required();
    wlow->callback([&] {
        const auto layout = worm::gap_graph(load_graph(wt_g), wt_n);
        const auto coloring = worm::witness_gap_low(layout);
        worm::json out = worm::coloring_to_json(coloring);
        out["used"] = coloring.used_count();
        std::cout << out.dump(2) << "\n";
    });

    auto* whigh = witness->add_subcommand("gap-high", "A (t+n-3)-color gap-graph witness");
    whigh->add_option("--g", wt_g, "Base graph")->required();
    whigh->add_option("--n", wt_n, "Clique pattern order")->required();
    whigh->add_option("--proper", wt_proper, "Proper base coloring JSON (default: chi-coloring)");
    whigh->add_option("--colors", wt_colors, "Generate a proper base coloring with exactly t colors");
    whigh->callback([&] {
        const auto base = load_graph(wt_g);
        const auto layout = worm::gap_graph(base, wt_n);
        const auto coloring = worm::witness_gap_high(layout, load_proper(base));
        worm::json out = worm::coloring_to_json(coloring);
        out["used"] = coloring.used_count();
        std::cout << out.dump(2) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            std::cout << app.help();
            return exit_ok;
        }
        std::cerr << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const worm::graph6_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const worm::contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const worm::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
