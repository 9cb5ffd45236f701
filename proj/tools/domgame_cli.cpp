// Command line front end: solve and classify single graphs, replay and
// check construction scripts, enumerate graph streams, and reproduce the
// perfect/imperfect counts.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "domgame/catalog.hpp"
#include "domgame/enumeration.hpp"
#include "domgame/gamesolver.hpp"
#include "domgame/graph6.hpp"
#include "domgame/perfection.hpp"

using namespace domgame;
using nlohmann::json;

namespace {

struct GraphInput {
    std::string graph6;
    std::string edges;
    std::string name;
    bool from_stdin = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--graph6", graph6, "graph as a graph6 line");
        cmd->add_option("--edges", edges, "graph as \"n; u v; u v; ...\"");
        cmd->add_option("--name", name, "catalog graph (P5, C6, K3,3, F1..F6, co-domino, antihole(7), ...)");
        cmd->add_flag("--stdin", from_stdin, "read one graph6 line from standard input");
    }

    Graph load() const {
        int sources = !graph6.empty() + !edges.empty() + !name.empty() + from_stdin;
        if (sources != 1) throw PreconditionError("give the graph via exactly one of --graph6/--edges/--name/--stdin");
        if (!graph6.empty()) return parse_graph6(graph6);
        if (!edges.empty()) return parse_edge_list(edges);
        if (!name.empty()) return named_graph(name);
        std::string line;
        if (!std::getline(std::cin, line)) throw PreconditionError("no graph on standard input");
        return parse_graph6(line);
    }
};

int g_max_n = 24;

void guard_solver_size(const Graph& g) {
    if (g.order() > g_max_n)
        throw PreconditionError("graph has " + std::to_string(g.order()) + " vertices; game solving above " +
                                std::to_string(g_max_n) + " needs an explicit --max-n");
}

json script_json(const BuildScript& script) {
    json steps = json::array();
    for (const BuildStep& s : script.steps) {
        switch (s.kind) {
            case BuildStep::Kind::Start:
                steps.push_back({{"op", "start"}});
                break;
            case BuildStep::Kind::UnionClique:
                steps.push_back({{"op", "union"}, {"size", s.clique_size}});
                break;
            case BuildStep::Kind::Extend: {
                json cliques = json::array();
                for (const VertexSet& q : s.family.cliques) cliques.push_back(q.to_vector());
                steps.push_back({{"op", "extend"}, {"cliques", cliques}});
                break;
            }
        }
    }
    return steps;
}

json report_json(const Graph& g, const ClassificationReport& report, bool with_certificate) {
    json out;
    out["n"] = g.order();
    out["graph6"] = g.order() <= 62 ? write_graph6(g) : "";
    out["gg_perfect"] = report.gg_perfect;
    out["two_gg_perfect"] = report.two_gg_perfect;
    out["staller_perfect"] = report.staller_perfect;
    out["total_perfect"] = report.total_perfect ? json(*report.total_perfect) : json(nullptr);
    out["staller_total_perfect"] =
        report.staller_total_perfect ? json(*report.staller_total_perfect) : json(nullptr);
    out["minimally_imperfect"] = report.minimally_imperfect;
    if (report.witness) out["witness"] = report.witness->describe();
    if (report.staller_forbidden) out["staller_forbidden"] = *report.staller_forbidden;
    if (report.total_forbidden) out["total_forbidden"] = *report.total_forbidden;
    if (report.staller_total_forbidden) out["staller_total_forbidden"] = *report.staller_total_forbidden;
    if (with_certificate && report.script) {
        out["script"] = script_json(*report.script);
        out["build_order"] = report.build_order;
    }
    return out;
}

std::string verdict(bool b) { return b ? "yes" : "no"; }
std::string verdict(const std::optional<bool>& b) { return b ? verdict(*b) : "n/a (isolated vertex)"; }

GraphSource make_source(int n, const std::string& file) {
    if (!file.empty()) return GraphSource::file(file);
    if (n < 1) throw PreconditionError("give --n (1..7 builtin) or --graph6-file");
    return GraphSource::builtin(n);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver and recognizer for domination games on small graphs"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    bool as_json = false;
    int jobs = 1;
    app.add_flag("--json", as_json, "machine-readable output")->configurable(false);
    app.add_option("--jobs", jobs, "worker threads for stream commands")->capture_default_str();
    app.add_option("--max-n", g_max_n, "largest order the game solver accepts")->capture_default_str();

    // solve
    auto* solve = app.add_subcommand("solve", "domination numbers, game value and optimal first moves");
    GraphInput solve_input;
    solve_input.attach(solve);
    std::string variant_str = "dom";
    std::string mover_str = "d";
    solve->add_option("--variant", variant_str, "dom|total")->check(CLI::IsMember({"dom", "total"}));
    solve->add_option("--mover", mover_str, "d|s (who moves first)")->check(CLI::IsMember({"d", "s"}));

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "perfection verdicts with certificates");
    GraphInput classify_input;
    classify_input.attach(classify_cmd);
    bool with_certificate = false;
    bool with_oracle = false;
    classify_cmd->add_flag("--certificate", with_certificate, "emit the construction script on yes");
    classify_cmd->add_flag("--oracle", with_oracle, "cross-check with the brute-force oracle (n<=7)");

    // contract
    auto* contract = app.add_subcommand("contract", "maximal homogeneous clique contraction");
    GraphInput contract_input;
    contract_input.attach(contract);

    // build
    auto* build_cmd = app.add_subcommand("build", "replay a construction script");
    std::string script_file;
    build_cmd->add_option("--script", script_file, "script file (default: standard input)");

    // check-psc
    auto* psc_cmd = app.add_subcommand("check-psc", "test a clique family for the PSC conditions");
    GraphInput psc_input;
    psc_input.attach(psc_cmd);
    std::string family_str;
    psc_cmd->add_option("--family", family_str, "cliques as \"q1;q2;...\", vertices comma-separated")->required();

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "emit all non-isomorphic graphs on n vertices");
    int enum_n = 0;
    enum_cmd->add_option("--n", enum_n, "order (1..7)")->required();

    // table1
    auto* table_cmd = app.add_subcommand("table1", "count perfect and minimally imperfect graphs");
    int table_n = 0;
    std::string table_file;
    bool table_check = false;
    table_cmd->add_option("--n", table_n, "order (builtin streams up to 7)");
    table_cmd->add_option("--graph6-file", table_file, "graph6 stream to classify instead");
    table_cmd->add_flag("--check", table_check, "compare against the published counts");

    // hunt-imperfect
    auto* hunt_cmd = app.add_subcommand("hunt-imperfect", "list minimally imperfect graphs in a stream");
    int hunt_n = 0;
    std::string hunt_file;
    hunt_cmd->add_option("--n", hunt_n, "order (builtin streams up to 7)");
    hunt_cmd->add_option("--graph6-file", hunt_file, "graph6 stream to scan instead");

    // iso
    auto* iso_cmd = app.add_subcommand("iso", "isomorphism test between two graph6 lines");
    std::vector<std::string> iso_lines;
    iso_cmd->add_option("lines", iso_lines, "two graph6 lines")->expected(2);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) {
            Graph g = solve_input.load();
            guard_solver_size(g);
            GameVariant variant = variant_str == "dom" ? GameVariant::Domination : GameVariant::TotalDomination;
            Mover mover = mover_str == "d" ? Mover::Dominator : Mover::Staller;
            int gamma = domination_number(g);
            std::optional<int> gamma_t;
            if (g.order() >= 2 && is_isolate_free(g)) gamma_t = total_domination_number(g);
            int value = game_value(g, variant, mover);
            VertexSet moves = g.order() > 0 ? optimal_first_moves(g, variant, mover) : VertexSet();
            if (as_json) {
                json out;
                out["n"] = g.order();
                out["graph6"] = g.order() <= 62 ? write_graph6(g) : "";
                out["gamma"] = gamma;
                out["gamma_t"] = gamma_t ? json(*gamma_t) : json(nullptr);
                out["variant"] = variant_str;
                out["mover"] = mover_str;
                out["game_value"] = value;
                out["optimal_first_moves"] = moves.to_vector();
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "n = " << g.order() << "\n";
                std::cout << "gamma = " << gamma << "\n";
                if (gamma_t) std::cout << "gamma_t = " << *gamma_t << "\n";
                std::cout << (variant_str == "dom" ? "game value (" : "total game value (")
                          << (mover_str == "d" ? "Dominator" : "Staller") << " starts) = " << value << "\n";
                std::cout << "optimal first moves:";
                for (int v : moves) std::cout << " " << v;
                std::cout << "\n";
            }
        } else if (*classify_cmd) {
            Graph g = classify_input.load();
            guard_solver_size(g);
            ClassificationReport report = classify(g);
            if (with_oracle) {
                if (g.order() > 7) throw PreconditionError("--oracle is limited to graphs on at most 7 vertices");
                if (brute_force_gg_perfect(g) != report.gg_perfect)
                    throw Error("oracle disagrees with the recognizer; please report this graph");
            }
            if (as_json) {
                std::cout << report_json(g, report, with_certificate).dump() << "\n";
            } else {
                std::cout << "gg-perfect: " << verdict(report.gg_perfect) << "\n";
                std::cout << "2-gg-perfect: " << verdict(report.two_gg_perfect) << "\n";
                std::cout << "staller-start perfect: " << verdict(report.staller_perfect) << "\n";
                std::cout << "total-game perfect: " << verdict(report.total_perfect) << "\n";
                std::cout << "staller-start total perfect: " << verdict(report.staller_total_perfect) << "\n";
                std::cout << "minimally imperfect: " << verdict(report.minimally_imperfect) << "\n";
                if (report.witness) std::cout << "witness: " << report.witness->describe() << "\n";
                if (report.total_forbidden) std::cout << "total-game obstruction: " << *report.total_forbidden << "\n";
                if (with_certificate && report.script) std::cout << format_build_script(*report.script);
            }
        } else if (*contract) {
            Graph g = contract_input.load();
            ContractionMap cm = mhc_contraction(g);
            if (as_json) {
                json out;
                out["graph6"] = write_graph6(cm.contracted);
                out["classes"] = cm.class_of;
                out["representatives"] = cm.representatives;
                std::cout << out.dump() << "\n";
            } else {
                std::cout << write_graph6(cm.contracted) << "\n";
                std::cout << "classes:";
                for (int c : cm.class_of) std::cout << " " << c;
                std::cout << "\n";
            }
        } else if (*build_cmd) {
            std::string text;
            if (script_file.empty()) {
                std::ostringstream buf;
                buf << std::cin.rdbuf();
                text = buf.str();
            } else {
                std::ifstream in(script_file);
                if (!in) throw Error("cannot open script file \"" + script_file + "\"");
                std::ostringstream buf;
                buf << in.rdbuf();
                text = buf.str();
            }
            Graph g = build(parse_build_script(text));
            std::cout << write_graph6(g) << "\n";
        } else if (*psc_cmd) {
            Graph g = psc_input.load();
            BuildScript probe = parse_build_script("extend " + family_str + "\n");
            PscCheck check = check_psc(g, probe.steps.at(0).family);
            if (as_json) {
                json out;
                out["psc"] = check.ok;
                if (!check.ok) out["violation"] = check.describe();
                std::cout << out.dump() << "\n";
            } else {
                std::cout << (check.ok ? "PSC" : std::string("not a PSC: ") + check.describe()) << "\n";
            }
            if (!check.ok) return 1;
        } else if (*enum_cmd) {
            for (const Graph& g : enumerate_nonisomorphic(enum_n)) std::cout << write_graph6(g) << "\n";
        } else if (*table_cmd) {
            CountsRow row = table1(make_source(table_n, table_file), jobs);
            std::cout << row.n << "\t" << row.perfect_all << "\t" << row.perfect_connected << "\t"
                      << row.min_imperfect << "\n";
            if (table_check) {
                auto want = reference_counts(row.n);
                if (!want) throw Error("no published counts for n = " + std::to_string(row.n));
                if (!(row == *want)) {
                    std::cerr << "mismatch: expected " << want->perfect_all << "\t" << want->perfect_connected
                              << "\t" << want->min_imperfect << "\n";
                    return 1;
                }
            }
        } else if (*hunt_cmd) {
            std::vector<Graph> found = find_min_imperfect(make_source(hunt_n, hunt_file), jobs);
            for (const Graph& g : found) {
                std::cout << write_graph6(g);
                bool named = false;
                for (int i = 1; i <= 6 && !named; ++i)
                    if (are_isomorphic(g, family_f(i))) {
                        std::cout << "\tF" << i;
                        named = true;
                    }
                if (!named && are_isomorphic(g, path_graph(5))) {
                    std::cout << "\tP5";
                    named = true;
                }
                if (!named && are_isomorphic(g, co_domino())) {
                    std::cout << "\tco-domino";
                    named = true;
                }
                if (!named && g.order() >= 5 && are_isomorphic(g, antihole(g.order()))) {
                    std::cout << "\tantihole(" << g.order() << ")";
                    named = true;
                }
                if (!named) std::cout << "\tunlisted";
                std::cout << "\n";
            }
        } else if (*iso_cmd) {
            Graph a = parse_graph6(iso_lines[0]);
            Graph b = parse_graph6(iso_lines[1]);
            bool same = are_isomorphic(a, b);
            std::cout << (same ? "isomorphic" : "not isomorphic") << "\n";
            if (!same) return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
