#include "domgame/perfection.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <sstream>

#include "domgame/catalog.hpp"
#include "domgame/gamesolver.hpp"

namespace domgame {

namespace {

void warn_once_above(const Graph& g, int recommended, const char* what, std::atomic<bool>& flag) {
    if (g.order() > recommended && !flag.exchange(true))
        std::cerr << what << ": order " << g.order() << " exceeds the recommended " << recommended
                  << ", expect exponential cost\n";
}

// BFS distance between two sets inside the subgraph induced by `active`.
std::optional<int> masked_set_distance(const Graph& g, VertexSet a, VertexSet b, VertexSet active) {
    a = a & active;
    b = b & active;
    if (a.empty() || b.empty()) return std::nullopt;
    if (a.intersects(b)) return 0;
    VertexSet seen = a, frontier = a;
    int dist = 0;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next = next | g.neighbors(v);
        next = (next & active) - seen;
        ++dist;
        if (next.intersects(b)) return dist;
        seen = seen | next;
        frontier = next;
    }
    return std::nullopt;
}

std::vector<VertexSet> masked_components(const Graph& g, VertexSet mask) {
    std::vector<VertexSet> out;
    VertexSet rest = mask;
    while (!rest.empty()) {
        VertexSet comp = VertexSet::single(rest.front());
        for (;;) {
            VertexSet grown = comp;
            for (int v : comp) grown = grown | (g.neighbors(v) & mask);
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        rest = rest - comp;
    }
    return out;
}

void validate_family(const Graph& g, const CliqueFamily& family) {
    VertexSet seen;
    for (const VertexSet& q : family.cliques) {
        if (q.empty()) throw PreconditionError("clique family contains an empty set");
        if (!g.vertices().contains_all(q)) throw PreconditionError("clique not within graph");
        if (seen.intersects(q)) throw PreconditionError("clique family is not pairwise disjoint");
        seen = seen | q;
    }
}

}  // namespace

ContractionMap mhc_contraction(const Graph& g) {
    const int n = g.order();
    ContractionMap map;
    map.class_of.assign(n, -1);
    std::vector<std::uint64_t> keys;
    for (int v = 0; v < n; ++v) {
        const std::uint64_t key = g.closed_neighbors(v).bits();
        for (std::size_t c = 0; c < keys.size(); ++c)
            if (keys[c] == key) {
                map.class_of[v] = static_cast<int>(c);
                break;
            }
        if (map.class_of[v] < 0) {
            map.class_of[v] = static_cast<int>(keys.size());
            keys.push_back(key);
            map.representatives.push_back(v);
        }
    }
    const int k = static_cast<int>(map.representatives.size());
    std::vector<std::uint64_t> rows(k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g.adjacent(map.representatives[a], map.representatives[b])) {
                rows[a] |= std::uint64_t{1} << b;
                rows[b] |= std::uint64_t{1} << a;
            }
    map.contracted = Graph::from_adjacency(k, std::move(rows));
    return map;
}

bool is_homogeneous_clique(const Graph& g, VertexSet s) {
    if (s.empty()) throw PreconditionError("is_homogeneous_clique requires a nonempty set");
    if (!g.vertices().contains_all(s)) throw PreconditionError("vertex set not within graph");
    const VertexSet reference = g.closed_neighbors(s.front());
    for (int v : s)
        if (g.closed_neighbors(v) != reference) return false;
    return true;
}

VertexSet CliqueFamily::support() const {
    VertexSet s;
    for (const VertexSet& q : cliques) s = s | q;
    return s;
}

std::string PscCheck::describe() const {
    if (ok) return "perfect set of cliques";
    std::ostringstream out;
    switch (clause) {
        case PscClause::Homogeneity:
            out << "clique " << i << " is not a homogeneous clique";
            break;
        case PscClause::Distance:
            out << "cliques " << i << " and " << j << " at distance ";
            if (found_distance)
                out << *found_distance;
            else
                out << "infinity";
            out << " (need 3)";
            break;
        case PscClause::Join:
            out << "open neighborhoods of cliques " << i << " and " << j << " are not fully joined";
            break;
    }
    return out.str();
}

PscCheck check_psc(const Graph& g, const CliqueFamily& family) {
    validate_family(g, family);
    const int k = family.size();
    for (int i = 0; i < k; ++i)
        if (!is_homogeneous_clique(g, family.cliques[i])) return {false, PscClause::Homogeneity, i, -1, {}};
    std::vector<VertexSet> open(k);
    for (int i = 0; i < k; ++i) open[i] = open_neighborhood(g, family.cliques[i]);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            auto d = set_distance(g, family.cliques[i], family.cliques[j]);
            if (d != std::optional<int>(3)) return {false, PscClause::Distance, i, j, d};
            for (int a : open[i])
                if (!g.neighbors(a).contains_all(open[j])) return {false, PscClause::Join, i, j, {}};
        }
    return {};
}

bool is_psc(const Graph& g, const CliqueFamily& family) { return check_psc(g, family).ok; }

Graph apply_union(const Graph& g, int clique_size) {
    if (clique_size < 1) throw PreconditionError("union clique size must be positive");
    return disjoint_union(g, complete_graph(clique_size));
}

Graph apply_extend(const Graph& g, const CliqueFamily& family) {
    PscCheck check = check_psc(g, family);
    if (!check.ok) throw PreconditionError("family is not a PSC: " + check.describe());
    const int n = g.order();
    if (n + 1 > kMaxVertices) throw PreconditionError("extension exceeds 64 vertices");
    std::vector<std::uint64_t> rows(n + 1, 0);
    for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v).bits();
    const std::uint64_t attach = (g.vertices() - family.support()).bits();
    rows[n] = attach;
    for (int v : VertexSet(attach)) rows[v] |= std::uint64_t{1} << n;
    return Graph::from_adjacency(n + 1, std::move(rows));
}

Graph build(const BuildScript& script) {
    Graph g;
    bool started = false;
    for (std::size_t idx = 0; idx < script.steps.size(); ++idx) {
        const BuildStep& step = script.steps[idx];
        try {
            switch (step.kind) {
                case BuildStep::Kind::Start:
                    if (started) throw PreconditionError("duplicate start");
                    g = complete_graph(1);
                    started = true;
                    break;
                case BuildStep::Kind::UnionClique:
                    if (!started) throw PreconditionError("script must begin with start");
                    g = apply_union(g, step.clique_size);
                    break;
                case BuildStep::Kind::Extend:
                    if (!started) throw PreconditionError("script must begin with start");
                    g = apply_extend(g, step.family);
                    break;
            }
        } catch (const Error& e) {
            throw PreconditionError("step " + std::to_string(idx) + ": " + e.what());
        }
    }
    return g;
}

BuildScript parse_build_script(const std::string& text) {
    BuildScript script;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        BuildStep step;
        if (word == "start") {
            step.kind = BuildStep::Kind::Start;
        } else if (word == "union") {
            step.kind = BuildStep::Kind::UnionClique;
            if (!(ls >> step.clique_size) || step.clique_size < 1)
                throw FormatError("line " + std::to_string(lineno) + ": union needs a positive size");
        } else if (word == "extend") {
            step.kind = BuildStep::Kind::Extend;
            std::string rest;
            std::getline(ls, rest);
            std::string cur;
            auto flush = [&](const std::string& part) {
                if (part.find_first_not_of(" \t") == std::string::npos) return;
                VertexSet q;
                std::istringstream ps(part);
                std::string item;
                while (std::getline(ps, item, ',')) {
                    try {
                        std::size_t used = 0;
                        int v = std::stoi(item, &used);
                        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
                        if (used != item.size() || v < 0 || v >= kMaxVertices) throw std::invalid_argument("");
                        q = q.with(v);
                    } catch (const std::exception&) {
                        throw FormatError("line " + std::to_string(lineno) + ": bad vertex \"" + item + "\"");
                    }
                }
                step.family.cliques.push_back(q);
            };
            for (char c : rest) {
                if (c == ';') {
                    flush(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            flush(cur);
        } else {
            throw FormatError("line " + std::to_string(lineno) + ": unknown step \"" + word + "\"");
        }
        std::string extra;
        if (step.kind != BuildStep::Kind::Extend && (ls >> extra))
            throw FormatError("line " + std::to_string(lineno) + ": trailing input \"" + extra + "\"");
        script.steps.push_back(std::move(step));
    }
    return script;
}

std::string format_build_script(const BuildScript& script) {
    std::ostringstream out;
    for (const BuildStep& step : script.steps) {
        switch (step.kind) {
            case BuildStep::Kind::Start:
                out << "start\n";
                break;
            case BuildStep::Kind::UnionClique:
                out << "union " << step.clique_size << "\n";
                break;
            case BuildStep::Kind::Extend: {
                out << "extend";
                for (std::size_t i = 0; i < step.family.cliques.size(); ++i) {
                    out << (i == 0 ? " " : ";");
                    bool first = true;
                    for (int v : step.family.cliques[i]) {
                        out << (first ? "" : ",") << v;
                        first = false;
                    }
                }
                out << "\n";
                break;
            }
        }
    }
    return out.str();
}

std::string ImperfectionWitness::describe() const {
    std::ostringstream out;
    out << "depth " << depth << ": ";
    switch (reason) {
        case Reason::TwoNonCompleteComponents:
            out << "two non-complete components (vertices";
            for (int v : vertices) out << " " << v;
            out << ")";
            break;
        case Reason::ComponentNotHomogeneousClique:
            out << "after removing N[" << (pivot ? *pivot : -1) << "], component {";
            for (std::size_t i = 0; i < vertices.size(); ++i) out << (i ? "," : "") << vertices[i];
            out << "} is not a homogeneous clique";
            break;
        case Reason::CliquePairBadDistance:
            out << "pivot " << (pivot ? *pivot : -1) << ": residual cliques at vertices " << vertices[0] << " and "
                << vertices[1] << " lie at distance ";
            if (found_distance)
                out << *found_distance;
            else
                out << "infinity";
            out << " (need 3)";
            break;
        case Reason::CliquePairMissingJoin:
            out << "pivot " << (pivot ? *pivot : -1) << ": neighborhoods of residual cliques at " << vertices[0]
                << " and " << vertices[1] << " are not fully joined";
            break;
    }
    return out.str();
}

namespace {

// Recursive recognition worker. Appends construction steps in replay
// order and records which input vertex each built vertex realizes.
struct Recognizer {
    BuildScript script;
    std::vector<int> build_order;  // built index -> input vertex
    std::optional<ImperfectionWitness> witness;

    void emit_clique(const Graph& h, const std::vector<int>& to_input, VertexSet comp, bool first) {
        if (first) {
            script.steps.push_back({BuildStep::Kind::Start, 0, {}});
            for (int i = 1; i < comp.count(); ++i) script.steps.push_back({BuildStep::Kind::Extend, 0, {}});
        } else {
            script.steps.push_back({BuildStep::Kind::UnionClique, comp.count(), {}});
        }
        for (int v : comp) build_order.push_back(to_input[v]);
        (void)h;
    }

    bool run(const Graph& h, const std::vector<int>& to_input, int depth) {
        std::vector<VertexSet> comps = components(h);
        std::vector<VertexSet> complete, other;
        for (VertexSet c : comps) (is_clique(h, c) ? complete : other).push_back(c);

        if (other.size() >= 2) {
            witness = ImperfectionWitness{ImperfectionWitness::Reason::TwoNonCompleteComponents, depth, {},
                                          {to_input[other[0].front()], to_input[other[1].front()]}, {}};
            return false;
        }
        if (other.empty()) {
            for (std::size_t i = 0; i < complete.size(); ++i) emit_clique(h, to_input, complete[i], i == 0);
            return true;
        }
        if (!complete.empty() || comps.size() > 1) {
            auto [sub, local] = induced_subgraph_with_map(h, other[0]);
            std::vector<int> sub_to_input(local.size());
            for (std::size_t i = 0; i < local.size(); ++i) sub_to_input[i] = to_input[local[i]];
            if (!run(sub, sub_to_input, depth)) return false;
            for (const VertexSet& c : complete) emit_clique(h, to_input, c, false);
            return true;
        }

        // h is connected and not complete: peel a vertex of maximum
        // contracted degree and require the leftovers to form a PSC.
        const ContractionMap cm = mhc_contraction(h);
        int pivot = 0;
        for (int v = 1; v < h.order(); ++v)
            if (cm.contracted_degree(v) > cm.contracted_degree(pivot)) pivot = v;

        const VertexSet rest = h.vertices() - h.closed_neighbors(pivot);
        const VertexSet without_pivot = h.vertices().without(pivot);
        std::vector<VertexSet> cliques = masked_components(h, rest);

        // Cliques and their open neighborhoods avoid the pivot entirely,
        // so these checks read the same in h and in h - pivot; distances
        // are taken in h - pivot, where the extension is replayed.
        for (const VertexSet& q : cliques)
            if (!is_homogeneous_clique(h, q)) {
                std::vector<int> vs;
                for (int v : q) vs.push_back(to_input[v]);
                witness = ImperfectionWitness{ImperfectionWitness::Reason::ComponentNotHomogeneousClique, depth,
                                              to_input[pivot], vs, {}};
                return false;
            }
        for (std::size_t i = 0; i < cliques.size(); ++i)
            for (std::size_t j = i + 1; j < cliques.size(); ++j) {
                auto d = masked_set_distance(h, cliques[i], cliques[j], without_pivot);
                if (d != std::optional<int>(3)) {
                    witness = ImperfectionWitness{ImperfectionWitness::Reason::CliquePairBadDistance, depth,
                                                  to_input[pivot],
                                                  {to_input[cliques[i].front()], to_input[cliques[j].front()]}, d};
                    return false;
                }
                VertexSet open_i = open_neighborhood(h, cliques[i]);
                VertexSet open_j = open_neighborhood(h, cliques[j]);
                for (int a : open_i)
                    if (!h.neighbors(a).contains_all(open_j)) {
                        witness = ImperfectionWitness{ImperfectionWitness::Reason::CliquePairMissingJoin, depth,
                                                      to_input[pivot],
                                                      {to_input[cliques[i].front()], to_input[cliques[j].front()]},
                                                      {}};
                        return false;
                    }
            }

        auto [sub, local] = induced_subgraph_with_map(h, without_pivot);
        std::vector<int> sub_to_input(local.size());
        for (std::size_t i = 0; i < local.size(); ++i) sub_to_input[i] = to_input[local[i]];
        if (!run(sub, sub_to_input, depth + 1)) return false;

        // Express the family over build positions of the peeled graph.
        std::vector<int> position(kMaxVertices, -1);
        for (std::size_t i = 0; i < build_order.size(); ++i) position[build_order[i]] = static_cast<int>(i);
        CliqueFamily family;
        for (const VertexSet& q : cliques) {
            VertexSet mapped;
            for (int v : q) mapped = mapped.with(position[to_input[v]]);
            family.cliques.push_back(mapped);
        }
        script.steps.push_back({BuildStep::Kind::Extend, 0, std::move(family)});
        build_order.push_back(to_input[pivot]);
        return true;
    }
};

}  // namespace

RecognitionResult recognize_gg_perfect(const Graph& g) {
    Recognizer rec;
    std::vector<int> identity(g.order());
    for (int v = 0; v < g.order(); ++v) identity[v] = v;
    RecognitionResult result;
    if (rec.run(g, identity, 0)) {
        result.perfect = true;
        result.script = std::move(rec.script);
        result.build_order = std::move(rec.build_order);
    } else {
        result.perfect = false;
        result.witness = std::move(rec.witness);
    }
    return result;
}

bool is_gg_graph(const Graph& g) {
    return domination_number(g) == game_value(g, GameVariant::Domination, Mover::Dominator);
}

bool brute_force_gg_perfect(const Graph& g) {
    static std::atomic<bool> warned{false};
    warn_once_above(g, 8, "brute_force_gg_perfect", warned);
    const std::uint64_t full = g.vertices().bits();
    for (std::uint64_t m = 0;; ++m) {
        if (!is_gg_graph(induced_subgraph(g, VertexSet(m)))) return false;
        if (m == full) return true;
    }
}

bool is_2_gg_perfect(const Graph& g) {
    static std::atomic<bool> warned{false};
    warn_once_above(g, 8, "is_2_gg_perfect", warned);
    const std::uint64_t full = g.vertices().bits();
    for (std::uint64_t m = 0;; ++m) {
        Graph sub = induced_subgraph(g, VertexSet(m));
        if (domination_number(sub) == 2 && game_value(sub, GameVariant::Domination, Mover::Dominator) != 2)
            return false;
        if (m == full) return true;
    }
}

bool is_minimally_gg_imperfect(const Graph& g) {
    static std::atomic<bool> warned{false};
    warn_once_above(g, 10, "is_minimally_gg_imperfect", warned);
    // Perfection is hereditary, so vertex-deleted perfection covers all
    // proper induced subgraphs. Check those first: they fail early on
    // almost every input and avoid the game solve.
    for (int v = 0; v < g.order(); ++v)
        if (!recognize_gg_perfect(induced_subgraph(g, g.vertices().without(v))).perfect) return false;
    if (is_gg_graph(g)) return false;
    if (domination_number(g) != 2)
        throw Error("internal check failed: minimally imperfect graph with domination number != 2");
    return true;
}

std::optional<std::pair<int, int>> two_nonadjacent_witness(const Graph& g) {
    auto has_nonadjacent_pair = [&](VertexSet s) {
        for (int a : s)
            if (!(s - g.closed_neighbors(a)).empty()) return true;
        return false;
    };
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            VertexSet a = g.closed_neighbors(u) - g.closed_neighbors(v);
            VertexSet b = g.closed_neighbors(v) - g.closed_neighbors(u);
            if (has_nonadjacent_pair(a) && has_nonadjacent_pair(b)) return std::make_pair(u, v);
        }
    return std::nullopt;
}

namespace {

struct InducedSearch {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> order;     // pattern vertices, most-constrained first
    std::vector<int> assigned;  // order position -> host vertex

    bool dfs(std::size_t level, VertexSet used) {
        if (level == order.size()) return true;
        const int pu = order[level];
        for (int w = 0; w < host.order(); ++w) {
            if (used.contains(w) || host.degree(w) < pattern.degree(pu)) continue;
            bool ok = true;
            for (std::size_t l = 0; l < level && ok; ++l)
                ok = pattern.adjacent(order[l], pu) == host.adjacent(assigned[l], w);
            if (!ok) continue;
            assigned[level] = w;
            if (dfs(level + 1, used.with(w))) return true;
        }
        return false;
    }
};

}  // namespace

bool contains_induced(const Graph& g, const Graph& pattern) {
    if (pattern.order() == 0) return true;
    if (pattern.order() > g.order()) return false;

    // Order pattern vertices so each new one is adjacent to the mapped
    // prefix where possible.
    std::vector<int> order;
    VertexSet placed;
    int start = 0;
    for (int v = 1; v < pattern.order(); ++v)
        if (pattern.degree(v) > pattern.degree(start)) start = v;
    order.push_back(start);
    placed = placed.with(start);
    while (static_cast<int>(order.size()) < pattern.order()) {
        int best = -1, best_links = -1;
        for (int v = 0; v < pattern.order(); ++v) {
            if (placed.contains(v)) continue;
            int links = (pattern.neighbors(v) & placed).count();
            if (links > best_links || (links == best_links && pattern.degree(v) > pattern.degree(best))) {
                best = v;
                best_links = links;
            }
        }
        order.push_back(best);
        placed = placed.with(best);
    }

    InducedSearch search{g, pattern, std::move(order), std::vector<int>(pattern.order())};
    return search.dfs(0, VertexSet());
}

ClassificationReport classify(const Graph& g) {
    ClassificationReport report;
    RecognitionResult rec = recognize_gg_perfect(g);
    report.gg_perfect = rec.perfect;
    report.two_gg_perfect = rec.perfect;
    report.script = std::move(rec.script);
    report.build_order = std::move(rec.build_order);
    report.witness = std::move(rec.witness);

    report.staller_perfect = true;
    for (VertexSet comp : components(g))
        if (!is_clique(g, comp)) {
            report.staller_perfect = false;
            report.staller_forbidden = "P3";
            break;
        }

    if (is_isolate_free(g)) {
        const bool has_p4 = contains_induced(g, path_graph(4));
        report.staller_total_perfect = !has_p4;
        if (has_p4) {
            report.total_perfect = false;
            report.total_forbidden = "P4";
            report.staller_total_forbidden = "P4";
        } else if (contains_induced(g, complement(family_f(1)))) {
            report.total_perfect = false;
            report.total_forbidden = "co-2P3";
        } else {
            report.total_perfect = true;
        }
    }

    report.minimally_imperfect = is_minimally_gg_imperfect(g);
    return report;
}

}  // namespace domgame
