#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

// Quotient of a graph by its true-twin classes. Each class induces a
// maximal homogeneous clique; the contracted graph has no true twins.
struct ContractionMap {
    std::vector<int> class_of;         // vertex -> class index
    std::vector<int> representatives;  // class index -> lowest member
    Graph contracted;                  // graph on the class indices

    int contracted_degree(int v) const { return contracted.degree(class_of[v]); }
};

ContractionMap mhc_contraction(const Graph& g);

// Clique whose vertices are pairwise true twins. Throws on an empty set.
bool is_homogeneous_clique(const Graph& g, VertexSet s);

// Candidate perfect set of cliques: pairwise disjoint nonempty vertex sets.
struct CliqueFamily {
    std::vector<VertexSet> cliques;

    static CliqueFamily of(std::initializer_list<VertexSet> qs) { return {std::vector<VertexSet>(qs)}; }
    int size() const { return static_cast<int>(cliques.size()); }
    VertexSet support() const;
};

enum class PscClause { Homogeneity, Distance, Join };

struct PscCheck {
    bool ok = true;
    PscClause clause = PscClause::Homogeneity;
    int i = -1, j = -1;  // offending clique index(es)
    std::optional<int> found_distance;
    std::string describe() const;
};

// A family is a perfect set of cliques when every member is a homogeneous
// clique, every pair lies at distance exactly 3, and the open
// neighborhoods of every pair are fully joined. Empty and one-element
// families are perfect whenever the single clique is homogeneous.
PscCheck check_psc(const Graph& g, const CliqueFamily& family);
bool is_psc(const Graph& g, const CliqueFamily& family);

// The two construction operators: disjoint union with a complete graph,
// and the extension O(g, v, family) that appends a vertex adjacent to
// everything outside the family's cliques. apply_extend requires the
// family to be a PSC and reports the violated clause otherwise.
Graph apply_union(const Graph& g, int clique_size);
Graph apply_extend(const Graph& g, const CliqueFamily& family);

struct BuildStep {
    enum class Kind { Start, UnionClique, Extend };
    Kind kind = Kind::Start;
    int clique_size = 0;   // UnionClique
    CliqueFamily family;   // Extend, over the intermediate graph's indices
};

// Replayable construction certificate: Start, then any sequence of
// UnionClique / Extend steps, each validated against the intermediate
// graph. An empty script denotes the empty graph.
struct BuildScript {
    std::vector<BuildStep> steps;
};

Graph build(const BuildScript& script);
BuildScript parse_build_script(const std::string& text);
std::string format_build_script(const BuildScript& script);

// Where and why recognition failed.
struct ImperfectionWitness {
    enum class Reason { TwoNonCompleteComponents, ComponentNotHomogeneousClique, CliquePairBadDistance, CliquePairMissingJoin };
    Reason reason;
    int depth = 0;                // peeling depth at which the stage failed
    std::optional<int> pivot;     // max-contracted-degree vertex, input labels
    std::vector<int> vertices;    // offending vertices, input labels
    std::optional<int> found_distance;
    std::string describe() const;
};

struct RecognitionResult {
    bool perfect = false;
    // On YES: a script whose replay reproduces the graph, with
    // build_order[i] the input vertex realized by built vertex i.
    std::optional<BuildScript> script;
    std::vector<int> build_order;
    // On NO: the failing stage.
    std::optional<ImperfectionWitness> witness;
};

// Polynomial recognizer. Discards complete components; at most one
// non-complete component may remain. That component is peeled one vertex
// at a time: take a vertex v maximizing the contracted degree, require
// the components of H - N[v] to form a PSC in H - v, and recurse on
// H - v. Graphs on at most one vertex are perfect.
RecognitionResult recognize_gg_perfect(const Graph& g);

// gamma_g(G) = gamma(G)?
bool is_gg_graph(const Graph& g);

// Definitional oracles; exponential, intended for small graphs.
bool brute_force_gg_perfect(const Graph& g);       // every induced subgraph satisfies gamma_g = gamma
bool is_2_gg_perfect(const Graph& g);              // restricted to subgraphs with gamma = 2
bool is_minimally_gg_imperfect(const Graph& g);    // imperfect, all vertex-deleted subgraphs perfect

// Pair (u, v) such that both N[u] \ N[v] and N[v] \ N[u] contain two
// nonadjacent vertices; such a pair certifies that g is not 2-perfect.
std::optional<std::pair<int, int>> two_nonadjacent_witness(const Graph& g);

// Some vertex subset of g induces a graph isomorphic to pattern.
bool contains_induced(const Graph& g, const Graph& pattern);

struct ClassificationReport {
    bool gg_perfect = false;
    bool two_gg_perfect = false;             // equal to gg_perfect by the characterization
    bool staller_perfect = false;            // gamma_g'-perfect: disjoint union of cliques
    std::optional<bool> total_perfect;       // gamma_tg-perfect; nullopt when isolates present
    std::optional<bool> staller_total_perfect;  // gamma_tg'-perfect: cograph
    bool minimally_imperfect = false;

    std::optional<BuildScript> script;       // gg_perfect certificate
    std::vector<int> build_order;
    std::optional<ImperfectionWitness> witness;
    // Named forbidden induced subgraph responsible for each NO verdict.
    std::optional<std::string> staller_forbidden;        // P3
    std::optional<std::string> total_forbidden;          // P4 or co-2P3
    std::optional<std::string> staller_total_forbidden;  // P4
};

ClassificationReport classify(const Graph& g);

}  // namespace domgame
