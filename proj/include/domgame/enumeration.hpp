#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

// Canonical form: the lexicographically smallest upper-triangle bit
// string (graph6 cell order) over all relabelings that list vertices by
// nondecreasing degree. Equal forms <=> isomorphic graphs.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint64_t> columns;  // columns[p]: bits (i,p+1), i ascending from the MSB side

    bool operator==(const CanonicalForm&) const = default;
    bool operator<(const CanonicalForm& o) const;
};

CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);

// All non-isomorphic graphs on n vertices, canonical representatives in
// canonical order. The built-in generator extends each (n-1)-vertex class
// by one vertex and deduplicates; it is capped at n = 7, supply a graph6
// file beyond that.
std::vector<Graph> enumerate_nonisomorphic(int n);

// One extension step of the generator: every class on k+1 vertices
// obtainable from the given classes on k vertices.
std::vector<Graph> extend_nonisomorphic(const std::vector<Graph>& reps);

struct GraphSource {
    enum class Kind { Builtin, File };
    Kind kind = Kind::Builtin;
    int n = 0;
    std::string path;

    static GraphSource builtin(int n) { return {Kind::Builtin, n, {}}; }
    static GraphSource file(std::string path) { return {Kind::File, 0, std::move(path)}; }
};

std::vector<Graph> load_graphs(const GraphSource& source);

struct CountsRow {
    int n = 0;
    long perfect_all = 0;
    long perfect_connected = 0;
    long min_imperfect = 0;

    bool operator==(const CountsRow&) const = default;
};

// Classifies every graph of the stream: how many are perfect, how many of
// those are connected, and how many are minimally imperfect. `jobs`
// workers split the stream; results do not depend on the split.
CountsRow table1(const GraphSource& source, int jobs = 1);

// The minimally imperfect graphs of the stream, canonical representatives
// in canonical order.
std::vector<Graph> find_min_imperfect(const GraphSource& source, int jobs = 1);

// Published reference counts for n = 3..9, for --check style validation.
std::optional<CountsRow> reference_counts(int n);

// Non-isomorphic graph counts 1, 2, 4, 11, 34, 156, 1044 for n = 1..7.
long classical_graph_count(int n);

}  // namespace domgame
