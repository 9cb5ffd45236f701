#pragma once

#include <random>
#include <vector>

#include "domgame/gamesolver.hpp"
#include "domgame/graph.hpp"
#include "domgame/perfection.hpp"

namespace domgame::testing {

// Erdos-Renyi graph on n vertices with edge probability p.
Graph random_graph(std::mt19937_64& rng, int n, double p);

// Relabel g by perm (perm[v] = new index of v).
Graph permuted(const Graph& g, const std::vector<int>& perm);
Graph randomly_permuted(std::mt19937_64& rng, const Graph& g);

// Plain recursive game value with no memoization and no move
// deduplication; the trust anchor for the memoized solver.
int naive_game_value(const Graph& g, GameVariant variant, Mover first);
int naive_residual_value(const Graph& g, VertexSet covered, GameVariant variant, Mover mover);

// Domination numbers by scanning all vertex subsets.
int subsets_domination_number(const Graph& g);
int subsets_total_domination_number(const Graph& g);

// Isomorphism by trying all n! vertex bijections.
bool permutation_isomorphic(const Graph& g, const Graph& h);

// A random perfect set of cliques of g: subsets of distinct true-twin
// classes, greedily filtered for pairwise compatibility. May be empty.
CliqueFamily random_psc(std::mt19937_64& rng, const Graph& g);

// A random valid construction script with at most max_steps operator
// applications whose replay never exceeds max_order vertices.
BuildScript random_build_script(std::mt19937_64& rng, int max_steps, int max_order);

}  // namespace domgame::testing
