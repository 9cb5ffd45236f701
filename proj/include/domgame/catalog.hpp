#pragma once

#include <optional>
#include <string>
#include <utility>

#include "domgame/graph.hpp"

namespace domgame {

Graph path_graph(int k);
Graph cycle_graph(int k);      // k >= 3
Graph complete_graph(int k);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);  // K_{1,leaves}
Graph antihole(int k);         // complement of C_k, k >= 5

// Fixed 6-vertex fixtures: the bipartite family F1..F6 (F1 = 2P3,
// F6 = K_{3,3}) and the co-domino.
Graph family_f(int index);  // 1..6
Graph co_domino();

// Lookup by name: P5, C6, K4, K3,3, F1..F6, 2P3, co-2P3, co-domino,
// antihole(7). Case-insensitive; throws on unknown names.
Graph named_graph(const std::string& name);

// KC_{m,n}: center c adjacent to m common neighbors of c and a co-center
// d, plus n pendant neighbors of c; KC_{0,n} is the star K_{1,n}.
// Vertex order: c, d, u_1..u_m, v_1..v_n (no d when m = 0).
Graph kc_graph(int m, int n);

// Parameters (m, n) with g isomorphic to KC_{m,n}, smallest m first;
// nullopt when g is no KC graph.
std::optional<std::pair<int, int>> recognize_kc(const Graph& g);

}  // namespace domgame
