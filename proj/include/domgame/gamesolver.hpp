#pragma once

#include <unordered_map>

#include "domgame/graph.hpp"

namespace domgame {

enum class GameVariant { Domination, TotalDomination };
enum class Mover { Dominator, Staller };

constexpr Mover opponent(Mover m) { return m == Mover::Dominator ? Mover::Staller : Mover::Dominator; }

// gamma(G): minimum size of a set S with N[S] = V.
int domination_number(const Graph& g);

// gamma_t(G): minimum size of a set S with N(S) = V. Requires an
// isolate-free graph on at least two vertices.
int total_domination_number(const Graph& g);

// Memoized minimax solver for the (total) domination game on one graph.
// A move on v is legal while it covers at least one new vertex, where a
// move covers N[v] in the domination game and N(v) in the total game; the
// game ends when every vertex is covered. Dominator minimizes the number
// of moves, Staller maximizes it. The remaining-move value of a position
// depends only on (covered, mover), which is the memo key.
class GameSolver {
public:
    GameSolver(const Graph& g, GameVariant variant);

    // Remaining moves from an arbitrary position under optimal play.
    int value(VertexSet covered, Mover toMove);

    // All first moves that achieve the game value from the start position.
    VertexSet optimal_first_moves(Mover first);

    const Graph& graph() const { return graph_; }

private:
    int solve(std::uint64_t covered, int mover);

    Graph graph_;
    std::vector<std::uint64_t> gain_;
    std::uint64_t all_;
    std::unordered_map<std::uint64_t, int> memo_[2];
};

// gamma_g / gamma_g' / gamma_tg / gamma_tg' depending on variant and
// first mover: the number of moves under optimal play from the empty
// position.
int game_value(const Graph& g, GameVariant variant, Mover first);

// Value of the game continued from a position where `covered` is already
// dominated (totally dominated) and `mover` is to move.
int residual_game_value(const Graph& g, VertexSet covered, GameVariant variant, Mover mover);

VertexSet optimal_first_moves(const Graph& g, GameVariant variant, Mover first);

}  // namespace domgame
