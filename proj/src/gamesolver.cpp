#include "domgame/gamesolver.hpp"

#include <algorithm>
#include <limits>

namespace domgame {

namespace {

void require_total_preconditions(const Graph& g) {
    if (g.order() < 2) throw PreconditionError("total domination needs at least two vertices");
    for (int v = 0; v < g.order(); ++v)
        if (g.neighbors(v).empty())
            throw PreconditionError("total domination undefined: vertex " + std::to_string(v) + " is isolated");
}

// Smallest k such that some k picks from `choices` cover everything,
// where picking w covers cover(w). Branches on the lowest uncovered
// vertex: any solution must pick one of its coverers.
class CoverSearch {
public:
    CoverSearch(const Graph& g, std::uint64_t all, std::vector<std::uint64_t> cover,
                std::vector<std::uint64_t> coverers)
        : g_(g), all_(all), cover_(std::move(cover)), coverers_(std::move(coverers)) {}

    int run() {
        for (int k = 0;; ++k)
            if (feasible(0, k)) return k;
    }

private:
    bool feasible(std::uint64_t covered, int k) {
        if (covered == all_) return true;
        if (k == 0) return false;
        // Remaining picks cannot cover more than k * (best single gain).
        std::uint64_t missing = all_ & ~covered;
        int best = 0;
        for (int w = 0; w < g_.order(); ++w)
            best = std::max(best, std::popcount(cover_[w] & missing));
        if (std::popcount(missing) > k * best) return false;
        int u = std::countr_zero(missing);
        for (int w : VertexSet(coverers_[u]))
            if (feasible(covered | cover_[w], k - 1)) return true;
        return false;
    }

    const Graph& g_;
    std::uint64_t all_;
    std::vector<std::uint64_t> cover_;    // cover_[w]: what picking w covers
    std::vector<std::uint64_t> coverers_; // coverers_[u]: picks that cover u
};

}  // namespace

int domination_number(const Graph& g) {
    const int n = g.order();
    std::vector<std::uint64_t> cover(n), coverers(n);
    for (int v = 0; v < n; ++v) cover[v] = coverers[v] = g.closed_neighbors(v).bits();
    return CoverSearch(g, g.vertices().bits(), std::move(cover), std::move(coverers)).run();
}

int total_domination_number(const Graph& g) {
    require_total_preconditions(g);
    const int n = g.order();
    std::vector<std::uint64_t> cover(n), coverers(n);
    for (int v = 0; v < n; ++v) cover[v] = coverers[v] = g.neighbors(v).bits();
    return CoverSearch(g, g.vertices().bits(), std::move(cover), std::move(coverers)).run();
}

GameSolver::GameSolver(const Graph& g, GameVariant variant) : graph_(g), all_(g.vertices().bits()) {
    if (variant == GameVariant::TotalDomination && g.order() > 0) require_total_preconditions(g);
    gain_.resize(g.order());
    for (int v = 0; v < g.order(); ++v)
        gain_[v] = variant == GameVariant::Domination ? g.closed_neighbors(v).bits() : g.neighbors(v).bits();
}

int GameSolver::value(VertexSet covered, Mover toMove) {
    if (!graph_.vertices().contains_all(covered)) throw PreconditionError("covered set not within graph");
    return solve(covered.bits(), toMove == Mover::Dominator ? 0 : 1);
}

int GameSolver::solve(std::uint64_t covered, int mover) {
    if (covered == all_) return 0;
    auto& memo = memo_[mover];
    if (auto it = memo.find(covered); it != memo.end()) return it->second;

    // Moves with identical remaining gain have identical subtrees; search
    // one representative per distinct gain.
    std::uint64_t gains[kMaxVertices];
    int count = 0;
    for (std::uint64_t gv : gain_) {
        std::uint64_t r = gv & ~covered;
        if (r) gains[count++] = r;
    }
    std::sort(gains, gains + count);
    count = static_cast<int>(std::unique(gains, gains + count) - gains);

    int best = mover == 0 ? std::numeric_limits<int>::max() : -1;
    for (int i = 0; i < count; ++i) {
        int v = 1 + solve(covered | gains[i], 1 - mover);
        best = mover == 0 ? std::min(best, v) : std::max(best, v);
    }
    memo.emplace(covered, best);
    return best;
}

VertexSet GameSolver::optimal_first_moves(Mover first) {
    if (graph_.order() == 0) throw PreconditionError("optimal_first_moves needs a nonempty graph");
    const int m = first == Mover::Dominator ? 0 : 1;
    const int target = solve(0, m);
    VertexSet out;
    for (int v = 0; v < graph_.order(); ++v) {
        if (gain_[v] == 0) continue;  // cannot happen for legal variants, kept for safety
        if (1 + solve(gain_[v], 1 - m) == target) out = out.with(v);
    }
    return out;
}

int game_value(const Graph& g, GameVariant variant, Mover first) {
    return GameSolver(g, variant).value(VertexSet(), first);
}

int residual_game_value(const Graph& g, VertexSet covered, GameVariant variant, Mover mover) {
    return GameSolver(g, variant).value(covered, mover);
}

VertexSet optimal_first_moves(const Graph& g, GameVariant variant, Mover first) {
    return GameSolver(g, variant).optimal_first_moves(first);
}

}  // namespace domgame
