#include "domgame/enumeration.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <thread>
#include <unordered_set>

#include "domgame/graph6.hpp"
#include "domgame/perfection.hpp"

namespace domgame {

bool CanonicalForm::operator<(const CanonicalForm& o) const {
    if (n != o.n) return n < o.n;
    return columns < o.columns;
}

namespace {

// Branch-and-bound search for the lexicographically smallest
// upper-triangle encoding. Vertices are bucketed by degree and every
// position must host a vertex of the position's degree (nondecreasing),
// which any isomorphism respects.
//
// The search keeps the invariant that the already-fixed columns of the
// current path equal the prefix of `best`: a candidate column above
// best[p-1] prunes (candidates are sorted, so its siblings prune too),
// and a column below it overwrites best[p-1] and resets the deeper
// columns to an open sentinel, which every real column undercuts.
struct CanonicalSearch {
    const Graph& g;
    int n;
    std::array<int, kMaxVertices> required_degree;
    std::array<int, kMaxVertices> assigned;
    std::array<std::uint64_t, kMaxVertices> best;
    static constexpr std::uint64_t kOpen = ~std::uint64_t{0};  // wider than any column

    explicit CanonicalSearch(const Graph& graph) : g(graph), n(graph.order()) {
        std::vector<int> degrees(n);
        for (int v = 0; v < n; ++v) degrees[v] = g.degree(v);
        std::sort(degrees.begin(), degrees.end());
        for (int p = 0; p < n; ++p) required_degree[p] = degrees[p];
        best.fill(kOpen);
    }

    void dfs(int p, std::uint64_t used) {
        if (p == n) return;
        // Candidates with the right degree, ordered by appended column.
        std::array<std::pair<std::uint64_t, int>, kMaxVertices> cand;
        int count = 0;
        for (int u = 0; u < n; ++u) {
            if ((used >> u) & 1) continue;
            if (g.degree(u) != required_degree[p]) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < p; ++i) col = (col << 1) | (g.adjacent(assigned[i], u) ? 1 : 0);
            cand[count++] = {col, u};
        }
        std::sort(cand.begin(), cand.begin() + count);
        for (int c = 0; c < count; ++c) {
            auto [col, u] = cand[c];
            if (p > 0) {
                if (col > best[p - 1]) break;
                if (col < best[p - 1]) {
                    best[p - 1] = col;
                    std::fill(best.begin() + p, best.begin() + std::max(1, n - 1), kOpen);
                }
            }
            assigned[p] = u;
            dfs(p + 1, used | (std::uint64_t{1} << u));
        }
    }

    CanonicalForm run() {
        dfs(0, 0);
        CanonicalForm form;
        form.n = n;
        if (n > 1) form.columns.assign(best.begin(), best.begin() + n - 1);
        return form;
    }
};

struct FormHash {
    std::size_t operator()(const CanonicalForm& f) const {
        std::size_t h = static_cast<std::size_t>(f.n) * 1099511628211ULL;
        for (std::uint64_t w : f.columns) h = (h ^ w) * 1099511628211ULL;
        return h;
    }
};

Graph graph_of_form(const CanonicalForm& form) {
    std::vector<std::uint64_t> rows(form.n, 0);
    for (int col = 1; col < form.n; ++col) {
        std::uint64_t bits = form.columns[col - 1];
        for (int row = col - 1; row >= 0; --row, bits >>= 1)
            if (bits & 1) {
                rows[row] |= std::uint64_t{1} << col;
                rows[col] |= std::uint64_t{1} << row;
            }
    }
    return Graph::from_adjacency(form.n, std::move(rows));
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return CanonicalSearch(g).run(); }

Graph canonical_graph(const Graph& g) { return graph_of_form(canonical_form(g)); }

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    return canonical_form(g) == canonical_form(h);
}

std::vector<Graph> extend_nonisomorphic(const std::vector<Graph>& reps) {
    std::unordered_set<CanonicalForm, FormHash> seen;
    std::vector<CanonicalForm> forms;
    for (const Graph& rep : reps) {
        const int k = rep.order();
        std::vector<std::uint64_t> base(k + 1, 0);
        for (int v = 0; v < k; ++v) base[v] = rep.neighbors(v).bits();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            std::vector<std::uint64_t> rows = base;
            rows[k] = mask;
            for (int v : VertexSet(mask)) rows[v] |= std::uint64_t{1} << k;
            CanonicalForm form = canonical_form(Graph::from_adjacency(k + 1, std::move(rows)));
            if (seen.insert(form).second) forms.push_back(std::move(form));
        }
    }
    std::sort(forms.begin(), forms.end());
    std::vector<Graph> out;
    out.reserve(forms.size());
    for (const CanonicalForm& f : forms) out.push_back(graph_of_form(f));
    return out;
}

std::vector<Graph> enumerate_nonisomorphic(int n) {
    if (n < 1) throw PreconditionError("enumerate_nonisomorphic needs n >= 1");
    if (n > 7)
        throw PreconditionError("built-in enumeration is capped at 7 vertices; supply a graph6 file for n = " +
                                std::to_string(n));
    std::vector<Graph> reps = {Graph(1)};
    for (int k = 1; k < n; ++k) reps = extend_nonisomorphic(reps);
    return reps;
}

std::vector<Graph> load_graphs(const GraphSource& source) {
    if (source.kind == GraphSource::Kind::Builtin) return enumerate_nonisomorphic(source.n);
    std::ifstream in(source.path);
    if (!in) throw Error("cannot open graph6 file \"" + source.path + "\"");
    std::vector<Graph> out;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == ">>graph6<<") continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const FormatError& e) {
            throw FormatError(source.path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

namespace {

struct ScanShard {
    CountsRow row;
    std::vector<Graph> witnesses;
};

void scan_range(const std::vector<Graph>& graphs, std::size_t lo, std::size_t hi, bool collect, ScanShard& shard) {
    for (std::size_t i = lo; i < hi; ++i) {
        const Graph& g = graphs[i];
        if (recognize_gg_perfect(g).perfect) {
            ++shard.row.perfect_all;
            if (is_connected(g)) ++shard.row.perfect_connected;
        }
        if (is_minimally_gg_imperfect(g)) {
            ++shard.row.min_imperfect;
            if (collect) shard.witnesses.push_back(canonical_graph(g));
        }
    }
}

ScanShard scan(const std::vector<Graph>& graphs, int jobs, bool collect) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || graphs.size() < 2) {
        ScanShard shard;
        scan_range(graphs, 0, graphs.size(), collect, shard);
        return shard;
    }
    jobs = std::min<int>(jobs, static_cast<int>(graphs.size()));
    std::vector<ScanShard> shards(jobs);
    std::vector<std::thread> threads;
    const std::size_t chunk = (graphs.size() + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(graphs.size(), lo + chunk);
        threads.emplace_back(scan_range, std::cref(graphs), lo, hi, collect, std::ref(shards[t]));
    }
    for (auto& th : threads) th.join();
    ScanShard total;
    for (ScanShard& s : shards) {
        total.row.perfect_all += s.row.perfect_all;
        total.row.perfect_connected += s.row.perfect_connected;
        total.row.min_imperfect += s.row.min_imperfect;
        total.witnesses.insert(total.witnesses.end(), std::make_move_iterator(s.witnesses.begin()),
                               std::make_move_iterator(s.witnesses.end()));
    }
    return total;
}

int stream_order(const GraphSource& source, const std::vector<Graph>& graphs) {
    if (source.kind == GraphSource::Kind::Builtin) return source.n;
    return graphs.empty() ? 0 : graphs.front().order();
}

}  // namespace

CountsRow table1(const GraphSource& source, int jobs) {
    std::vector<Graph> graphs = load_graphs(source);
    ScanShard shard = scan(graphs, jobs, false);
    shard.row.n = stream_order(source, graphs);
    return shard.row;
}

std::vector<Graph> find_min_imperfect(const GraphSource& source, int jobs) {
    std::vector<Graph> graphs = load_graphs(source);
    ScanShard shard = scan(graphs, jobs, true);
    // Witnesses are already canonical graphs, so their graph6 lines sort
    // exactly like the canonical forms.
    std::sort(shard.witnesses.begin(), shard.witnesses.end(), [](const Graph& a, const Graph& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return write_graph6(a) < write_graph6(b);
    });
    return shard.witnesses;
}

std::optional<CountsRow> reference_counts(int n) {
    switch (n) {
        case 3: return CountsRow{3, 4, 2, 0};
        case 4: return CountsRow{4, 11, 6, 0};
        case 5: return CountsRow{5, 32, 19, 2};
        case 6: return CountsRow{6, 122, 81, 8};
        case 7: return CountsRow{7, 536, 386, 1};
        case 8: return CountsRow{8, 2754, 2102, 1};
        case 9: return CountsRow{9, 15752, 12476, 1};
        default: return std::nullopt;
    }
}

long classical_graph_count(int n) {
    static constexpr long counts[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    if (n < 0 || n > 7) throw PreconditionError("classical counts available for n <= 7 only");
    return counts[n];
}

}  // namespace domgame
