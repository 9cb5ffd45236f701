#include "domgame/graph.hpp"

#include <algorithm>
#include <sstream>

namespace domgame {

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v : *this) out.push_back(v);
    return out;
}

Graph::Graph(int n) : n_(n), adj_(n, 0) {
    if (n < 0 || n > kMaxVertices) throw PreconditionError("vertex count out of range: " + std::to_string(n));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }
}

Graph Graph::from_adjacency(int n, std::vector<std::uint64_t> rows) {
    if (n < 0 || n > kMaxVertices) throw PreconditionError("vertex count out of range: " + std::to_string(n));
    if (static_cast<int>(rows.size()) != n) throw PreconditionError("adjacency row count does not match order");
    const std::uint64_t valid = VertexSet::first_n(n).bits();
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~valid) throw PreconditionError("adjacency bit set at or above n");
        if ((rows[v] >> v) & 1) throw PreconditionError("self-loop at vertex " + std::to_string(v));
        for (int u = v + 1; u < n; ++u)
            if (((rows[v] >> u) & 1) != ((rows[u] >> v) & 1))
                throw PreconditionError("adjacency not symmetric between " + std::to_string(v) + " and " +
                                        std::to_string(u));
    }
    Graph g;
    g.n_ = n;
    g.adj_ = std::move(rows);
    return g;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < n_; ++v)
        for (int u : neighbors(v))
            if (u > v) out.emplace_back(v, u);
    return out;
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
    VertexSet out = s;
    for (int v : s) out = out | g.neighbors(v);
    return out;
}

VertexSet open_neighborhood(const Graph& g, VertexSet s) { return closed_neighborhood(g, s) - s; }

Graph induced_subgraph(const Graph& g, VertexSet s) { return induced_subgraph_with_map(g, s).graph; }

InducedSubgraph induced_subgraph_with_map(const Graph& g, VertexSet s) {
    if (!g.vertices().contains_all(s)) throw PreconditionError("vertex set not within graph");
    std::vector<int> original = s.to_vector();
    const int m = static_cast<int>(original.size());
    std::vector<std::uint64_t> rows(m, 0);
    for (int i = 0; i < m; ++i) {
        VertexSet nb = g.neighbors(original[i]) & s;
        for (int j = 0; j < m; ++j)
            if (nb.contains(original[j])) rows[i] |= std::uint64_t{1} << j;
    }
    return {Graph::from_adjacency(m, std::move(rows)), std::move(original)};
}

Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<std::uint64_t> rows(n);
    const std::uint64_t all = VertexSet::first_n(n).bits();
    for (int v = 0; v < n; ++v) rows[v] = all & ~g.closed_neighbors(v).bits();
    return Graph::from_adjacency(n, std::move(rows));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.order() + h.order();
    if (n > kMaxVertices) throw PreconditionError("combined order exceeds 64 vertices");
    std::vector<std::uint64_t> rows(n, 0);
    for (int v = 0; v < g.order(); ++v) rows[v] = g.neighbors(v).bits();
    for (int v = 0; v < h.order(); ++v) rows[g.order() + v] = h.neighbors(v).bits() << g.order();
    return Graph::from_adjacency(n, std::move(rows));
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.order();
    Graph u = disjoint_union(g, h);
    std::vector<std::uint64_t> rows(u.order());
    const std::uint64_t left = VertexSet::first_n(ng).bits();
    const std::uint64_t right = VertexSet::first_n(u.order()).bits() & ~left;
    for (int v = 0; v < u.order(); ++v) rows[v] = u.neighbors(v).bits() | (v < ng ? right : left);
    return Graph::from_adjacency(u.order(), std::move(rows));
}

namespace {

// BFS from `from` restricted to `active`; stops early once `target`
// (if nonempty) is reached. Returns distance to target, or nullopt.
std::optional<int> bfs_distance(const Graph& g, VertexSet from, VertexSet target, VertexSet active) {
    if (from.intersects(target)) return 0;
    VertexSet seen = from;
    VertexSet frontier = from;
    int dist = 0;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next = next | g.neighbors(v);
        next = (next & active) - seen;
        ++dist;
        if (next.intersects(target)) return dist;
        seen = seen | next;
        frontier = next;
    }
    return std::nullopt;
}

}  // namespace

std::optional<int> distance(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) throw PreconditionError("vertex out of range");
    return bfs_distance(g, VertexSet::single(u), VertexSet::single(v), g.vertices());
}

std::optional<int> set_distance(const Graph& g, VertexSet a, VertexSet b) {
    if (a.empty() || b.empty()) throw PreconditionError("set_distance requires nonempty sets");
    if (!g.vertices().contains_all(a | b)) throw PreconditionError("vertex set not within graph");
    return bfs_distance(g, a, b, g.vertices());
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet rest = g.vertices();
    while (!rest.empty()) {
        VertexSet comp = VertexSet::single(rest.front());
        for (;;) {
            VertexSet grown = closed_neighborhood(g, comp);
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        rest = rest - comp;
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_isolate_free(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.neighbors(v).empty()) return false;
    return true;
}

bool is_clique(const Graph& g, VertexSet s) {
    for (int v : s)
        if (!g.closed_neighbors(v).contains_all(s)) return false;
    return true;
}

bool is_triangle_free(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v)) {
            if (u >= v) break;
            if (!(g.neighbors(v) & g.neighbors(u)).empty()) return false;
        }
    return true;
}

bool are_true_twins(const Graph& g, int u, int v) {
    return u != v && g.closed_neighbors(u) == g.closed_neighbors(v);
}

bool are_false_twins(const Graph& g, int u, int v) { return u != v && g.neighbors(u) == g.neighbors(v); }

Graph parse_edge_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);

    auto trim = [](const std::string& s) {
        auto b = s.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) return std::string();
        auto e = s.find_last_not_of(" \t\r\n");
        return s.substr(b, e - b + 1);
    };

    std::string head = trim(parts[0]);
    int n = 0;
    try {
        std::size_t pos = 0;
        n = std::stoi(head, &pos);
        if (pos != head.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw FormatError("edge list must start with the vertex count, got \"" + head + "\"");
    }
    if (n < 0 || n > kMaxVertices) throw FormatError("vertex count out of range: " + std::to_string(n));

    std::vector<Edge> edges;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        std::string p = trim(parts[i]);
        if (p.empty()) continue;
        std::istringstream in(p);
        int u = 0, v = 0;
        std::string extra;
        if (!(in >> u >> v) || (in >> extra)) throw FormatError("bad edge \"" + p + "\" (expected \"u v\")");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw FormatError("edge endpoint out of range in \"" + p + "\"");
        if (u == v) throw FormatError("self-loop in \"" + p + "\"");
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

}  // namespace domgame
