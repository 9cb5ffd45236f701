#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace domgame {

// Everything in this library works on simple graphs with at most 64
// vertices, so a vertex set is a single machine word and adjacency is one
// word per vertex.
inline constexpr int kMaxVertices = 64;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6 lines, edge lists, build scripts).
struct FormatError : Error {
    using Error::Error;
};

// A violated operation precondition (size overflow, isolated vertex in a
// total-game call, non-PSC family passed to the extend operator, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Set of vertex indices < 64, stored as a bit mask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    static constexpr VertexSet first_n(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
    constexpr bool contains_all(VertexSet s) const { return (s.bits_ & ~bits_) == 0; }
    constexpr bool intersects(VertexSet s) const { return (bits_ & s.bits_) != 0; }
    // Lowest vertex; set must be nonempty.
    constexpr int front() const { return std::countr_zero(bits_); }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    constexpr bool operator==(const VertexSet&) const = default;

    // Iterates set members in increasing order.
    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const;

private:
    std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;

// Immutable simple graph on vertices 0..n-1 with one adjacency word per
// vertex. Symmetry and loop-freeness are enforced on construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    // Adopts prebuilt adjacency rows after validating the representation
    // invariants (symmetric, loop-free, no bits at or above n).
    static Graph from_adjacency(int n, std::vector<std::uint64_t> rows);

    int order() const { return n_; }
    std::size_t edge_count() const;
    VertexSet vertices() const { return VertexSet::first_n(n_); }

    VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
    VertexSet closed_neighbors(int v) const { return VertexSet(adj_[v]).with(v); }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
    int degree(int v) const { return std::popcount(adj_[v]); }
    int max_degree() const;

    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// N[S] and N'(S) = N[S] \ S.
VertexSet closed_neighborhood(const Graph& g, VertexSet s);
VertexSet open_neighborhood(const Graph& g, VertexSet s);

// Subgraph induced by s; vertices are reindexed in increasing original
// order. The second form also reports the index map (new -> original),
// which certificate code needs to translate labels back.
Graph induced_subgraph(const Graph& g, VertexSet s);
struct InducedSubgraph {
    Graph graph;
    std::vector<int> original;  // original[new index] = old index
};
InducedSubgraph induced_subgraph_with_map(const Graph& g, VertexSet s);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

// BFS distance; nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, int u, int v);
// Minimum pairwise distance between two nonempty sets.
std::optional<int> set_distance(const Graph& g, VertexSet a, VertexSet b);

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_isolate_free(const Graph& g);
bool is_clique(const Graph& g, VertexSet s);
bool is_triangle_free(const Graph& g);
bool are_true_twins(const Graph& g, int u, int v);   // N[u] == N[v]
bool are_false_twins(const Graph& g, int u, int v);  // N(u) == N(v)

// Text fixture format "n; u v; u v; ...".
Graph parse_edge_list(const std::string& text);

}  // namespace domgame
