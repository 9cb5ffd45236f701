#include <doctest.h>

#include <random>

#include "domgame/catalog.hpp"
#include "domgame/graph.hpp"
#include "domgame/graph6.hpp"
#include "test_support.hpp"

using namespace domgame;
using testing::random_graph;

namespace {

// Independent graph6 reference decoder: expands the payload to a flat
// bit vector and reads the upper triangle cell by cell.
Graph reference_decode(const std::string& line) {
    REQUIRE(!line.empty());
    std::size_t pos = 0;
    int n = line[0] - 63;
    if (line[0] == '~') {
        n = (line[1] - 63) * 64 * 64 + (line[2] - 63) * 64 + (line[3] - 63);
        pos = 3;
    }
    std::vector<int> bits;
    for (std::size_t i = pos + 1; i < line.size(); ++i) {
        int b = line[i] - 63;
        for (int k = 5; k >= 0; --k) bits.push_back((b >> k) & 1);
    }
    std::vector<Edge> edges;
    std::size_t cell = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++cell)
            if (bits.at(cell)) edges.emplace_back(row, col);
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("graph6 fixed fixtures decode as hand-checked") {
    CHECK(parse_graph6("?") == Graph(0));
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6("B?") == Graph(3));
    CHECK(parse_graph6("Bw") == complete_graph(3));
    CHECK(write_graph6(Graph(0)) == "?");
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(write_graph6(complete_graph(3)) == "Bw");
    // P4 as 0-1-2-3: cells (0,1),(0,2),(1,2),(0,3),(1,3),(2,3) = 101001
    // = 41, so the payload byte is 41+63 = 'h'.
    CHECK(write_graph6(path_graph(4)) == "Ch");
    CHECK(parse_graph6("Ch") == path_graph(4));
}

TEST_CASE("graph6 agrees with the reference decoder") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 300; ++round) {
        int n = static_cast<int>(rng() % 13);
        Graph g = random_graph(rng, n, 0.4);
        std::string line = write_graph6(g);
        CHECK(reference_decode(line) == g);
        CHECK(parse_graph6(line) == g);
    }
}

TEST_CASE("graph6 round-trips over random graphs up to 62 vertices") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 400; ++round) {
        int n = static_cast<int>(rng() % 63);
        Graph g = random_graph(rng, n, 0.3);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
}

TEST_CASE("graph6 accepts the long size form and the standard header") {
    // 63 vertices, no edges: '~' then 63 in three 6-bit digits.
    std::string line = "~";
    line += static_cast<char>(63 + 0);
    line += static_cast<char>(63 + 0);
    line += static_cast<char>(63 + 63);
    line += std::string((63 * 62 / 2 + 5) / 6, '?');
    Graph g = parse_graph6(line);
    CHECK(g.order() == 63);
    CHECK(g.edge_count() == 0);
    CHECK(parse_graph6(">>graph6<<Bw") == complete_graph(3));
}

TEST_CASE("graph6 errors carry offsets") {
    CHECK_THROWS_AS(parse_graph6("B"), FormatError);              // missing payload
    CHECK_THROWS_AS(parse_graph6("B??"), FormatError);            // payload too long
    CHECK_THROWS_AS(parse_graph6(std::string("B") + '\x1f'), FormatError);  // byte below 63
    CHECK_THROWS_AS(parse_graph6("~~~~~~~~"), FormatError);       // order above 64
    try {
        parse_graph6("Bw?");
        FAIL("expected a format error");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("payload length") != std::string::npos);
        CHECK(std::string(e.what()).find("offset") != std::string::npos);
    }
    CHECK_THROWS_AS(write_graph6(Graph(63)), PreconditionError);
}

TEST_CASE("edge list format") {
    Graph p3 = parse_edge_list("3; 0 1; 1 2");
    CHECK(p3 == path_graph(3));
    CHECK(parse_edge_list(" 2 ") == Graph(2));
    CHECK_THROWS_AS(parse_edge_list("x; 0 1"), FormatError);
    CHECK_THROWS_AS(parse_edge_list("3; 0 3"), FormatError);
    CHECK_THROWS_AS(parse_edge_list("3; 1 1"), FormatError);
    CHECK_THROWS_AS(parse_edge_list("3; 0 1 2"), FormatError);
}

TEST_CASE("constructors reject broken adjacency") {
    CHECK_THROWS_AS(Graph(65), PreconditionError);
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), PreconditionError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), PreconditionError);
    CHECK_THROWS_AS(Graph::from_adjacency(2, {1, 0}), PreconditionError);   // loop
    CHECK_THROWS_AS(Graph::from_adjacency(2, {2, 0}), PreconditionError);   // asymmetric
    CHECK_THROWS_AS(Graph::from_adjacency(1, {2}), PreconditionError);      // bit above n
}

TEST_CASE("induced subgraphs reindex increasingly") {
    Graph p5 = path_graph(5);
    CHECK(induced_subgraph(p5, VertexSet(0b00111)) == path_graph(3));
    CHECK(induced_subgraph(p5, p5.vertices()) == p5);
    auto [sub, original] = induced_subgraph_with_map(p5, VertexSet(0b11010));
    CHECK(original == std::vector<int>{1, 3, 4});
    CHECK(sub == Graph(3, {{1, 2}}));
}

TEST_CASE("complement, union and join basics") {
    CHECK(complement(cycle_graph(6)) == antihole(6));
    CHECK(disjoint_union(path_graph(3), path_graph(3)) == family_f(1));
    CHECK(join(Graph(1), Graph(3)) == star_graph(3));

    std::mt19937_64 rng(3);
    for (int round = 0; round < 100; ++round) {
        Graph g = random_graph(rng, static_cast<int>(rng() % 9), 0.5);
        Graph h = random_graph(rng, static_cast<int>(rng() % 9), 0.5);
        CHECK(complement(complement(g)) == g);
        CHECK(join(g, h) == complement(disjoint_union(complement(g), complement(h))));
    }
    CHECK_THROWS_AS(disjoint_union(Graph(40), Graph(30)), PreconditionError);
}

TEST_CASE("distance basics and metric axioms") {
    Graph p4 = path_graph(4);
    CHECK(distance(p4, 0, 3) == 3);
    CHECK(distance(p4, 1, 1) == 0);
    CHECK(!distance(family_f(1), 0, 4).has_value());

    std::mt19937_64 rng(5);
    for (int round = 0; round < 60; ++round) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = random_graph(rng, n, 0.35);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                auto duv = distance(g, u, v);
                CHECK(duv == distance(g, v, u));
                CHECK((duv == std::optional<int>(0)) == (u == v));
                for (int w = 0; w < n && duv; ++w) {
                    auto duw = distance(g, u, w);
                    auto dwv = distance(g, w, v);
                    if (duw && dwv) CHECK(*duv <= *duw + *dwv);
                }
            }
    }
}

TEST_CASE("set distance") {
    Graph p4 = path_graph(4);
    CHECK(set_distance(p4, VertexSet::single(0), VertexSet::single(3)) == 3);
    CHECK(set_distance(p4, VertexSet(0b0011), VertexSet(0b0110)) == 0);
    CHECK_THROWS_AS(set_distance(p4, VertexSet(), VertexSet(0b1)), PreconditionError);
}

TEST_CASE("components, cliques, twins, triangle freeness") {
    Graph f1 = family_f(1);
    auto comps = components(f1);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet(0b000111));
    CHECK(comps[1] == VertexSet(0b111000));
    CHECK(is_clique(f1, VertexSet(0b000011)));
    CHECK(!is_clique(f1, comps[0]));
    CHECK(is_connected(path_graph(4)));
    CHECK(!is_connected(f1));
    CHECK(is_isolate_free(f1));
    CHECK(!is_isolate_free(disjoint_union(Graph(1), path_graph(2))));

    Graph k3 = complete_graph(3);
    CHECK(are_true_twins(k3, 0, 1));
    CHECK(are_true_twins(k3, 1, 2));
    Graph star = star_graph(3);
    CHECK(are_false_twins(star, 1, 2));
    CHECK(!are_true_twins(star, 1, 2));

    CHECK(is_triangle_free(kc_graph(2, 1)));
    CHECK(!is_triangle_free(complete_graph(3)));
    CHECK(is_triangle_free(cycle_graph(4)));
}
