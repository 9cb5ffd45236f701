#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "domgame/catalog.hpp"
#include "domgame/enumeration.hpp"
#include "domgame/graph6.hpp"
#include "test_support.hpp"

using namespace domgame;
namespace dt = domgame::testing;

TEST_CASE("builtin enumeration matches the classical counts") {
    for (int n = 1; n <= 7; ++n)
        CHECK(static_cast<long>(enumerate_nonisomorphic(n).size()) == classical_graph_count(n));
    CHECK_THROWS_AS(enumerate_nonisomorphic(8), PreconditionError);
    CHECK_THROWS_AS(enumerate_nonisomorphic(0), PreconditionError);
}

TEST_CASE("enumeration agrees with pairwise-isomorphism partitioning") {
    // Split all labeled graphs on n vertices into classes with the n!
    // permutation check; class count and representatives must match.
    for (int n = 1; n <= 5; ++n) {
        std::vector<Graph> classes;
        const std::uint64_t cells = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t code = 0; code < cells; ++code) {
            std::vector<Edge> edges;
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if ((code >> bit) & 1) edges.emplace_back(u, v);
            Graph g(n, edges);
            bool known = false;
            for (const Graph& rep : classes)
                if (dt::permutation_isomorphic(g, rep)) {
                    known = true;
                    break;
                }
            if (!known) classes.push_back(g);
        }
        std::vector<Graph> stream = enumerate_nonisomorphic(n);
        REQUIRE(stream.size() == classes.size());
        for (const Graph& g : stream) {
            bool found = false;
            for (const Graph& rep : classes)
                if (dt::permutation_isomorphic(g, rep)) {
                    found = true;
                    break;
                }
            CHECK(found);
        }
    }
}

TEST_CASE("enumeration emits canonical graphs exactly once") {
    std::vector<Graph> stream = enumerate_nonisomorphic(6);
    for (std::size_t i = 0; i < stream.size(); ++i) {
        CHECK(canonical_graph(stream[i]) == stream[i]);
        CHECK(parse_graph6(write_graph6(stream[i])) == stream[i]);
        if (i > 0) CHECK(canonical_form(stream[i - 1]) < canonical_form(stream[i]));
    }
}

TEST_CASE("isomorphism checks") {
    CHECK(are_isomorphic(cycle_graph(5), complement(cycle_graph(5))));
    CHECK(!are_isomorphic(path_graph(5), cycle_graph(5)));
    CHECK(are_isomorphic(Graph(0), Graph(0)));

    std::mt19937_64 rng(17);
    for (int round = 0; round < 100; ++round) {
        Graph g = dt::random_graph(rng, static_cast<int>(rng() % 8), 0.5);
        CHECK(are_isomorphic(g, dt::randomly_permuted(rng, g)));
    }
    // Cross-check the canonical machinery against raw permutation search.
    for (int round = 0; round < 60; ++round) {
        Graph g = dt::random_graph(rng, 5, 0.5);
        Graph h = dt::random_graph(rng, 5, 0.5);
        CHECK(are_isomorphic(g, h) == dt::permutation_isomorphic(g, h));
    }
}

TEST_CASE("canonical form is relabeling invariant") {
    std::mt19937_64 rng(19);
    for (int round = 0; round < 120; ++round) {
        Graph g = dt::random_graph(rng, 1 + static_cast<int>(rng() % 9), 0.45);
        CHECK(canonical_form(g) == canonical_form(dt::randomly_permuted(rng, g)));
        Graph c = canonical_graph(g);
        CHECK(canonical_graph(c) == c);
    }
}

TEST_CASE("table1 on builtin streams") {
    CHECK(table1(GraphSource::builtin(1)) == CountsRow{1, 1, 1, 0});
    CHECK(table1(GraphSource::builtin(3)) == CountsRow{3, 4, 2, 0});
    CHECK(table1(GraphSource::builtin(5)) == CountsRow{5, 32, 19, 2});
    CHECK(table1(GraphSource::builtin(5), 4) == CountsRow{5, 32, 19, 2});
}

TEST_CASE("minimally imperfect graphs on five vertices") {
    std::vector<Graph> found = find_min_imperfect(GraphSource::builtin(5));
    REQUIRE(found.size() == 2);
    bool p5_found = are_isomorphic(found[0], path_graph(5)) || are_isomorphic(found[1], path_graph(5));
    bool c5_found = are_isomorphic(found[0], cycle_graph(5)) || are_isomorphic(found[1], cycle_graph(5));
    CHECK(p5_found);
    CHECK(c5_found);
    CHECK(find_min_imperfect(GraphSource::builtin(4)).empty());
}

TEST_CASE("graph6 file sources") {
    std::string path = "test_enumeration_tmp.g6";
    {
        std::ofstream out(path);
        out << ">>graph6<<\n";
        for (const Graph& g : enumerate_nonisomorphic(4)) out << write_graph6(g) << "\n";
        out << "\n";
    }
    std::vector<Graph> loaded = load_graphs(GraphSource::file(path));
    CHECK(loaded.size() == 11);
    CHECK(table1(GraphSource::file(path)) == CountsRow{4, 11, 6, 0});
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_graphs(GraphSource::file("does_not_exist.g6")), Error);
    {
        std::ofstream out(path);
        out << "@\nnot graph6 at all!!\n";
    }
    try {
        load_graphs(GraphSource::file(path));
        FAIL("expected parse failure");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find(":2:") != std::string::npos);
    }
    std::remove(path.c_str());
}

TEST_CASE("reference counts embed the published table") {
    CHECK(reference_counts(3) == CountsRow{3, 4, 2, 0});
    CHECK(reference_counts(7) == CountsRow{7, 536, 386, 1});
    CHECK(reference_counts(9) == CountsRow{9, 15752, 12476, 1});
    CHECK(!reference_counts(2).has_value());
    CHECK(!reference_counts(10).has_value());
}
