#include <random>

#include "doctest.h"
#include "geokiss/graph.hpp"
#include "geokiss/oracles.hpp"
#include "naive_oracles.hpp"

using namespace geokiss;
using graph::Graph;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (u(rng) < p) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("minimum dominating set") {
    const auto p3 = oracles::min_dominating_set(path(3));
    CHECK(p3.value == 1);
    CHECK(p3.witness == std::vector<int>{1});
    CHECK(oracles::min_dominating_set(Graph(6)).value == 6);
    CHECK(oracles::min_dominating_set(cycle(4)).value == 2);
    CHECK(p3.nodes_explored >= 1);
}

TEST_CASE("minimum independent dominating set") {
    CHECK(oracles::min_independent_dominating_set(complete(3)).value == 1);
    CHECK(oracles::min_independent_dominating_set(path(4)).value == 2);
    const auto s5 = oracles::min_independent_dominating_set(star(5));
    CHECK(s5.value == 1);
    CHECK(s5.witness == std::vector<int>{0});
}

TEST_CASE("minimum connected dominating set") {
    CHECK(oracles::min_connected_dominating_set(star(7)).value == 1);
    const auto p4 = oracles::min_connected_dominating_set(path(4));
    CHECK(p4.value == 2);
    CHECK(p4.witness == std::vector<int>{1, 2});

    // disconnected input: per-component optima summed
    Graph two(5);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    two.add_edge(3, 4);
    CHECK(oracles::min_connected_dominating_set(two).value == 2);
}

TEST_CASE("chromatic number") {
    CHECK(oracles::chromatic_number(Graph(4)).value == 1);
    CHECK(oracles::chromatic_number(cycle(5)).value == 3);
    CHECK(oracles::chromatic_number(complete(4)).value == 4);
    CHECK(oracles::chromatic_number(cycle(6)).value == 2);
    const auto c5 = oracles::chromatic_number(cycle(5));
    CHECK(oracles::is_proper_coloring(cycle(5), c5.coloring));
}

TEST_CASE("witnesses satisfy their own constraints") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 20; ++it) {
        const Graph g = random_graph(5 + int(rng() % 6), 0.35, rng);
        const auto ds = oracles::min_dominating_set(g);
        CHECK(oracles::is_dominating_set(g, ds.witness));
        const auto ids = oracles::min_independent_dominating_set(g);
        CHECK(oracles::is_dominating_set(g, ids.witness));
        CHECK(oracles::is_independent_set(g, ids.witness));
        const auto chi = oracles::chromatic_number(g);
        CHECK(oracles::is_proper_coloring(g, chi.coloring));
        if (graph::is_connected(g) && g.size() > 1) {
            const auto cds = oracles::min_connected_dominating_set(g);
            CHECK(oracles::is_dominating_set(g, cds.witness));
            CHECK(oracles::is_connected_subset(g, cds.witness));
        }
    }
}

TEST_CASE("optimum ordering between the domination variants") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_graph(6 + int(rng() % 5), 0.5, rng);
        const int ds = oracles::min_dominating_set(g).value;
        CHECK(ds <= oracles::min_independent_dominating_set(g).value);
        if (graph::is_connected(g))
            CHECK(ds <= oracles::min_connected_dominating_set(g).value);
    }
}

TEST_CASE("agreement with full enumeration") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 25; ++it) {
        const int n = 4 + int(rng() % 9);  // up to 12
        const Graph g = random_graph(n, 0.15 + 0.08 * (it % 9), rng);
        CHECK(oracles::min_dominating_set(g).value == naive::mds(g));
        CHECK(oracles::min_independent_dominating_set(g).value == naive::mids(g));
        CHECK(oracles::min_connected_dominating_set(g).value == naive::mcds(g));
        CHECK(oracles::chromatic_number(g).value == naive::chromatic(g));
    }
}

TEST_CASE("size caps") {
    CHECK_THROWS_AS(oracles::min_dominating_set(Graph(25)), oracles::OracleError);
    CHECK(oracles::min_dominating_set(Graph(25), 25).value == 25);
    CHECK_THROWS_AS(oracles::chromatic_number(Graph(25)), oracles::OracleError);
    // the subset solvers use 64-bit masks; beyond that is always an error
    CHECK_THROWS_AS(oracles::min_dominating_set(Graph(65), 100), oracles::OracleError);
}

TEST_CASE("empty graph") {
    CHECK(oracles::min_dominating_set(Graph(0)).value == 0);
    CHECK(oracles::chromatic_number(Graph(0)).value == 0);
}
