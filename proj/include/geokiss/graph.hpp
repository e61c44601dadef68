#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "geokiss/geometry.hpp"

namespace geokiss::graph {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// simple undirected graph; no self loops, adjacency kept symmetric
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int size() const { return n_; }
    int edge_count() const { return edges_; }
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;  // ascending
    int degree(int v) const;

private:
    void check(int v) const;

    int n_ = 0;
    int edges_ = 0;
    std::vector<char> adj_;
    std::vector<std::vector<int>> nbrs_;
};

Graph build_intersection_graph(const std::vector<geom::Shape>& shapes);
Graph build_intersection_graph(const std::vector<geom::Shape>& shapes, double tol);

inline constexpr int default_mis_cap = 40;

// exact maximum independent set; lexicographically smallest witness.
// refuses graphs larger than cap.
std::vector<int> max_independent_set(const Graph& g, int cap = default_mis_cap);

struct KissingReport {
    int zeta = 0;
    int witness_vertex = -1;
    std::vector<int> witness_independent_set;
};

// max over v of the independence number of G[N(v)]; cap limits neighborhood size
KissingReport independent_kissing_number(const Graph& g, int cap = default_mis_cap);

// vs must be distinct in-range vertices; result vertex i maps to vs[i]
Graph induced_subgraph(const Graph& g, const std::vector<int>& vs);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);

// text form: one line per vertex, "id: neighbor ids"
Graph parse_adjacency(const std::string& text);
std::string format_adjacency(const Graph& g);

}  // namespace geokiss::graph
