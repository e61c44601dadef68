#pragma once

#include <stdexcept>
#include <vector>

#include "geokiss/graph.hpp"

namespace geokiss::oracles {

struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int default_oracle_cap = 24;

struct OracleResult {
    int value = 0;
    std::vector<int> witness;   // vertex set, ascending (set problems)
    std::vector<int> coloring;  // colors 1.. per vertex (chromatic_number)
    long long nodes_explored = 0;
};

// all four are exact; they refuse graphs above cap (and above 64 vertices,
// the bitmask width). witnesses are lexicographically smallest.
OracleResult min_dominating_set(const graph::Graph& g, int cap = default_oracle_cap);
OracleResult min_independent_dominating_set(const graph::Graph& g, int cap = default_oracle_cap);
// disconnected input: per-component optimum, summed
OracleResult min_connected_dominating_set(const graph::Graph& g, int cap = default_oracle_cap);
OracleResult chromatic_number(const graph::Graph& g, int cap = default_oracle_cap);

bool is_dominating_set(const graph::Graph& g, const std::vector<int>& ds);
bool is_independent_set(const graph::Graph& g, const std::vector<int>& vs);
bool is_connected_subset(const graph::Graph& g, const std::vector<int>& vs);
bool is_proper_coloring(const graph::Graph& g, const std::vector<int>& coloring);

}  // namespace geokiss::oracles
