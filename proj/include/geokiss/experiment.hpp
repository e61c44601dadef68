#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geokiss/graph.hpp"
#include "geokiss/instance.hpp"
#include "geokiss/online.hpp"
#include "geokiss/oracles.hpp"

namespace geokiss::harness {

struct RunOptions {
    int oracle_cap = oracles::default_oracle_cap;
    int mis_cap = graph::default_mis_cap;
    int t = 1;  // relaxation for the t_relaxed algorithm
};

// one bound check; bound_value < 0 means the check could not be evaluated
// (cap exceeded or no bound applies) and pass is vacuous
struct RunRecord {
    std::uint64_t seed = 0;
    std::string family;
    int n = 0;
    std::string algorithm;
    double alg_value = 0.0;
    double opt_value = -1.0;
    int zeta = -1;
    double bound_value = -1.0;
    bool pass = true;
    double wall_ms = 0.0;
};

struct TraceRow {
    int position = 0;
    int vertex = 0;
    std::string outcome;  // decision or color
    int size_so_far = 0;
};

inline constexpr const char* algorithm_tags[] = {"greedy_ds", "greedy_cds", "first_fit", "layer",
                                                 "t_relaxed"};

struct GenSpec {
    std::string family;  // unit_disks | disks | unit_squares | squares
    int n = 1;
    double box = 10.0;
    double width_min = 1.0;
    double width_max = 1.0;
    bool log_uniform = false;
    online::Model model = online::Model::classical;
    std::uint64_t seed = 0;
};

Instance generate_random_instance(const GenSpec& spec);

online::ArrivalSequence lower_to_arrivals(const Instance& inst);

std::vector<RunRecord> run_experiment(const Instance& inst, const std::string& algorithm,
                                      const RunOptions& opts, std::uint64_t seed = 0,
                                      std::vector<TraceRow>* trace = nullptr);

std::string format_csv(const std::vector<RunRecord>& records,
                       const std::vector<std::string>& summary = {});
// recomputes pass from alg_value and bound_value; ignores comment lines
std::vector<RunRecord> parse_csv(const std::string& text);

struct SweepOutcome {
    std::vector<RunRecord> records;
    std::vector<std::string> summary;  // max observed ratio per family/algorithm
    int violations = 0;
};

SweepOutcome sweep(const std::string& config_json);

}  // namespace geokiss::harness
