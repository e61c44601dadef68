#include "geokiss/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

#include "geokiss/adversary.hpp"
#include "geokiss/bounds.hpp"

namespace geokiss::harness {

using nlohmann::json;

namespace {

bool known_algorithm(const std::string& tag) {
    for (const char* t : algorithm_tags)
        if (tag == t) return true;
    return false;
}

double width_of(const geom::Shape& s) {
    return geom::fat_meta(s).width;  // throws UnsupportedPair where undefined
}

}  // namespace

Instance generate_random_instance(const GenSpec& spec) {
    if (spec.n < 1) throw HarnessError("instance needs at least one shape");
    if (!(spec.box > 0.0)) throw HarnessError("box size must be positive");
    if (!(spec.width_min >= 1.0) || !(spec.width_max >= spec.width_min))
        throw HarnessError("width range must satisfy 1 <= min <= max");
    const bool disks = spec.family == "unit_disks" || spec.family == "disks";
    const bool squares = spec.family == "unit_squares" || spec.family == "squares";
    if (!disks && !squares) throw HarnessError("unknown family '" + spec.family + "'");
    const bool unit = spec.family.rfind("unit_", 0) == 0;
    if (unit && spec.width_max != spec.width_min)
        throw HarnessError("unit families take a single width");

    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> coord(0.0, spec.box);
    std::uniform_real_distribution<double> wuni(spec.width_min, spec.width_max);
    std::uniform_real_distribution<double> wlog(std::log(spec.width_min),
                                                std::log(spec.width_max));
    auto draw_width = [&]() {
        if (unit) return 1.0;
        return spec.log_uniform ? std::exp(wlog(rng)) : wuni(rng);
    };

    Instance inst;
    inst.dimension = 2;
    inst.model = spec.model;
    inst.family_meta.family = spec.family;
    inst.family_meta.m = unit ? 1.0 : spec.width_max;
    inst.family_meta.alpha = disks ? 1.0 : 1.0 / std::sqrt(2.0);

    const int budget = spec.model == online::Model::relaxed_connected ? 200 : 1;
    for (int attempt = 0; attempt < budget; ++attempt) {
        std::vector<geom::Shape> shapes;
        for (int i = 0; i < spec.n; ++i) {
            const geom::Point c{coord(rng), coord(rng)};
            const double w = draw_width();
            if (disks)
                shapes.push_back(geom::Ball{c, w});
            else
                shapes.push_back(geom::AxisHypercube{c, 2.0 * w});
        }
        const graph::Graph g = graph::build_intersection_graph(shapes);
        if (spec.model == online::Model::relaxed_connected && !graph::is_connected(g)) continue;

        inst.shapes = std::move(shapes);
        inst.arrival_order.clear();
        if (spec.model == online::Model::classical) {
            for (int i = 0; i < spec.n; ++i) inst.arrival_order.push_back(i);
        } else {
            std::vector<char> vis(spec.n, 0);
            std::vector<int> queue{0};
            vis[0] = 1;
            for (size_t head = 0; head < queue.size(); ++head) {
                const int v = queue[head];
                inst.arrival_order.push_back(v);
                for (int u : g.neighbors(v))
                    if (!vis[u]) {
                        vis[u] = 1;
                        queue.push_back(u);
                    }
            }
        }
        validate_instance(inst);
        return inst;
    }
    throw HarnessError("no connected placement found within " + std::to_string(budget) +
                       " attempts (family " + spec.family + ", n " + std::to_string(spec.n) +
                       ", box " + std::to_string(spec.box) + ", seed " +
                       std::to_string(spec.seed) + ")");
}

online::ArrivalSequence lower_to_arrivals(const Instance& inst) {
    validate_instance(inst);
    const graph::Graph g = graph::build_intersection_graph(inst.shapes);
    online::ArrivalSequence seq;
    std::set<int> arrived;
    for (int v : inst.arrival_order) {
        online::Arrival a;
        a.vertex = v;
        for (int u : g.neighbors(v))
            if (arrived.count(u)) a.neighbors_among_previous.push_back(u);
        try {
            a.width = width_of(inst.shapes[v]);
        } catch (const geom::UnsupportedPair&) {
        }
        arrived.insert(v);
        seq.push_back(std::move(a));
    }
    return seq;
}

namespace {

struct OracleCache {
    const graph::Graph& g;
    const RunOptions& opts;
    std::map<std::string, int> values;

    int get(const std::string& problem) {
        auto it = values.find(problem);
        if (it != values.end()) return it->second;
        int v = -1;
        try {
            if (problem == "mds") v = oracles::min_dominating_set(g, opts.oracle_cap).value;
            else if (problem == "mids")
                v = oracles::min_independent_dominating_set(g, opts.oracle_cap).value;
            else if (problem == "mcds")
                v = oracles::min_connected_dominating_set(g, opts.oracle_cap).value;
            else if (problem == "chromatic")
                v = oracles::chromatic_number(g, opts.oracle_cap).value;
        } catch (const oracles::OracleError&) {
            v = -1;  // cap exceeded; bounds stay unchecked
        }
        values[problem] = v;
        return v;
    }
};

RunRecord make_record(std::uint64_t seed, const Instance& inst, const std::string& algorithm,
                      double alg_value, double opt_value, int zeta, double bound_value) {
    RunRecord r;
    r.seed = seed;
    r.family = inst.family_meta.family;
    r.n = static_cast<int>(inst.shapes.size());
    r.algorithm = algorithm;
    r.alg_value = alg_value;
    r.opt_value = opt_value;
    r.zeta = zeta;
    r.bound_value = bound_value;
    r.pass = bound_value < 0.0 || alg_value <= bound_value + 1e-9;
    return r;
}

}  // namespace

std::vector<RunRecord> run_experiment(const Instance& inst, const std::string& algorithm,
                                      const RunOptions& opts, std::uint64_t seed,
                                      std::vector<TraceRow>* trace) {
    if (!known_algorithm(algorithm)) throw HarnessError("unknown algorithm '" + algorithm + "'");
    if (algorithm == "greedy_cds" && inst.model != online::Model::relaxed_connected)
        throw HarnessError("greedy_cds needs a relaxed_connected instance");

    const auto t0 = std::chrono::steady_clock::now();
    const online::ArrivalSequence arrivals = lower_to_arrivals(inst);
    const graph::Graph g = graph::build_intersection_graph(inst.shapes);

    auto note = [&](int pos, int vertex, std::string outcome, int size) {
        if (trace) trace->push_back({pos, vertex, std::move(outcome), size});
    };

    double alg_value = 0.0;
    if (algorithm == "greedy_ds") {
        online::GreedyDs alg;
        int pos = 0;
        for (const auto& a : arrivals) {
            const auto d = alg.step(a);
            note(pos++, a.vertex, d == online::DsDecision::accepted ? "accepted" : "rejected",
                 alg.size());
        }
        alg_value = alg.size();
    } else if (algorithm == "greedy_cds") {
        online::GreedyCds alg;
        int pos = 0;
        for (const auto& a : arrivals) {
            const auto d = alg.step(a);
            std::string outcome = d.action == online::CdsAction::no_change ? "no_change"
                                  : d.action == online::CdsAction::added_self
                                      ? "added_self"
                                      : "added_self_and_neighbor:" + std::to_string(d.neighbor);
            note(pos++, a.vertex, std::move(outcome), alg.size());
        }
        alg_value = alg.size();
    } else if (algorithm == "first_fit") {
        online::FirstFit alg;
        int pos = 0;
        for (const auto& a : arrivals) {
            const int c = alg.step(a);
            note(pos++, a.vertex, std::to_string(c), alg.colors_used());
        }
        alg_value = alg.colors_used();
    } else if (algorithm == "layer") {
        online::LayerColoring alg;
        int pos = 0;
        for (const auto& a : arrivals) {
            const int c = alg.step(a);
            note(pos++, a.vertex, std::to_string(c), alg.colors_used());
        }
        alg_value = alg.colors_used();
    } else {
        online::RelaxedFirstFit alg(opts.t);
        int pos = 0;
        for (const auto& a : arrivals) {
            const int c = alg.step(a);
            note(pos++, a.vertex, std::to_string(c), alg.colors_used());
        }
        alg_value = alg.colors_used();
    }

    int zeta = -1;
    try {
        zeta = graph::independent_kissing_number(g, opts.mis_cap).zeta;
    } catch (const graph::GraphError&) {
    }

    OracleCache oracle{g, opts, {}};
    const FamilyMeta& fam = inst.family_meta;
    std::vector<RunRecord> rows;

    if (algorithm == "greedy_ds") {
        const int mds = oracle.get("mds");
        const int mids = oracle.get("mids");
        rows.push_back(make_record(seed, inst, "greedy_ds", alg_value, mds, zeta,
                                   zeta >= 0 && mds >= 0 ? bounds::greedy_ds_bound(zeta, mds)
                                                         : -1.0));
        rows.push_back(make_record(seed, inst, "greedy_ds_mids", alg_value, mids, zeta,
                                   zeta >= 0 && mids >= 0 ? bounds::greedy_ds_bound(zeta, mids)
                                                          : -1.0));
    } else if (algorithm == "greedy_cds") {
        const int mcds = oracle.get("mcds");
        const bool ok = zeta >= 0 && mcds >= 0;
        rows.push_back(make_record(seed, inst, "greedy_cds_abs", alg_value, mcds, zeta,
                                   ok ? bounds::greedy_cds_abs_bound(zeta, mcds) : -1.0));
        rows.push_back(make_record(seed, inst, "greedy_cds_asym", alg_value, mcds, zeta,
                                   ok ? bounds::greedy_cds_asym_bound(zeta, mcds) : -1.0));
        if (fam.family == "unit_disks")
            rows.push_back(make_record(seed, inst, "greedy_cds_dudu", alg_value, mcds, zeta,
                                       mcds >= 0 ? bounds::greedy_cds_unit_disk_bound(mcds)
                                                 : -1.0));
        double mis_size = -1.0;
        try {
            mis_size = static_cast<double>(graph::max_independent_set(g, opts.mis_cap).size());
        } catch (const graph::GraphError&) {
        }
        rows.push_back(make_record(seed, inst, "lemma_independent_set", mis_size, mcds, zeta,
                                   ok && mis_size >= 0
                                       ? bounds::independent_set_bound(zeta, mcds)
                                       : -1.0));
    } else if (algorithm == "first_fit") {
        const int chi = oracle.get("chromatic");
        rows.push_back(make_record(seed, inst, "first_fit", alg_value, chi, zeta,
                                   zeta >= 0 && chi >= 0 ? bounds::first_fit_bound(zeta, chi)
                                                         : -1.0));
    } else if (algorithm == "layer") {
        const int chi = oracle.get("chromatic");
        const double zp = bounds::zeta_prime_for(fam, inst.dimension);
        rows.push_back(make_record(seed, inst, "layer", alg_value, chi, zeta,
                                   chi >= 0 && fam.m >= 1.0
                                       ? bounds::layer_bound(zp, fam.m, chi)
                                       : -1.0));
        // widest cross-layer intersection count against the structural cap
        int worst = 0;
        for (int v = 0; v < g.size(); ++v) {
            const int lv = std::ilogb(width_of(inst.shapes[v]));
            int cnt = 0;
            for (int u : g.neighbors(v))
                if (std::ilogb(width_of(inst.shapes[u])) >= lv) ++cnt;
            worst = std::max(worst, cnt);
        }
        rows.push_back(make_record(seed, inst, "cross_layer", worst, chi, zeta,
                                   chi >= 0 ? bounds::cross_layer_bound(zp, chi) : -1.0));
    } else {
        rows.push_back(make_record(seed, inst, "t_relaxed", alg_value, -1.0, zeta, -1.0));
    }

    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    for (auto& r : rows) r.wall_ms = ms;
    return rows;
}

namespace {

std::string fmt_double(double v) {
    if (v == static_cast<long long>(v) && std::abs(v) < 1e15)
        return std::to_string(static_cast<long long>(v));
    std::ostringstream out;
    out.precision(10);
    out << v;
    return out.str();
}

}  // namespace

std::string format_csv(const std::vector<RunRecord>& records,
                       const std::vector<std::string>& summary) {
    std::ostringstream out;
    out << "seed,family,n,algorithm,alg_value,opt_value,zeta,bound_value,pass,wall_ms\n";
    for (const auto& r : records) {
        out << r.seed << ',' << r.family << ',' << r.n << ',' << r.algorithm << ','
            << fmt_double(r.alg_value) << ',' << fmt_double(r.opt_value) << ',' << r.zeta << ','
            << fmt_double(r.bound_value) << ',' << (r.pass ? 1 : 0) << ','
            << fmt_double(r.wall_ms) << '\n';
    }
    for (const auto& line : summary) out << "# " << line << '\n';
    return out.str();
}

std::vector<RunRecord> parse_csv(const std::string& text) {
    std::vector<RunRecord> records;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (first) {
            first = false;
            if (line.rfind("seed,", 0) == 0) continue;
        }
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        if (fields.size() != 10)
            throw HarnessError("report line " + std::to_string(lineno) + ": expected 10 fields");
        try {
            RunRecord r;
            r.seed = std::stoull(fields[0]);
            r.family = fields[1];
            r.n = std::stoi(fields[2]);
            r.algorithm = fields[3];
            r.alg_value = std::stod(fields[4]);
            r.opt_value = std::stod(fields[5]);
            r.zeta = std::stoi(fields[6]);
            r.bound_value = std::stod(fields[7]);
            r.wall_ms = std::stod(fields[9]);
            r.pass = r.bound_value < 0.0 || r.alg_value <= r.bound_value + 1e-9;
            records.push_back(std::move(r));
        } catch (const std::exception&) {
            throw HarnessError("report line " + std::to_string(lineno) + ": parse error");
        }
    }
    return records;
}

SweepOutcome sweep(const std::string& config_json) {
    json cfg;
    try {
        cfg = json::parse(config_json);
    } catch (const json::exception& e) {
        throw HarnessError(std::string("sweep config parse error: ") + e.what());
    }
    RunOptions opts;
    opts.oracle_cap = cfg.value("oracle_cap", oracles::default_oracle_cap);
    opts.mis_cap = cfg.value("mis_cap", graph::default_mis_cap);
    if (const char* env = std::getenv("GEOKISS_ORACLE_CAP")) {
        try {
            opts.oracle_cap = std::stoi(env);
        } catch (const std::exception&) {
            throw HarnessError("GEOKISS_ORACLE_CAP is not an integer");
        }
    }

    SweepOutcome outcome;
    if (!cfg.contains("trials") || !cfg.at("trials").is_array())
        throw HarnessError("sweep config needs a 'trials' array");
    for (const auto& trial : cfg.at("trials")) {
        GenSpec spec;
        spec.family = trial.at("family").get<std::string>();
        const int count = trial.at("count").get<int>();
        const int n_min = trial.at("n_min").get<int>();
        const int n_max = trial.at("n_max").get<int>();
        spec.box = trial.value("box", 10.0);
        spec.width_min = trial.value("width_min", 1.0);
        spec.width_max = trial.value("width_max", 1.0);
        spec.log_uniform = trial.value("log_uniform", false);
        spec.model = online::parse_model(trial.value("model", std::string("relaxed_connected")));
        const std::uint64_t seed0 = trial.value("seed", 1);
        std::vector<std::string> algorithms =
            trial.value("algorithms", std::vector<std::string>{"greedy_ds", "first_fit"});
        for (const auto& alg : algorithms) {
            if (!known_algorithm(alg)) throw HarnessError("unknown algorithm '" + alg + "'");
            if (alg == "t_relaxed")
                throw HarnessError("t_relaxed has no oracle-checked bound; run it directly");
        }
        if (count < 0 || n_min < 1 || n_max < n_min)
            throw HarnessError("bad trial block (count/n_min/n_max)");
        for (int i = 0; i < count; ++i) {
            spec.seed = seed0 + static_cast<std::uint64_t>(i);
            spec.n = n_min + (n_max > n_min ? static_cast<int>(spec.seed % (n_max - n_min + 1))
                                            : 0);
            const Instance inst = generate_random_instance(spec);
            for (const auto& alg : algorithms) {
                auto rows = run_experiment(inst, alg, opts, spec.seed);
                outcome.records.insert(outcome.records.end(), rows.begin(), rows.end());
            }
        }
    }

    std::stable_sort(outcome.records.begin(), outcome.records.end(),
                     [](const RunRecord& a, const RunRecord& b) { return a.seed < b.seed; });

    std::map<std::pair<std::string, std::string>, double> max_ratio;
    for (const auto& r : outcome.records) {
        if (!r.pass) ++outcome.violations;
        if (r.opt_value > 0.0)
            max_ratio[{r.family, r.algorithm}] =
                std::max(max_ratio[{r.family, r.algorithm}], r.alg_value / r.opt_value);
    }
    for (const auto& [key, ratio] : max_ratio) {
        std::ostringstream line;
        line << "max_ratio " << key.first << ' ' << key.second << ' ' << fmt_double(ratio);
        outcome.summary.push_back(line.str());
    }
    outcome.summary.push_back("violations " + std::to_string(outcome.violations));
    return outcome;
}

}  // namespace geokiss::harness
