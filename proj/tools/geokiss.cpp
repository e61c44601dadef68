#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "geokiss/adversary.hpp"
#include "geokiss/bounds.hpp"
#include "geokiss/experiment.hpp"
#include "geokiss/graph.hpp"
#include "geokiss/instance.hpp"
#include "geokiss/oracles.hpp"

namespace {

using namespace geokiss;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int env_or(int fallback, const char* name) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        throw std::runtime_error(std::string(name) + " is not an integer");
    }
}

adversary::KissingConfig build_config(const std::string& family, int d, int k, double eps,
                                      bool eps_set, double delta) {
    if (family == "unit_disks") return adversary::config_unit_disks(delta);
    if (family == "icosahedron" || family == "congruent_balls")
        return adversary::config_balls_icosahedron(eps_set ? eps : 0.05);
    if (family == "hypercube_translates")
        return adversary::config_hypercube_translates(d,
                                                      eps_set ? eps : 0.25 / std::sqrt(double(d)));
    if (family == "congruent_hypercubes")
        return adversary::config_congruent_hypercubes(d, eps_set ? eps : 0.25);
    if (family == "kgon" || family == "regular_kgon") return adversary::config_regular_kgon(k);
    if (family == "disks_radii_1_2") return adversary::config_disks_radii_1_2();
    throw std::runtime_error("unknown config family '" + family + "'");
}

graph::Graph graph_from(const std::string& graph_path, const std::string& inst_path) {
    if (!graph_path.empty() && !inst_path.empty())
        throw std::runtime_error("give either --graph or --in, not both");
    if (!graph_path.empty()) return graph::parse_adjacency(slurp(graph_path));
    if (!inst_path.empty()) {
        const harness::Instance inst = harness::load_instance(inst_path);
        return graph::build_intersection_graph(inst.shapes);
    }
    throw std::runtime_error("need --graph or --in");
}

harness::Instance instance_of_config(const adversary::KissingConfig& cfg) {
    harness::Instance inst;
    inst.shapes = adversary::config_shapes(cfg);
    inst.dimension = inst.shapes.front().dimension();
    inst.model = online::Model::classical;
    inst.family_meta.family = cfg.family_tag;
    for (int i = 0; i < static_cast<int>(inst.shapes.size()); ++i)
        inst.arrival_order.push_back(i);
    return inst;
}

void emit_instance(const harness::Instance& inst, const std::string& out) {
    if (out.empty())
        std::cout << harness::instance_to_json(inst);
    else
        harness::save_instance(inst, out);
}

std::string join(const std::vector<int>& xs) {
    std::ostringstream s;
    for (size_t i = 0; i < xs.size(); ++i) s << (i ? " " : "") << xs[i];
    return s.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"online dominating set and coloring on geometric intersection graphs"};
    app.require_subcommand(1);
    double tolerance = 0.0;
    auto* tol_opt = app.add_option("--tolerance", tolerance, "contact classification band");

    // gen
    auto* gen = app.add_subcommand("gen", "random instance to file");
    harness::GenSpec spec;
    std::string gen_model = "classical", gen_out;
    gen->add_option("--family", spec.family, "unit_disks|disks|unit_squares|squares")->required();
    gen->add_option("--n", spec.n, "shape count")->required();
    gen->add_option("--box", spec.box, "placement box side");
    gen->add_option("--width-min", spec.width_min, "smallest width");
    gen->add_option("--width-max", spec.width_max, "largest width");
    gen->add_flag("--log-uniform", spec.log_uniform, "log-uniform widths");
    gen->add_option("--model", gen_model, "classical|relaxed_connected");
    gen->add_option("--seed", spec.seed, "rng seed");
    gen->add_option("--out", gen_out, "output file (stdout if absent)");

    // adversary
    auto* adv = app.add_subcommand("adversary", "hard constructions to file");
    std::string adv_kind, adv_family, adv_out;
    int adv_d = 2, adv_k = 0, adv_t = 0;
    double adv_eps = 0.0, adv_delta = 1e-3;
    adv->add_option("construction", adv_kind, "star|wheel|cyclone")->required();
    adv->add_option("--family", adv_family, "shape family of the construction");
    adv->add_option("--d", adv_d, "dimension (translate families)");
    adv->add_option("--k", adv_k, "k-gon sides, or wheel rim / cyclone size");
    adv->add_option("--t", adv_t, "cyclone turn point");
    auto* adv_eps_opt = adv->add_option("--epsilon,--eps", adv_eps, "separation slack");
    adv->add_option("--delta", adv_delta, "shrink slack");
    adv->add_option("--out", adv_out, "output file (stdout if absent)");

    // run
    auto* run = app.add_subcommand("run", "one instance through one algorithm");
    std::string run_in, run_alg, run_trace, run_out;
    harness::RunOptions run_opts;
    std::uint64_t run_seed = 0;
    run->add_option("--in", run_in, "instance file")->required();
    run->add_option("--algorithm", run_alg, "greedy_ds|greedy_cds|first_fit|layer|t_relaxed")
        ->required();
    run->add_option("--t", run_opts.t, "relaxation for t_relaxed");
    auto* run_cap = run->add_option("--oracle-cap", run_opts.oracle_cap, "oracle size cap");
    run->add_option("--mis-cap", run_opts.mis_cap, "independent-set solver cap");
    run->add_option("--seed", run_seed, "seed column value");
    run->add_option("--trace", run_trace, "write per-arrival trace CSV here");
    run->add_option("--out", run_out, "report file (stdout if absent)");

    // oracle
    auto* orc = app.add_subcommand("oracle", "exact optimum of a graph or instance");
    std::string orc_problem, orc_graph, orc_in;
    int orc_cap = oracles::default_oracle_cap;
    orc->add_option("--problem", orc_problem, "mds|mids|mcds|chromatic")->required();
    orc->add_option("--graph", orc_graph, "adjacency list file");
    orc->add_option("--in", orc_in, "instance file");
    auto* orc_cap_opt = orc->add_option("--cap", orc_cap, "size cap");

    // zeta
    auto* zet = app.add_subcommand("zeta", "independent kissing number of a graph or instance");
    std::string zet_graph, zet_in;
    int zet_cap = graph::default_mis_cap;
    zet->add_option("--graph", zet_graph, "adjacency list file");
    zet->add_option("--in", zet_in, "instance file");
    zet->add_option("--cap", zet_cap, "independent-set solver cap");

    // verify-config
    auto* ver = app.add_subcommand("verify-config", "check a kissing configuration");
    std::string ver_family;
    int ver_d = 2, ver_k = 5;
    double ver_eps = 0.0, ver_delta = 1e-3;
    bool ver_standard = false, ver_zeta = false;
    ver->add_option("--family", ver_family,
                    "unit_disks|icosahedron|hypercube_translates|congruent_hypercubes|kgon|"
                    "disks_radii_1_2")
        ->required();
    ver->add_option("--d", ver_d, "dimension");
    ver->add_option("--k", ver_k, "k-gon sides");
    auto* ver_eps_opt = ver->add_option("--epsilon,--eps", ver_eps, "separation slack");
    ver->add_option("--delta", ver_delta, "shrink slack");
    ver->add_flag("--standard", ver_standard, "standardize first, then require touching");
    ver->add_flag("--zeta", ver_zeta, "also compute the graph's kissing number");

    // sweep
    auto* swp = app.add_subcommand("sweep", "config-driven batch; nonzero exit on violations");
    std::string swp_config, swp_out;
    swp->add_option("--config", swp_config, "JSON config file")->required();
    swp->add_option("--out", swp_out, "report file (stdout if absent)");

    // table
    auto* tab = app.add_subcommand("table", "competitive-ratio formula table");
    int tab_d = 2;
    double tab_alpha = 1.0, tab_m = 1.0;
    tab->add_option("--d", tab_d, "dimension");
    tab->add_option("--alpha", tab_alpha, "fatness");
    tab->add_option("--m", tab_m, "width ratio");

    CLI11_PARSE(app, argc, argv);

    try {
        if (tol_opt->count()) geom::set_default_tolerance(tolerance);

        if (gen->parsed()) {
            spec.model = online::parse_model(gen_model);
            emit_instance(harness::generate_random_instance(spec), gen_out);
        } else if (adv->parsed()) {
            if (adv_kind == "star") {
                const auto cfg =
                    build_config(adv_family, adv_d, adv_k ? adv_k : 5, adv_eps,
                                 adv_eps_opt->count() > 0, adv_delta);
                emit_instance(instance_of_config(cfg), adv_out);
            } else if (adv_kind == "wheel") {
                adversary::WheelFamily fam;
                if (adv_family == "unit_disks") fam = adversary::WheelFamily::unit_disks;
                else if (adv_family == "unit_squares") fam = adversary::WheelFamily::unit_squares;
                else if (adv_family == "kgon" || adv_family == "regular_kgon")
                    fam = adversary::WheelFamily::regular_kgon;
                else
                    throw std::runtime_error("wheel family must be unit_disks, unit_squares or kgon");
                const auto wheel = adversary::wheel_from_translates(fam, adv_delta, adv_k);
                harness::Instance inst;
                inst.dimension = 2;
                inst.model = online::Model::relaxed_connected;
                inst.family_meta.family = adv_family;
                inst.shapes = wheel.shapes;
                inst.arrival_order = wheel.order.sequence;
                emit_instance(inst, adv_out);
            } else if (adv_kind == "cyclone") {
                const auto order = adversary::cyclone_sequence(adv_k, adv_t);
                const std::string text = join(order.sequence) + "\n";
                if (adv_out.empty())
                    std::cout << text;
                else
                    spill(adv_out, text);
            } else {
                throw std::runtime_error("construction must be star, wheel or cyclone");
            }
        } else if (run->parsed()) {
            if (!run_cap->count())
                run_opts.oracle_cap = env_or(run_opts.oracle_cap, "GEOKISS_ORACLE_CAP");
            const harness::Instance inst = harness::load_instance(run_in);
            std::vector<harness::TraceRow> trace;
            auto rows = harness::run_experiment(inst, run_alg, run_opts, run_seed,
                                                run_trace.empty() ? nullptr : &trace);
            if (!run_trace.empty()) {
                std::ostringstream t;
                t << "position,vertex,outcome,size_so_far\n";
                for (const auto& row : trace)
                    t << row.position << ',' << row.vertex << ',' << row.outcome << ','
                      << row.size_so_far << '\n';
                spill(run_trace, t.str());
            }
            const std::string csv = harness::format_csv(rows);
            if (run_out.empty())
                std::cout << csv;
            else
                spill(run_out, csv);
        } else if (orc->parsed()) {
            if (!orc_cap_opt->count()) orc_cap = env_or(orc_cap, "GEOKISS_ORACLE_CAP");
            const graph::Graph g = graph_from(orc_graph, orc_in);
            oracles::OracleResult res;
            if (orc_problem == "mds") res = oracles::min_dominating_set(g, orc_cap);
            else if (orc_problem == "mids")
                res = oracles::min_independent_dominating_set(g, orc_cap);
            else if (orc_problem == "mcds")
                res = oracles::min_connected_dominating_set(g, orc_cap);
            else if (orc_problem == "chromatic")
                res = oracles::chromatic_number(g, orc_cap);
            else
                throw std::runtime_error("problem must be mds, mids, mcds or chromatic");
            std::cout << "value " << res.value << "\n";
            if (orc_problem == "chromatic") {
                std::cout << "coloring";
                for (size_t v = 0; v < res.coloring.size(); ++v)
                    std::cout << ' ' << v << '=' << res.coloring[v];
                std::cout << "\n";
            } else {
                std::cout << "witness " << join(res.witness) << "\n";
            }
            std::cout << "nodes_explored " << res.nodes_explored << "\n";
        } else if (zet->parsed()) {
            const graph::Graph g = graph_from(zet_graph, zet_in);
            const auto rep = graph::independent_kissing_number(g, zet_cap);
            std::cout << "zeta " << rep.zeta << "\n";
            if (rep.witness_vertex >= 0) {
                std::cout << "witness_vertex " << rep.witness_vertex << "\n";
                std::cout << "witness " << join(rep.witness_independent_set) << "\n";
            }
        } else if (ver->parsed()) {
            auto cfg = build_config(ver_family, ver_d, ver_k, ver_eps, ver_eps_opt->count() > 0,
                                    ver_delta);
            if (ver_standard) cfg = adversary::standardize(cfg);
            const auto verdict = adversary::verify_config(cfg, ver_standard);
            std::cout << (verdict.valid ? "valid" : "invalid") << "\n";
            if (!verdict.valid) std::cout << "reason: " << verdict.reason << "\n";
            std::cout << "claimed_zeta " << cfg.claimed_zeta << "\n";
            bool zeta_ok = true;
            if (ver_zeta) {
                const auto g = graph::build_intersection_graph(adversary::config_shapes(cfg));
                const auto rep = graph::independent_kissing_number(g, 64);
                std::cout << "graph_zeta " << rep.zeta << "\n";
                zeta_ok = rep.zeta == cfg.claimed_zeta;
            }
            return verdict.valid && zeta_ok ? 0 : 1;
        } else if (swp->parsed()) {
            const auto outcome = harness::sweep(slurp(swp_config));
            const std::string csv = harness::format_csv(outcome.records, outcome.summary);
            if (swp_out.empty())
                std::cout << csv;
            else
                spill(swp_out, csv);
            for (const auto& line : outcome.summary) std::cerr << line << "\n";
            return outcome.violations ? 1 : 0;
        } else if (tab->parsed()) {
            std::cout << "family,mds_mids,mc,mcds,t_relaxed\n";
            for (const auto& row : bounds::table_rows(tab_d, tab_alpha, tab_m)) {
                std::ostringstream line;
                line.precision(10);
                line << row.family << ',' << row.mds_mids << ',' << row.mc << ',' << row.mcds
                     << ',' << row.t_relaxed;
                std::cout << line.str() << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
