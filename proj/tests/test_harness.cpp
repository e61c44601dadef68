#include <cmath>

#include "doctest.h"
#include "geokiss/adversary.hpp"
#include "geokiss/bounds.hpp"
#include "geokiss/experiment.hpp"
#include "geokiss/instance.hpp"

using namespace geokiss;
using harness::GenSpec;
using harness::Instance;

namespace {

Instance star_instance() {
    const auto cfg = adversary::config_unit_disks();
    Instance inst;
    inst.shapes = adversary::config_shapes(cfg);
    inst.family_meta.family = "unit_disks";
    inst.family_meta.m = 1.0;
    for (int i = 0; i < 6; ++i) inst.arrival_order.push_back(i);
    return inst;
}

GenSpec disk_spec(std::uint64_t seed, int n = 10) {
    GenSpec spec;
    spec.family = "unit_disks";
    spec.n = n;
    spec.box = 6.0;
    spec.seed = seed;
    return spec;
}

}  // namespace

TEST_CASE("instance json round trip") {
    const Instance inst = harness::generate_random_instance(disk_spec(3));
    const std::string text = harness::instance_to_json(inst);
    const Instance back = harness::instance_from_json(text);
    CHECK(back.shapes.size() == inst.shapes.size());
    CHECK(back.arrival_order == inst.arrival_order);
    CHECK(back.model == inst.model);
    CHECK(back.family_meta.family == inst.family_meta.family);
    CHECK(back.family_meta.m == doctest::Approx(inst.family_meta.m));
    for (size_t i = 0; i < inst.shapes.size(); ++i) {
        CHECK(back.shapes[i].kind_name() == inst.shapes[i].kind_name());
        CHECK(back.shapes[i].center()[0] == doctest::Approx(inst.shapes[i].center()[0]));
    }
    CHECK(harness::instance_to_json(back) == text);
}

TEST_CASE("instance validation rejects bad input") {
    Instance inst = star_instance();
    harness::validate_instance(inst);

    Instance dup = inst;
    dup.arrival_order[0] = 1;  // not a permutation
    CHECK_THROWS_AS(harness::validate_instance(dup), harness::HarnessError);

    Instance range = inst;
    range.arrival_order.back() = 9;
    CHECK_THROWS_AS(harness::validate_instance(range), harness::HarnessError);

    Instance thin = inst;
    thin.shapes[0] = geom::Ball{{0.0, 0.0}, 0.5};  // width below the [1, m] band
    CHECK_THROWS_AS(harness::validate_instance(thin), harness::HarnessError);

    Instance mixed = inst;
    mixed.shapes[0] = geom::Ball{{0.0, 0.0, 0.0}, 1.0};
    CHECK_THROWS_AS(harness::validate_instance(mixed), harness::HarnessError);

    // relaxed model demands connected prefixes
    Instance split;
    split.model = online::Model::relaxed_connected;
    split.shapes = {geom::Ball{{0.0, 0.0}, 1.0}, geom::Ball{{10.0, 0.0}, 1.0}};
    split.arrival_order = {0, 1};
    CHECK_THROWS_AS(harness::validate_instance(split), harness::HarnessError);
}

TEST_CASE("generation is deterministic per seed") {
    const Instance a = harness::generate_random_instance(disk_spec(7));
    const Instance b = harness::generate_random_instance(disk_spec(7));
    CHECK(harness::instance_to_json(a) == harness::instance_to_json(b));
    const Instance c = harness::generate_random_instance(disk_spec(8));
    CHECK(harness::instance_to_json(a) != harness::instance_to_json(c));
}

TEST_CASE("generation options") {
    GenSpec one = disk_spec(1, 1);
    CHECK(harness::generate_random_instance(one).shapes.size() == 1);

    GenSpec rel = disk_spec(2, 8);
    rel.model = online::Model::relaxed_connected;
    rel.box = 5.0;
    const Instance inst = harness::generate_random_instance(rel);
    CHECK(graph::is_connected(graph::build_intersection_graph(inst.shapes)));

    GenSpec wide = disk_spec(3, 6);
    wide.family = "disks";
    wide.width_min = 1.0;
    wide.width_max = 4.0;
    const Instance mixed = harness::generate_random_instance(wide);
    CHECK(mixed.family_meta.m == doctest::Approx(4.0));
    for (const auto& s : mixed.shapes) {
        const double w = geom::fat_meta(s).width;
        CHECK(w >= 1.0);
        CHECK(w <= 4.0);
    }

    GenSpec sq = disk_spec(4, 5);
    sq.family = "unit_squares";
    for (const auto& s : harness::generate_random_instance(sq).shapes)
        CHECK(s.is<geom::AxisHypercube>());

    GenSpec bad = disk_spec(5);
    bad.family = "pyramids";
    CHECK_THROWS_AS(harness::generate_random_instance(bad), harness::HarnessError);
    GenSpec thin = disk_spec(6);
    thin.width_min = 0.5;
    CHECK_THROWS_AS(harness::generate_random_instance(thin), harness::HarnessError);
}

TEST_CASE("lowering shapes to arrivals") {
    Instance inst;
    inst.shapes = {geom::Ball{{0.0, 0.0}, 1.0}, geom::Ball{{2.0, 0.0}, 1.0},
                   geom::Ball{{4.0, 0.0}, 1.0}};
    inst.arrival_order = {1, 0, 2};
    const auto seq = harness::lower_to_arrivals(inst);
    REQUIRE(seq.size() == 3);
    CHECK(seq[0].vertex == 1);
    CHECK(seq[0].neighbors_among_previous.empty());
    CHECK(seq[1].vertex == 0);
    CHECK(seq[1].neighbors_among_previous == std::vector<int>{1});
    CHECK(seq[2].vertex == 2);
    CHECK(seq[2].neighbors_among_previous == std::vector<int>{1});
    CHECK(seq[0].width.has_value());
    CHECK(*seq[0].width == doctest::Approx(1.0));
}

TEST_CASE("experiment rows for the star instance") {
    const auto rows = harness::run_experiment(star_instance(), "greedy_ds", {});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].algorithm == "greedy_ds");
    CHECK(rows[0].alg_value == 5.0);
    CHECK(rows[0].opt_value == 1.0);
    CHECK(rows[0].zeta == 5);
    CHECK(rows[0].bound_value == doctest::Approx(5.0));
    CHECK(rows[0].pass);
    CHECK(rows[1].algorithm == "greedy_ds_mids");
    CHECK(rows[1].pass);

    CHECK_THROWS_AS(harness::run_experiment(star_instance(), "greedy_cds", {}),
                    harness::HarnessError);
    CHECK_THROWS_AS(harness::run_experiment(star_instance(), "quantum", {}),
                    harness::HarnessError);
}

TEST_CASE("relaxed coloring rows carry no bound") {
    harness::RunOptions opts;
    opts.t = 2;
    const auto rows = harness::run_experiment(star_instance(), "t_relaxed", opts);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].bound_value == -1.0);
    CHECK(rows[0].pass);
}

TEST_CASE("trace rows") {
    std::vector<harness::TraceRow> trace;
    harness::run_experiment(star_instance(), "first_fit", {}, 0, &trace);
    REQUIRE(trace.size() == 6);
    CHECK(trace[0].outcome == "1");
    CHECK(trace[5].outcome == "2");  // core takes the second color
    CHECK(trace[5].size_so_far == 2);
}

TEST_CASE("csv round trip recomputes verdicts") {
    const auto rows = harness::run_experiment(star_instance(), "greedy_ds", {}, 42);
    const std::string text = harness::format_csv(rows, {"note line"});
    const auto back = harness::parse_csv(text);
    REQUIRE(back.size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].seed == rows[i].seed);
        CHECK(back[i].algorithm == rows[i].algorithm);
        CHECK(back[i].pass == rows[i].pass);
    }

    // a tampered pass flag is ignored; the verdict comes from the values
    const std::string lie =
        "seed,family,n,algorithm,alg_value,opt_value,zeta,bound_value,pass,wall_ms\n"
        "1,unit_disks,6,greedy_ds,7,1,5,5,1,0.5\n";
    const auto relit = harness::parse_csv(lie);
    REQUIRE(relit.size() == 1);
    CHECK_FALSE(relit[0].pass);

    CHECK_THROWS_AS(harness::parse_csv("a,b\n1,2\n"), harness::HarnessError);
}

TEST_CASE("sweep batches") {
    const auto empty = harness::sweep(R"({"trials": []})");
    CHECK(empty.records.empty());
    CHECK(empty.violations == 0);
    const std::string csv = harness::format_csv(empty.records, empty.summary);
    CHECK(csv.rfind("seed,family,n,", 0) == 0);

    const auto out = harness::sweep(R"({
        "oracle_cap": 14,
        "trials": [{"family": "unit_disks", "count": 4, "n_min": 4, "n_max": 9,
                    "box": 5.0, "seed": 11, "model": "relaxed_connected",
                    "algorithms": ["greedy_ds", "greedy_cds", "first_fit"]}]
    })");
    CHECK(out.violations == 0);
    CHECK(out.records.size() >= 4u * 3u);
    bool saw_summary = false;
    for (const auto& line : out.summary)
        if (line.rfind("violations", 0) == 0) saw_summary = true;
    CHECK(saw_summary);

    CHECK_THROWS_AS(harness::sweep("not json"), harness::HarnessError);
    CHECK_THROWS_AS(harness::sweep(R"({"trials": [{"family": "unit_disks", "count": 1,
        "n_min": 3, "n_max": 3, "algorithms": ["t_relaxed"]}]})"),
                    harness::HarnessError);
}

TEST_CASE("bound constants and formulas") {
    CHECK(bounds::du_du_slope == 3.399);
    CHECK(bounds::du_du_intercept == 4.874);
    CHECK(bounds::greedy_cds_asym_const == 2.0);
    CHECK(bounds::greedy_ds_bound(5, 3) == doctest::Approx(15.0));
    CHECK(bounds::greedy_cds_abs_bound(5, 2) == doctest::Approx(20.0));
    CHECK(bounds::greedy_cds_asym_bound(5, 2) == doctest::Approx(18.0));
    CHECK(bounds::greedy_cds_unit_disk_bound(1) == doctest::Approx(2 * (3.399 + 4.874)));
    CHECK(bounds::first_fit_bound(5, 3) == doctest::Approx(15.0));
    CHECK(bounds::layer_count(1.0) == 1);
    CHECK(bounds::layer_count(4.0) == 3);
    CHECK(bounds::layer_count(7.99) == 3);
    CHECK(bounds::layer_count(8.0) == 4);
    CHECK(bounds::layer_bound(11.0, 4.0, 2) == doctest::Approx(66.0));
    CHECK(bounds::independent_set_bound(5, 2) == doctest::Approx(9.0));
    CHECK(bounds::cross_layer_bound(11.0, 3) == doctest::Approx(22.0));
}

TEST_CASE("zeta prime by family") {
    harness::FamilyMeta disks{"disks", 4.0, 1.0};
    CHECK(bounds::zeta_prime_for(disks, 2) == doctest::Approx(11.0));
    harness::FamilyMeta uds{"unit_disks", 1.0, 1.0};
    CHECK(bounds::zeta_prime_for(uds, 2) == doctest::Approx(11.0));
    harness::FamilyMeta squares{"unit_squares", 1.0, 1.0 / std::sqrt(2.0)};
    CHECK(bounds::zeta_prime_for(squares, 2) ==
          doctest::Approx(std::pow(2.0 * std::sqrt(2.0) + 2.0, 2)));
}

TEST_CASE("ratio table rows") {
    const auto rows = bounds::table_rows(2, 1.0, 1.0);
    auto find = [&](const std::string& fam) {
        for (const auto& r : rows)
            if (r.family == fam) return r;
        throw std::runtime_error("missing row " + fam);
    };
    const auto balls = find("congruent_balls");
    CHECK(balls.mds_mids == 12.0);
    CHECK(balls.mc == 12.0);
    CHECK(balls.mcds == 22.0);
    CHECK(balls.t_relaxed == 288.0);
    const auto kgon = find("regular_kgon");
    CHECK(kgon.mds_mids == 6.0);
    CHECK(kgon.mcds == 10.0);
    CHECK(kgon.t_relaxed == 72.0);
    const auto fat = find("fat_objects");
    CHECK(fat.mds_mids == doctest::Approx(9.0));
    CHECK(fat.mcds == doctest::Approx(16.0));
    const auto hyper = find("hypercube_translates");
    CHECK(hyper.mds_mids == 4.0);
    CHECK(hyper.mcds == 6.0);
    CHECK(hyper.t_relaxed == 32.0);
}
