#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dynit/curve_table.hpp"
#include "dynit/experiments.hpp"

using namespace dynit;

namespace {

const char* kFig5Spec = R"({
  "figure_id": "fig5",
  "scenario": { "mean_g_sp": 2.0, "mean_g_ps": 3.3, "mean_g_ss": 5.0, "mean_g_pp": 4.0,
                "sigma2": 1.0, "p_peak_db": 10.0 },
  "sweeps": { "lambda_p": [2, 4], "p_db": [10] },
  "sim": { "n_samples": 50000, "seed": 7, "n_partitions": 4 },
  "output_path": "fig5_test.csv"
})";

}  // namespace

TEST_CASE("spec parsing: defaults, db conversion, mean-gain keys") {
    const ExperimentSpec spec = parse_experiment_spec(kFig5Spec);
    CHECK(spec.figure_id == "fig5");
    CHECK(spec.scenario.lambda_sp == doctest::Approx(0.5));
    CHECK(spec.scenario.lambda_ps == doctest::Approx(1.0 / 3.3));
    CHECK(spec.scenario.p_peak == doctest::Approx(10.0));
    CHECK(spec.lambda_p_sweep == std::vector<double>{2.0, 4.0});
    CHECK(spec.sim.n_samples == 50000);
    CHECK(spec.sim.seed == 7);
    CHECK(spec.output_path == "fig5_test.csv");

    // omitted sweeps fall back to the figure defaults
    const ExperimentSpec bare = parse_experiment_spec(R"({"figure_id": "fig10"})");
    CHECK(bare.lambda_p_sweep.size() == 6);
    CHECK(bare.psi_fixed_db_sweep == std::vector<double>{-10.0, -5.0});
    CHECK(bare.output_path == "fig10.csv");
}

TEST_CASE("spec parsing rejects malformed input") {
    CHECK_THROWS(parse_experiment_spec(R"({"figure_id": "fig99"})"));
    CHECK_THROWS(parse_experiment_spec(R"({"figure_id": "fig5", "sweeps": {"bogus": [1]}})"));
    CHECK_THROWS(
        parse_experiment_spec(R"({"figure_id": "fig5", "sweeps": {"lambda_p": []}})"));
    CHECK_THROWS(parse_experiment_spec(R"({"figure_id": "fig5", "quad_tol": 1.0})"));
    CHECK_THROWS(parse_experiment_spec(R"(not json at all)"));
    CHECK_THROWS(
        parse_experiment_spec(R"({"figure_id": "fig5", "scenario": {"sigma2": -1}})"));
}

TEST_CASE("known figure registry") {
    const auto& ids = known_figure_ids();
    CHECK(ids.size() == 12);
    CHECK(ids.front() == "fig2");
    CHECK(ids.back() == "fig12");
}

TEST_CASE("fig5 run produces matched, ordered curves and deterministic CSV") {
    const ExperimentSpec spec = parse_experiment_spec(kFig5Spec);
    const CurveTable t = run_experiment(spec);
    const auto& x = t.column("sinr");
    const auto& lo = t.column("outage_lp2_p10db");
    const auto& hi = t.column("outage_lp4_p10db");
    const auto& mc = t.column("outage_mc_lp2_p10db");
    REQUIRE(x.size() == 50);
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(hi[i] >= lo[i] - 1e-12);  // demand ordering
        worst = std::max(worst, std::fabs(mc[i] - lo[i]));
    }
    CHECK(worst < 0.02);  // 50k samples

    CHECK(t.metadata.at("figure_id") == "fig5");
    CHECK(t.metadata.count("scenario_hash") == 1);
    CHECK(t.metadata.at("seed") == "7");

    const CurveTable again = run_experiment(spec);
    CHECK(csv_equal_modulo_timestamp(t.to_csv(), again.to_csv()));
    CHECK(t.equals_data(again));
}

TEST_CASE("fig2 and fig3 emit demand-law series") {
    ExperimentSpec spec = parse_experiment_spec(R"({"figure_id": "fig2",
        "sim": {"n_samples": 20000, "seed": 9}})");
    const CurveTable t = run_experiment(spec);
    CHECK(t.column("k").size() == 13);
    // truncation lifts every k >= 1 probability
    const auto& plain = t.column("poisson_lp2");
    const auto& zt = t.column("ztpoisson_lp2");
    for (std::size_t i = 1; i < plain.size(); ++i) CHECK(zt[i] > plain[i]);
    CHECK(zt[0] == 0.0);

    ExperimentSpec f3 = parse_experiment_spec(R"({"figure_id": "fig3",
        "sim": {"n_samples": 50000, "seed": 9}})");
    const CurveTable t3 = run_experiment(f3);
    const auto& cdf = t3.column("sinr_cdf");
    const auto& ecdf = t3.column("sinr_cdf_mc");
    double worst = 0.0;
    for (std::size_t i = 0; i < cdf.size(); ++i)
        worst = std::max(worst, std::fabs(cdf[i] - ecdf[i]));
    CHECK(worst < 0.02);
}

TEST_CASE("fig10 reports dynamic and fixed capacity columns") {
    ExperimentSpec spec = parse_experiment_spec(R"({"figure_id": "fig10",
        "sweeps": {"lambda_p": [1, 2], "p_db": [10], "psi_fixed_db": [-10, -5]},
        "sim": {"n_samples": 50000, "seed": 3}})");
    const CurveTable t = run_experiment(spec);
    const auto& dyn = t.column("cap_dynamic");
    const auto& f10 = t.column("cap_fixed_psi-10db");
    REQUIRE(dyn.size() == 2);
    // the tight -10 dB baseline is dominated at low demand
    CHECK(dyn[0] > f10[0]);
    CHECK(dyn[1] > f10[1]);
    // baseline is demand-independent: constant column
    CHECK(f10[0] == f10[1]);
    const auto& mc = t.column("cap_dynamic_mc");
    CHECK(mc[0] == doctest::Approx(dyn[0]).epsilon(0.03));
}

TEST_CASE("fig11 trace table") {
    ExperimentSpec spec = parse_experiment_spec(R"({"figure_id": "fig11",
        "sim": {"seed": 424243}})");
    const CurveTable t = run_experiment(spec);
    CHECK(t.column("slot").size() == 30);
    CHECK(t.names.size() == 4);  // slot + dynamic + two baselines
}

TEST_CASE("CurveTable io round-trip and validation") {
    CurveTable t;
    t.metadata["seed"] = "1";
    t.metadata["generated_at"] = "2020-01-01T00:00:00Z";
    t.add_column("x", {1.0, 2.5, 3.0000000000000004});
    t.add_column("y", {-1e-300, 0.3130352854993313, 7e88});
    std::ostringstream os;
    t.write_csv(os);
    std::istringstream is(os.str());
    const CurveTable back = CurveTable::read_csv(is);
    CHECK(back.equals_data(t));
    CHECK(back.column("y")[1] == 0.3130352854993313);  // exact round-trip

    CHECK_THROWS_AS(t.add_column("z", {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(t.column("nope"), std::out_of_range);

    CurveTable dup;
    dup.add_column("a", {1.0});
    dup.add_column("a", {2.0});
    CHECK_THROWS_AS(dup.validate(), std::logic_error);

    // timestamp is ignored in both comparison paths
    CurveTable later = t;
    later.metadata["generated_at"] = "2099-01-01T00:00:00Z";
    CHECK(later.equals_data(t));
    std::ostringstream os2;
    later.write_csv(os2);
    CHECK(csv_equal_modulo_timestamp(os.str(), os2.str()));
}
