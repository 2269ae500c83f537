#include "dynit/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "dynit/analytic.hpp"
#include "dynit/distributions.hpp"

namespace dynit {

namespace {

using nlohmann::json;

std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string now_iso8601() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

const std::vector<std::string> kFigures = {"fig2",  "fig3", "fig4_psi", "fig4_outage",
                                           "fig5",  "fig6", "fig7",     "fig8",
                                           "fig9",  "fig10", "fig11",   "fig12"};

void apply_scenario_json(Scenario& scn, const json& j) {
    auto get = [&](const char* key, double& field) {
        if (j.contains(key)) field = j.at(key).get<double>();
    };
    get("lambda_p", scn.lambda_p);
    get("lambda_pp", scn.lambda_pp);
    get("lambda_sp", scn.lambda_sp);
    get("lambda_ss", scn.lambda_ss);
    get("lambda_ps", scn.lambda_ps);
    get("sigma2", scn.sigma2);
    get("bandwidth", scn.bandwidth);
    auto mean = [&](const char* key, double& rate_field) {
        if (j.contains(key)) rate_field = 1.0 / j.at(key).get<double>();
    };
    mean("mean_g_pp", scn.lambda_pp);
    mean("mean_g_sp", scn.lambda_sp);
    mean("mean_g_ss", scn.lambda_ss);
    mean("mean_g_ps", scn.lambda_ps);
    if (j.contains("p_peak")) scn.p_peak = j.at("p_peak").get<double>();
    if (j.contains("p_peak_db")) scn.p_peak = db_to_linear(j.at("p_peak_db").get<double>());
    scn.validate();
}

std::vector<double> get_sweep(const json& j, const char* key) {
    if (!j.contains(key)) return {};  // absent: the figure default applies
    auto v = j.at(key).get<std::vector<double>>();
    if (v.empty())
        throw std::invalid_argument(std::string("ExperimentSpec: sweep '") + key +
                                    "' must be non-empty");
    return v;
}

// Per-figure sweep defaults, applied when the spec omits the list.
void apply_sweep_defaults(ExperimentSpec& s) {
    auto def = [](std::vector<double>& v, std::vector<double> fallback) {
        if (v.empty()) v = std::move(fallback);
    };
    auto range = [](double lo, double hi, double step) {
        std::vector<double> v;
        for (double x = lo; x <= hi + 1e-12; x += step) v.push_back(x);
        return v;
    };
    const std::string& f = s.figure_id;
    if (f == "fig2") def(s.lambda_p_sweep, {0.5, 1.0, 2.0});
    if (f == "fig3") def(s.lambda_p_sweep, {6.0});
    if (f == "fig4_psi") def(s.lambda_p_sweep, {2.0, 4.0, 6.0}), def(s.p_db_sweep, {10.0});
    if (f == "fig4_outage") def(s.lambda_p_sweep, {2.0}), def(s.p_db_sweep, {-10.0, 0.0, 10.0});
    if (f == "fig5") def(s.lambda_p_sweep, {2.0, 3.0, 4.0}), def(s.p_db_sweep, {10.0});
    if (f == "fig6") def(s.lambda_p_sweep, range(1, 5, 1)), def(s.p_db_sweep, {5.0, 10.0, 15.0});
    if (f == "fig7") def(s.lambda_p_sweep, {2.0, 3.0, 4.0}), def(s.p_db_sweep, range(5, 10, 1));
    if (f == "fig8") def(s.lambda_p_sweep, {2.0, 3.0, 4.0}), def(s.p_db_sweep, range(-10, 10, 2));
    if (f == "fig9") def(s.lambda_p_sweep, range(1, 5, 1)), def(s.p_db_sweep, {5.0, 10.0, 15.0});
    if (f == "fig10")
        def(s.lambda_p_sweep, range(1, 6, 1)), def(s.p_db_sweep, {10.0}),
            def(s.psi_fixed_db_sweep, {-10.0, -5.0});
    if (f == "fig11")
        def(s.lambda_p_sweep, {2.0}), def(s.p_db_sweep, {10.0}),
            def(s.psi_fixed_db_sweep, {-10.0, -5.0});
    if (f == "fig12")
        def(s.lambda_p_sweep, {1.0}), def(s.p_db_sweep, {10.0}),
            def(s.psi_fixed_db_sweep, {-10.0, -5.0});
}

std::vector<double> default_sinr_grid() { return log_grid(1e-2, 1e2, 50); }

CurveTable base_table(const ExperimentSpec& spec) {
    CurveTable t;
    t.metadata["figure_id"] = spec.figure_id;
    t.metadata["provenance"] = std::string("dynit ") + kVersion;
    char hash[24];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(scenario_hash(spec)));
    t.metadata["scenario_hash"] = hash;
    t.metadata["seed"] = std::to_string(spec.sim.seed);
    t.metadata["n_samples"] = std::to_string(spec.sim.n_samples);
    t.metadata["n_partitions"] = std::to_string(spec.sim.n_partitions);
    t.metadata["tail_tol"] = fmt_num(spec.tail_tol);
    t.metadata["quad_tol"] = fmt_num(spec.quad_tol);
    t.metadata["generated_at"] = now_iso8601();
    return t;
}

Scenario scenario_for(const ExperimentSpec& spec, double lambda_p, double p_db) {
    Scenario scn = spec.scenario;
    scn.lambda_p = lambda_p;
    scn.p_peak = db_to_linear(p_db);
    return scn;
}

// Re-throws numerical failures with the offending grid point attached.
template <class Fn>
auto at_grid_point(const ExperimentSpec& spec, double lambda_p, double p_db, const Fn& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        throw std::runtime_error(spec.figure_id + " at lambda_p=" + fmt_num(lambda_p) +
                                 ", p_db=" + fmt_num(p_db) + ": " + e.what());
    }
}

SimConfig sim_for(const ExperimentSpec& spec, SimRegime regime, double psi_fixed = 1.0) {
    SimConfig cfg = spec.sim;
    cfg.regime = regime;
    cfg.psi_fixed = psi_fixed;
    return cfg;
}

CurveTable run_fig2(const ExperimentSpec& spec) {
    CurveTable t = base_table(spec);
    const int k_max = 12;
    std::vector<double> ks(k_max + 1);
    for (int k = 0; k <= k_max; ++k) ks[k] = k;
    t.add_column("k", ks);
    for (double lp : spec.lambda_p_sweep) {
        std::vector<double> pois(k_max + 1), zt(k_max + 1, 0.0), emp(k_max + 1, 0.0);
        for (int k = 0; k <= k_max; ++k) pois[k] = poisson_pmf(k, lp);
        for (int k = 1; k <= k_max; ++k) zt[k] = zt_poisson_pmf(k, lp);
        const ZtPoissonSampler sampler(lp);
        std::vector<std::uint64_t> counts(k_max + 1, 0);
        for (std::uint64_t i = 0; i < spec.sim.n_samples; ++i) {
            const int k = sample_zt_poisson(SampleRng(spec.sim.seed, i), 0, sampler);
            if (k <= k_max) ++counts[k];
        }
        for (int k = 0; k <= k_max; ++k)
            emp[k] = static_cast<double>(counts[k]) / static_cast<double>(spec.sim.n_samples);
        t.add_column("poisson_lp" + fmt_num(lp), pois);
        t.add_column("ztpoisson_lp" + fmt_num(lp), zt);
        t.add_column("ztpoisson_mc_lp" + fmt_num(lp), emp);
    }
    return t;
}

CurveTable run_fig3(const ExperimentSpec& spec) {
    CurveTable t = base_table(spec);
    const double p_db = spec.p_db_sweep.empty() ? 10.0 : spec.p_db_sweep.front();
    const Scenario scn = scenario_for(spec, spec.lambda_p_sweep.front(), p_db);
    const TruncatedSeries series = build_series(scn, spec.tail_tol);
    const ZtPoissonSampler sampler(scn.lambda_p);
    std::vector<double> gamma_p(spec.sim.n_samples);
    for (std::uint64_t i = 0; i < spec.sim.n_samples; ++i)
        gamma_p[i] =
            std::expm1(static_cast<double>(sample_zt_poisson(SampleRng(spec.sim.seed, i), 0, sampler)));
    const EmpiricalDist emp(std::move(gamma_p));
    std::vector<double> pmf(series.size()), cdf(series.size()), ecdf(series.size()),
        epmf(series.size());
    double cum = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        pmf[i] = series.weights[i];
        cum += series.weights[i];
        cdf[i] = cum;
        ecdf[i] = emp.ecdf(series.alphas[i]);
        epmf[i] = emp.ecdf(series.alphas[i]) - emp.ecdf_strict(series.alphas[i]);
    }
    t.add_column("alpha_k", series.alphas);
    t.add_column("sinr_pmf", pmf);
    t.add_column("sinr_cdf", cdf);
    t.add_column("sinr_pmf_mc", epmf);
    t.add_column("sinr_cdf_mc", ecdf);
    return t;
}

CurveTable run_fig4_psi(const ExperimentSpec& spec) {
    CurveTable t = base_table(spec);
    const double p_db = spec.p_db_sweep.front();
    constexpr double kBin = 0.2;
    constexpr int kNBins = 25;
    std::vector<double> centers(kNBins);
    for (int i = 0; i < kNBins; ++i) centers[i] = (i + 0.5) * kBin;
    t.add_column("psi_bin_center", centers);
    for (double lp : spec.lambda_p_sweep) {
        const Scenario scn = scenario_for(spec, lp, p_db);
        const TruncatedSeries series = build_series(scn, spec.tail_tol);
        const MixtureExp mix = make_psi_mixture(scn, series);
        const SimResult sim = simulate(scn, sim_for(spec, SimRegime::general));
        std::vector<double> ana(kNBins), mc(kNBins);
        for (int i = 0; i < kNBins; ++i) {
            const double lo = i * kBin, hi = lo + kBin;
            ana[i] = (psi_cdf(hi, mix) - psi_cdf(lo, mix)) / kBin;
            mc[i] = (sim.psi.ecdf(hi) - sim.psi.ecdf(lo)) / kBin;
        }
        t.add_column("psi_pdf_lp" + fmt_num(lp), ana);
        t.add_column("psi_pdf_mc_lp" + fmt_num(lp), mc);
    }
    return t;
}

CurveTable run_outage_figure(const ExperimentSpec& spec) {
    CurveTable t = base_table(spec);
    const auto grid = default_sinr_grid();
    t.add_column("sinr", grid);
    for (double p_db : spec.p_db_sweep) {
        for (double lp : spec.lambda_p_sweep) {
            const Scenario scn = scenario_for(spec, lp, p_db);
            const TruncatedSeries series = build_series(scn, spec.tail_tol);
            const SimResult sim = simulate(scn, sim_for(spec, SimRegime::general));
            std::vector<double> ana(grid.size()), mc(grid.size());
            for (std::size_t i = 0; i < grid.size(); ++i) {
                ana[i] = outage_general(grid[i], series, scn);
                mc[i] = sim.gamma_s.ecdf(grid[i]);
            }
            const std::string tag = "_lp" + fmt_num(lp) + "_p" + fmt_num(p_db) + "db";
            t.add_column("outage" + tag, ana);
            t.add_column("outage_mc" + tag, mc);
        }
    }
    return t;
}

CurveTable run_capacity_vs_lambda(const ExperimentSpec& spec, Regime regime) {
    CurveTable t = base_table(spec);
    t.add_column("lambda_p", spec.lambda_p_sweep);
    const SimRegime sim_regime =
        regime == Regime::general ? SimRegime::general : SimRegime::high_power;
    const char* prefix = regime == Regime::general ? "cap" : "cap_hp";
    for (double p_db : spec.p_db_sweep) {
        std::vector<double> ana, mc;
        for (double lp : spec.lambda_p_sweep) {
            at_grid_point(spec, lp, p_db, [&] {
                const Scenario scn = scenario_for(spec, lp, p_db);
                const TruncatedSeries series = build_series(scn, spec.tail_tol);
                ana.push_back(mean_capacity(regime, series, scn, spec.quad_tol).mean_capacity);
                mc.push_back(simulate_mean_capacity(scn, sim_for(spec, sim_regime)));
            });
        }
        const std::string tag = "_p" + fmt_num(p_db) + "db";
        t.add_column(std::string(prefix) + tag, ana);
        t.add_column(std::string(prefix) + "_mc" + tag, mc);
    }
    return t;
}

CurveTable run_capacity_vs_power(const ExperimentSpec& spec, Regime regime) {
    CurveTable t = base_table(spec);
    t.add_column("p_db", spec.p_db_sweep);
    const SimRegime sim_regime =
        regime == Regime::general ? SimRegime::general : SimRegime::high_power;
    const char* prefix = regime == Regime::general ? "cap" : "cap_hp";
    for (double lp : spec.lambda_p_sweep) {
        std::vector<double> ana, mc;
        for (double p_db : spec.p_db_sweep) {
            at_grid_point(spec, lp, p_db, [&] {
                const Scenario scn = scenario_for(spec, lp, p_db);
                const TruncatedSeries series = build_series(scn, spec.tail_tol);
                ana.push_back(mean_capacity(regime, series, scn, spec.quad_tol).mean_capacity);
                mc.push_back(simulate_mean_capacity(scn, sim_for(spec, sim_regime)));
            });
        }
        const std::string tag = "_lp" + fmt_num(lp);
        t.add_column(std::string(prefix) + tag, ana);
        t.add_column(std::string(prefix) + "_mc" + tag, mc);
    }
    return t;
}

CurveTable run_fig10(const ExperimentSpec& spec) {
    CurveTable t = base_table(spec);
    t.add_column("lambda_p", spec.lambda_p_sweep);
    const double p_db = spec.p_db_sweep.front();
    std::vector<double> dyn_ana, dyn_mc;
    for (double lp : spec.lambda_p_sweep) {
        const Scenario scn = scenario_for(spec, lp, p_db);
        const TruncatedSeries series = build_series(scn, spec.tail_tol);
        dyn_ana.push_back(
            mean_capacity(Regime::general, series, scn, spec.quad_tol).mean_capacity);
        dyn_mc.push_back(simulate_mean_capacity(scn, sim_for(spec, SimRegime::general)));
    }
    t.add_column("cap_dynamic", dyn_ana);
    t.add_column("cap_dynamic_mc", dyn_mc);
    for (double psi_db : spec.psi_fixed_db_sweep) {
        const double psi0 = db_to_linear(psi_db);
        const Scenario scn = scenario_for(spec, spec.lambda_p_sweep.front(), p_db);
        const double ana = capacity_fixed_it(psi0, scn, spec.quad_tol).mean_capacity;
        const double mc =
            simulate_mean_capacity(scn, sim_for(spec, SimRegime::fixed_it, psi0));
        // constant baselines, one row per swept lambda_p
        t.add_column("cap_fixed_psi" + fmt_num(psi_db) + "db",
                     std::vector<double>(spec.lambda_p_sweep.size(), ana));
        t.add_column("cap_fixed_mc_psi" + fmt_num(psi_db) + "db",
                     std::vector<double>(spec.lambda_p_sweep.size(), mc));
    }
    return t;
}

CurveTable run_fig11(const ExperimentSpec& spec) {
    CurveTable t = base_table(spec);
    const double p_db = spec.p_db_sweep.front();
    const Scenario scn = scenario_for(spec, spec.lambda_p_sweep.front(), p_db);
    std::vector<double> psi_lin;
    for (double db : spec.psi_fixed_db_sweep) psi_lin.push_back(db_to_linear(db));
    constexpr std::size_t kSlots = 30;
    const SlotTrace trace =
        instantaneous_trace(scn, sim_for(spec, SimRegime::general), kSlots, psi_lin);
    std::vector<double> slots(kSlots);
    for (std::size_t i = 0; i < kSlots; ++i) slots[i] = static_cast<double>(i + 1);
    t.add_column("slot", slots);
    t.add_column("cap_dynamic", trace.dynamic_capacity);
    for (std::size_t f = 0; f < psi_lin.size(); ++f)
        t.add_column("cap_fixed_psi" + fmt_num(spec.psi_fixed_db_sweep[f]) + "db",
                     trace.fixed_capacity[f]);
    return t;
}

CurveTable run_fig12(const ExperimentSpec& spec) {
    CurveTable t = base_table(spec);
    const auto grid = default_sinr_grid();
    t.add_column("sinr", grid);
    const double p_db = spec.p_db_sweep.front();
    const Scenario scn = scenario_for(spec, spec.lambda_p_sweep.front(), p_db);
    const TruncatedSeries series = build_series(scn, spec.tail_tol);
    const SimResult dyn = simulate(scn, sim_for(spec, SimRegime::general));
    std::vector<double> ana(grid.size()), mc(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        ana[i] = outage_general(grid[i], series, scn);
        mc[i] = dyn.gamma_s.ecdf(grid[i]);
    }
    t.add_column("outage_dynamic", ana);
    t.add_column("outage_dynamic_mc", mc);
    for (double psi_db : spec.psi_fixed_db_sweep) {
        const double psi0 = db_to_linear(psi_db);
        const SimResult fix = simulate(scn, sim_for(spec, SimRegime::fixed_it, psi0));
        std::vector<double> fana(grid.size()), fmc(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            fana[i] = outage_fixed_it(grid[i], psi0, scn);
            fmc[i] = fix.gamma_s.ecdf(grid[i]);
        }
        t.add_column("outage_fixed_psi" + fmt_num(psi_db) + "db", fana);
        t.add_column("outage_fixed_mc_psi" + fmt_num(psi_db) + "db", fmc);
    }
    return t;
}

}  // namespace

void ExperimentSpec::validate() const {
    if (std::find(kFigures.begin(), kFigures.end(), figure_id) == kFigures.end())
        throw std::invalid_argument("ExperimentSpec: unknown figure_id '" + figure_id + "'");
    scenario.validate();
    auto nonempty = [&](const std::vector<double>& v, const char* name) {
        if (v.empty())
            throw std::invalid_argument("ExperimentSpec: " + figure_id + " needs a non-empty " +
                                        name + " sweep");
    };
    nonempty(lambda_p_sweep, "lambda_p");
    if (figure_id != "fig2" && figure_id != "fig3") nonempty(p_db_sweep, "p_db");
    if (figure_id == "fig10" || figure_id == "fig11" || figure_id == "fig12")
        nonempty(psi_fixed_db_sweep, "psi_fixed_db");
    if (!(tail_tol > 0.0) || tail_tol > 1e-3)
        throw std::invalid_argument("ExperimentSpec: tail_tol must lie in (0, 1e-3]");
    if (!(quad_tol > 0.0) || quad_tol > 1e-4)
        throw std::invalid_argument("ExperimentSpec: quad_tol must lie in (0, 1e-4]");
}

const std::vector<std::string>& known_figure_ids() { return kFigures; }

ExperimentSpec parse_experiment_spec(const std::string& json_text) {
    const json j = json::parse(json_text);
    ExperimentSpec spec;
    spec.figure_id = j.at("figure_id").get<std::string>();
    if (j.contains("scenario")) apply_scenario_json(spec.scenario, j.at("scenario"));
    if (j.contains("sweeps")) {
        const json& s = j.at("sweeps");
        for (const auto& [key, value] : s.items()) {
            (void)value;
            if (key != "lambda_p" && key != "p_db" && key != "psi_fixed_db")
                throw std::invalid_argument("ExperimentSpec: unknown sweep '" + key + "'");
        }
        spec.lambda_p_sweep = get_sweep(s, "lambda_p");
        spec.p_db_sweep = get_sweep(s, "p_db");
        spec.psi_fixed_db_sweep = get_sweep(s, "psi_fixed_db");
    }
    if (j.contains("sim")) {
        const json& s = j.at("sim");
        if (s.contains("n_samples")) spec.sim.n_samples = s.at("n_samples").get<std::uint64_t>();
        if (s.contains("seed")) spec.sim.seed = s.at("seed").get<std::uint64_t>();
        if (s.contains("n_partitions"))
            spec.sim.n_partitions = s.at("n_partitions").get<unsigned>();
    }
    if (j.contains("tail_tol")) spec.tail_tol = j.at("tail_tol").get<double>();
    if (j.contains("quad_tol")) spec.quad_tol = j.at("quad_tol").get<double>();
    if (j.contains("output_path")) spec.output_path = j.at("output_path").get<std::string>();
    apply_sweep_defaults(spec);
    if (spec.output_path.empty()) spec.output_path = spec.figure_id + ".csv";
    spec.validate();
    return spec;
}

ExperimentSpec load_experiment_spec(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("load_experiment_spec: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_experiment_spec(ss.str());
}

CurveTable run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    const std::string& f = spec.figure_id;
    CurveTable t = [&] {
        if (f == "fig2") return run_fig2(spec);
        if (f == "fig3") return run_fig3(spec);
        if (f == "fig4_psi") return run_fig4_psi(spec);
        if (f == "fig4_outage" || f == "fig5") return run_outage_figure(spec);
        if (f == "fig6") return run_capacity_vs_lambda(spec, Regime::general);
        if (f == "fig7") return run_capacity_vs_power(spec, Regime::general);
        if (f == "fig8") return run_capacity_vs_power(spec, Regime::high_power);
        if (f == "fig9") return run_capacity_vs_lambda(spec, Regime::high_power);
        if (f == "fig10") return run_fig10(spec);
        if (f == "fig11") return run_fig11(spec);
        if (f == "fig12") return run_fig12(spec);
        throw std::invalid_argument("run_experiment: unknown figure_id '" + f + "'");
    }();
    t.validate();
    return t;
}

std::string run_experiment_to_file(const ExperimentSpec& spec, const std::string& out_dir) {
    const CurveTable t = run_experiment(spec);
    std::filesystem::path dir = out_dir.empty() ? "." : out_dir;
    std::filesystem::create_directories(dir);
    const std::filesystem::path target = dir / spec.output_path;
    t.write_csv_file(target.string());
    return target.string();
}

double simulate_mean_capacity(const Scenario& scn, const SimConfig& cfg) {
    scn.validate();
    if (cfg.n_samples == 0) throw std::invalid_argument("SimConfig: n_samples must be >= 1");
    const ZtPoissonSampler demand(scn.lambda_p);
    // Kahan partials per partition, reduced in partition order.
    std::vector<double> partial(cfg.n_partitions, 0.0);
    std::vector<std::thread> pool;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned n_threads = std::min({cfg.n_partitions, hw, 16u});
    const std::uint64_t chunk = cfg.n_samples / cfg.n_partitions;
    const std::uint64_t rem = cfg.n_samples % cfg.n_partitions;
    auto worker = [&](unsigned part) {
        std::uint64_t lo = part * chunk + std::min<std::uint64_t>(part, rem);
        std::uint64_t hi = lo + chunk + (part < rem ? 1 : 0);
        double sum = 0.0, comp = 0.0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const ChannelDraw d = make_draw(scn, demand, cfg.seed, i, cfg.regime, cfg.psi_fixed);
            const double y = std::log1p(d.gamma_s) - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        partial[part] = sum;
    };
    if (n_threads <= 1) {
        for (unsigned part = 0; part < cfg.n_partitions; ++part) worker(part);
    } else {
        for (unsigned t = 0; t < n_threads; ++t)
            pool.emplace_back([&, t] {
                for (unsigned part = t; part < cfg.n_partitions; part += n_threads) worker(part);
            });
        for (auto& th : pool) th.join();
    }
    double total = 0.0;
    for (double s : partial) total += s;
    return total / static_cast<double>(cfg.n_samples);
}

std::uint64_t scenario_hash(const ExperimentSpec& spec) {
    // FNV-1a over a canonical text rendering.
    std::ostringstream ss;
    const Scenario& s = spec.scenario;
    ss.precision(17);
    ss << spec.figure_id << '|' << s.lambda_p << ',' << s.lambda_pp << ',' << s.lambda_sp << ','
       << s.lambda_ss << ',' << s.lambda_ps << ',' << s.sigma2 << ',' << s.p_peak << ','
       << s.bandwidth << '|';
    for (double v : spec.lambda_p_sweep) ss << v << ';';
    ss << '|';
    for (double v : spec.p_db_sweep) ss << v << ';';
    ss << '|';
    for (double v : spec.psi_fixed_db_sweep) ss << v << ';';
    ss << '|' << spec.sim.n_samples << ',' << spec.sim.seed << ',' << spec.sim.n_partitions;
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : ss.str()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace dynit
