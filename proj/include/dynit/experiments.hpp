#pragma once

#include <string>
#include <vector>

#include "dynit/curve_table.hpp"
#include "dynit/montecarlo.hpp"
#include "dynit/scenario.hpp"

namespace dynit {

inline constexpr const char* kVersion = "0.1.0";

// One figure-reproduction run: which figure, the base scenario, the swept
// parameter lists the figure needs, and the simulation settings.
struct ExperimentSpec {
    std::string figure_id;
    Scenario scenario;                      // unset fields keep the defaults
    std::vector<double> lambda_p_sweep;     // demand rates
    std::vector<double> p_db_sweep;         // peak powers, dB
    std::vector<double> psi_fixed_db_sweep; // fixed thresholds, dB
    SimConfig sim;
    double tail_tol = 1e-12;
    double quad_tol = 1e-8;
    std::string output_path;                // default "<figure_id>.csv"

    void validate() const;                  // known figure, non-empty sweeps
};

const std::vector<std::string>& known_figure_ids();

// Parse a spec from JSON text / file.  Scenario accepts either rate keys
// (lambda_pp, ...) or mean-gain keys (mean_g_pp, ...); power-like values may
// carry a _db suffix and are converted on load.
ExperimentSpec parse_experiment_spec(const std::string& json_text);
ExperimentSpec load_experiment_spec(const std::string& path);

// Produces the analytic and Monte Carlo series for the figure's grid.
CurveTable run_experiment(const ExperimentSpec& spec);

// Convenience: run and write to spec.output_path under out_dir.
std::string run_experiment_to_file(const ExperimentSpec& spec, const std::string& out_dir);

// Monte Carlo mean of ln(1+gamma_s) without materializing the sample set.
double simulate_mean_capacity(const Scenario& scn, const SimConfig& cfg);

std::uint64_t scenario_hash(const ExperimentSpec& spec);

}  // namespace dynit
