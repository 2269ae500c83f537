#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dynit/distributions.hpp"
#include "dynit/rng.hpp"
#include "dynit/scenario.hpp"

namespace dynit {

// Sorted sample set with empirical CDF queries.
class EmpiricalDist {
  public:
    explicit EmpiricalDist(std::vector<double> samples);

    std::size_t size() const { return samples_.size(); }
    const std::vector<double>& samples() const { return samples_; }
    double ecdf(double x) const;           // P(sample <= x)
    double ecdf_strict(double x) const;    // P(sample <  x)
    double mean() const { return mean_; }
    double quantile(double q) const;

  private:
    std::vector<double> samples_;
    double mean_ = 0.0;
};

// max over the grid of |ecdf(x) - cdf(x)|.
double sup_distance(const EmpiricalDist& emp, const std::function<double(double)>& cdf,
                    const std::vector<double>& grid);

// Exact two-sample Kolmogorov-Smirnov statistic.
double ks_two_sample(const EmpiricalDist& a, const EmpiricalDist& b);

enum class SimRegime { general, high_power, fixed_it };

struct SimConfig {
    std::uint64_t n_samples = 1'000'000;
    std::uint64_t seed = 424243;
    unsigned n_partitions = 8;
    SimRegime regime = SimRegime::general;
    double psi_fixed = 1.0;  // threshold when regime == fixed_it
};

// Inverse-CDF sampler for the zero-truncated Poisson demand, using a cached
// cumulative table (exact and branch-free for the small rates in play).
class ZtPoissonSampler {
  public:
    explicit ZtPoissonSampler(double lambda_p);
    int operator()(double u) const;  // u in (0,1)
    int max_value() const { return static_cast<int>(cumulative_.size()); }

  private:
    std::vector<double> cumulative_;
};

// One draw of the full chain, reproducible from (seed, index) alone.
struct ChannelDraw {
    double g_pp, g_sp, g_ss, g_ps;
    int c_demand;
    double gamma_p;  // e^c - 1
    double psi;      // g_pp p / gamma_p  (or the fixed threshold)
    double p_tx;     // min(psi/g_sp, p)  (no min in the high-power regime)
    double gamma_s;  // p_tx g_ss / (p g_ps + sigma2)
};

ChannelDraw make_draw(const Scenario& scn, const ZtPoissonSampler& demand, std::uint64_t seed,
                      std::uint64_t index, SimRegime regime, double psi_fixed = 1.0);

int sample_zt_poisson(const SampleRng& rng, unsigned slot, const ZtPoissonSampler& demand);

struct SimResult {
    EmpiricalDist gamma_s;
    EmpiricalDist psi;
    EmpiricalDist capacity;  // ln(1 + gamma_s) per draw
};

// Partition-parallel simulation with a deterministic merge: sample values
// depend only on (seed, global index), partial means reduce in partition
// order.
SimResult simulate(const Scenario& scn, const SimConfig& cfg);

// Per-slot capacities under common random numbers: one demand/channel draw
// per slot shared by the dynamic threshold and every fixed baseline.
struct SlotTrace {
    std::vector<double> dynamic_capacity;               // [n_slots]
    std::vector<std::vector<double>> fixed_capacity;    // [baseline][n_slots]
    std::vector<double> psi_fixed_values;
};

SlotTrace instantaneous_trace(const Scenario& scn, const SimConfig& cfg, std::size_t n_slots,
                              const std::vector<double>& psi_fixed_values);

}  // namespace dynit
