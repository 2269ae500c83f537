#include "dynit/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace dynit {

EmpiricalDist::EmpiricalDist(std::vector<double> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) throw std::invalid_argument("EmpiricalDist: needs at least one sample");
    std::sort(samples_.begin(), samples_.end());
    // Kahan over the sorted order keeps the mean deterministic.
    double sum = 0.0, comp = 0.0;
    for (double v : samples_) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    mean_ = sum / static_cast<double>(samples_.size());
}

double EmpiricalDist::ecdf(double x) const {
    const auto it = std::upper_bound(samples_.begin(), samples_.end(), x);
    return static_cast<double>(it - samples_.begin()) / static_cast<double>(samples_.size());
}

double EmpiricalDist::ecdf_strict(double x) const {
    const auto it = std::lower_bound(samples_.begin(), samples_.end(), x);
    return static_cast<double>(it - samples_.begin()) / static_cast<double>(samples_.size());
}

double EmpiricalDist::quantile(double q) const {
    if (q < 0.0 || q > 1.0) throw std::domain_error("EmpiricalDist::quantile: q in [0,1]");
    const auto n = samples_.size();
    const std::size_t i = std::min(n - 1, static_cast<std::size_t>(q * static_cast<double>(n)));
    return samples_[i];
}

double sup_distance(const EmpiricalDist& emp, const std::function<double(double)>& cdf,
                    const std::vector<double>& grid) {
    double sup = 0.0;
    for (double x : grid) sup = std::max(sup, std::fabs(emp.ecdf(x) - cdf(x)));
    return sup;
}

double ks_two_sample(const EmpiricalDist& a, const EmpiricalDist& b) {
    const auto& xa = a.samples();
    const auto& xb = b.samples();
    const double na = static_cast<double>(xa.size());
    const double nb = static_cast<double>(xb.size());
    std::size_t i = 0, j = 0;
    double sup = 0.0;
    while (i < xa.size() && j < xb.size()) {
        const double v = std::min(xa[i], xb[j]);
        while (i < xa.size() && xa[i] == v) ++i;
        while (j < xb.size() && xb[j] == v) ++j;
        sup = std::max(sup, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return sup;
}

ZtPoissonSampler::ZtPoissonSampler(double lambda_p) {
    if (!(lambda_p > 0.0)) throw std::domain_error("ZtPoissonSampler: lambda_p must be > 0");
    const double lam = std::max(lambda_p, kMinLambdaP);
    constexpr int kHardCap = 400;
    double wk = lam * std::exp(-lam) / -std::expm1(-lam);
    double cum = 0.0;
    for (int k = 1; k <= kHardCap; ++k) {
        cum += wk;
        cumulative_.push_back(cum);
        if (k > lam && 1.0 - cum < 1e-15) break;
        wk *= lam / (k + 1);
    }
    cumulative_.back() = std::max(cumulative_.back(), 1.0);  // absorb the 1e-15 tail
}

int ZtPoissonSampler::operator()(double u) const {
    const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
    return static_cast<int>(it - cumulative_.begin()) + 1;
}

int sample_zt_poisson(const SampleRng& rng, unsigned slot, const ZtPoissonSampler& demand) {
    return demand(rng.uniform(slot));
}

ChannelDraw make_draw(const Scenario& scn, const ZtPoissonSampler& demand, std::uint64_t seed,
                      std::uint64_t index, SimRegime regime, double psi_fixed) {
    const SampleRng rng(seed, index);
    ChannelDraw d;
    d.c_demand = sample_zt_poisson(rng, 0, demand);
    d.g_pp = rng.exponential(1, scn.lambda_pp);
    d.g_sp = rng.exponential(2, scn.lambda_sp);
    d.g_ss = rng.exponential(3, scn.lambda_ss);
    d.g_ps = rng.exponential(4, scn.lambda_ps);
    d.gamma_p = std::expm1(static_cast<double>(d.c_demand));
    d.psi = (regime == SimRegime::fixed_it) ? psi_fixed : d.g_pp * scn.p_peak / d.gamma_p;
    const double t = d.psi / d.g_sp;
    d.p_tx = (regime == SimRegime::high_power) ? t : std::min(t, scn.p_peak);
    d.gamma_s = d.p_tx * d.g_ss / (scn.p_peak * d.g_ps + scn.sigma2);
    return d;
}

namespace {

template <class Fn>
void run_partitions(std::uint64_t n_samples, unsigned n_partitions, const Fn& body) {
    if (n_partitions == 0) throw std::invalid_argument("SimConfig: n_partitions must be >= 1");
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned n_threads = std::min({n_partitions, hw, 16u});
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    const std::uint64_t chunk = n_samples / n_partitions;
    const std::uint64_t rem = n_samples % n_partitions;
    std::uint64_t lo = 0;
    for (unsigned part = 0; part < n_partitions; ++part) {
        const std::uint64_t hi = lo + chunk + (part < rem ? 1 : 0);
        ranges.emplace_back(lo, hi);
        lo = hi;
    }
    if (n_threads == 1) {
        for (unsigned part = 0; part < n_partitions; ++part)
            body(part, ranges[part].first, ranges[part].second);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) {
        pool.emplace_back([&, t] {
            for (unsigned part = t; part < n_partitions; part += n_threads)
                body(part, ranges[part].first, ranges[part].second);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

SimResult simulate(const Scenario& scn, const SimConfig& cfg) {
    scn.validate();
    if (cfg.n_samples == 0) throw std::invalid_argument("SimConfig: n_samples must be >= 1");
    const ZtPoissonSampler demand(scn.lambda_p);
    std::vector<double> gam(cfg.n_samples), psi(cfg.n_samples), cap(cfg.n_samples);
    run_partitions(cfg.n_samples, cfg.n_partitions,
                   [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
                       for (std::uint64_t i = lo; i < hi; ++i) {
                           const ChannelDraw d =
                               make_draw(scn, demand, cfg.seed, i, cfg.regime, cfg.psi_fixed);
                           gam[i] = d.gamma_s;
                           psi[i] = d.psi;
                           cap[i] = std::log1p(d.gamma_s);
                       }
                   });
    return SimResult{EmpiricalDist(std::move(gam)), EmpiricalDist(std::move(psi)),
                     EmpiricalDist(std::move(cap))};
}

SlotTrace instantaneous_trace(const Scenario& scn, const SimConfig& cfg, std::size_t n_slots,
                              const std::vector<double>& psi_fixed_values) {
    scn.validate();
    if (n_slots == 0) throw std::invalid_argument("instantaneous_trace: n_slots must be >= 1");
    const ZtPoissonSampler demand(scn.lambda_p);
    SlotTrace trace;
    trace.psi_fixed_values = psi_fixed_values;
    trace.dynamic_capacity.resize(n_slots);
    trace.fixed_capacity.assign(psi_fixed_values.size(), std::vector<double>(n_slots));
    for (std::size_t slot = 0; slot < n_slots; ++slot) {
        const ChannelDraw d =
            make_draw(scn, demand, cfg.seed, slot, SimRegime::general, cfg.psi_fixed);
        trace.dynamic_capacity[slot] = std::log1p(d.gamma_s);
        const double denom = scn.p_peak * d.g_ps + scn.sigma2;
        for (std::size_t f = 0; f < psi_fixed_values.size(); ++f) {
            const double ptx = std::min(psi_fixed_values[f] / d.g_sp, scn.p_peak);
            trace.fixed_capacity[f][slot] = std::log1p(ptx * d.g_ss / denom);
        }
    }
    return trace;
}

}  // namespace dynit
