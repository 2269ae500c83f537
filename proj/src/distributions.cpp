#include "dynit/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "dynit/specfun.hpp"

namespace dynit {

void Scenario::validate() const {
    auto pos = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument(std::string("Scenario: ") + name +
                                        " must be strictly positive and finite");
    };
    pos(lambda_p, "lambda_p");
    pos(lambda_pp, "lambda_pp");
    pos(lambda_sp, "lambda_sp");
    pos(lambda_ss, "lambda_ss");
    pos(lambda_ps, "lambda_ps");
    pos(sigma2, "sigma2");
    pos(p_peak, "p_peak");
    pos(bandwidth, "bandwidth");
}

namespace {
double clamped_lambda(double lambda_p) { return std::max(lambda_p, kMinLambdaP); }
}  // namespace

double zt_poisson_pmf(int k, double lambda_p) {
    if (k < 1)
        throw std::domain_error("zt_poisson_pmf: truncated support excludes k < 1");
    if (!(lambda_p > 0.0)) throw std::domain_error("zt_poisson_pmf: lambda_p must be > 0");
    const double lam = clamped_lambda(lambda_p);
    const double log_norm = std::log(-std::expm1(-lam));  // ln(1 - e^-lam)
    return std::exp(k * std::log(lam) - lam - log_factorial(k) - log_norm);
}

double poisson_pmf(int k, double lambda_p) {
    if (k < 0) throw std::domain_error("poisson_pmf: requires k >= 0");
    if (!(lambda_p > 0.0)) throw std::domain_error("poisson_pmf: lambda_p must be > 0");
    return std::exp(k * std::log(lambda_p) - lambda_p - log_factorial(k));
}

double zt_poisson_mean(double lambda_p) {
    const double lam = clamped_lambda(lambda_p);
    return lam / -std::expm1(-lam);
}

double TruncatedSeries::weight_sum() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

TruncatedSeries build_series(const Scenario& scn, double tail_tol) {
    if (!(tail_tol > 0.0) || tail_tol > 1e-3)
        throw std::invalid_argument("build_series: tail_tol must lie in (0, 1e-3]");
    const double lam = clamped_lambda(scn.lambda_p);
    constexpr int kHardCap = 400;

    // Forward pass: pmf terms up to where they vanish or the cap bites.
    std::vector<double> w;
    w.reserve(64);
    double wk = lam * std::exp(-lam) / -std::expm1(-lam);  // k = 1
    int k = 1;
    while (true) {
        w.push_back(wk);
        const bool negligible = k > lam && wk < tail_tol * 1e-4;
        if (negligible || k == kHardCap) break;
        ++k;
        wk *= lam / k;
    }
    // Backward pass gives exact tail masses without cancellation; the mass
    // beyond the last computed term is covered by a geometric bound.
    std::vector<double> tail_after(w.size() + 1, 0.0);
    const double next = wk * lam / (k + 1);
    tail_after[w.size()] = (lam < k + 2) ? next / (1.0 - lam / (k + 2))
                                         : std::numeric_limits<double>::infinity();
    for (std::size_t i = w.size(); i-- > 0;) tail_after[i] = tail_after[i + 1] + w[i];
    // tail_after[i] = mass of terms with k > i, so pick the smallest valid K.
    TruncatedSeries out;
    std::size_t K = w.size();
    for (std::size_t i = 1; i <= w.size(); ++i) {
        if (tail_after[i] < tail_tol) {
            K = i;
            break;
        }
    }
    if (tail_after[K] >= tail_tol)
        throw std::runtime_error("build_series: cutoff would exceed " +
                                 std::to_string(kHardCap) + " terms (lambda_p=" +
                                 std::to_string(scn.lambda_p) + ")");
    // weights go through the pmf itself so downstream identities are bit-exact
    out.weights.resize(K);
    out.alphas.resize(K);
    for (std::size_t i = 0; i < K; ++i) {
        out.weights[i] = zt_poisson_pmf(static_cast<int>(i + 1), scn.lambda_p);
        out.alphas[i] = std::expm1(static_cast<double>(i + 1));
    }
    out.tail = tail_after[K];
    return out;
}

double sinr_pmf(int k, const Scenario& scn) { return zt_poisson_pmf(k, scn.lambda_p); }

MixtureExp make_psi_mixture(const Scenario& scn, const TruncatedSeries& series) {
    scn.validate();
    MixtureExp mix;
    mix.weights = series.weights;
    mix.rates.resize(series.size());
    for (std::size_t i = 0; i < series.size(); ++i)
        mix.rates[i] = scn.lambda_pp * series.alphas[i] / scn.p_peak;
    return mix;
}

double psi_pdf(double x, const MixtureExp& mix) {
    if (!(x > 0.0)) throw std::domain_error("psi_pdf: requires x > 0");
    double s = 0.0;
    for (std::size_t i = 0; i < mix.size(); ++i)
        s += mix.weights[i] * mix.rates[i] * std::exp(-mix.rates[i] * x);
    return s;
}

double psi_cdf(double x, const MixtureExp& mix) {
    if (x < 0.0) throw std::domain_error("psi_cdf: requires x >= 0");
    double s = 0.0;
    for (std::size_t i = 0; i < mix.size(); ++i)
        s += mix.weights[i] * -std::expm1(-mix.rates[i] * x);
    return s;
}

double AtomicMin::cdf(double x) const {
    if (x >= atom_location) return 1.0;
    return continuous_cdf(x);
}

double AtomicMin::atom_mass() const { return 1.0 - continuous_cdf(atom_location); }

}  // namespace dynit
