#include "dynit/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dynit/quadrature.hpp"
#include "dynit/specfun.hpp"

namespace dynit {

namespace {

// Every outage summand reduces to w_k * b beta mu sigma^4 * S(z, d) with
//   b = eta alpha_k, mu = lambda_ps/p, beta = lambda_ss x/p,
//   d = (mu - b beta) sigma^2 and S the removable-singularity kernel;
// the general regime carries z = (mu+beta) sigma^2 and a factor e^{-beta s2},
// the high-power regime z = mu sigma^2.
double series_sum(double x, const TruncatedSeries& series, const Scenario& scn, Regime regime) {
    const double p = scn.p_peak;
    const double s2 = scn.sigma2;
    const double mu = scn.lambda_ps / p;
    const double beta = scn.lambda_ss * x / p;
    const double eta = scn.eta();
    const double z = (regime == Regime::general) ? (mu + beta) * s2 : mu * s2;
    const double envelope = (regime == Regime::general) ? std::exp(-beta * s2) : 1.0;
    const double common = beta * mu * s2 * s2 * envelope;
    double sum = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double b = eta * series.alphas[i];
        const double d = (mu - b * beta) * s2;
        sum += series.weights[i] * b * common * outage_kernel(z, d);
    }
    return sum;
}

double i2_term(double x, const Scenario& scn) {
    const double beta_s2 = scn.lambda_ss * scn.sigma2 * x / scn.p_peak;
    return scn.lambda_ps * std::exp(-beta_s2) / (scn.lambda_ps + scn.lambda_ss * x);
}

double clamp_cdf(double raw, const char* where) {
    constexpr double eps = 1e-9;
    if (raw < -eps || raw > 1.0 + eps)
        throw ConditioningError(std::string(where) +
                                ": value " + std::to_string(raw) +
                                " outside [0,1] beyond the conditioning policy");
    return std::min(1.0, std::max(0.0, raw));
}

// Transcription kept only for the oracle-rejection protocol: boundary term
// with a plus sign and no x in the cross factor; high-power additionally
// drops the truncated-demand normalization.
double legacy_general(double x, const TruncatedSeries& series, const Scenario& scn) {
    const double p = scn.p_peak;
    const double s2 = scn.sigma2;
    const double lps = scn.lambda_ps;
    const double lss = scn.lambda_ss;
    const double eta = scn.eta();
    const double beta = lss * x / p;
    const double mu = lps / p;
    const double env = std::exp(-beta * s2);
    double sum = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double a = series.alphas[i];
        const double num = lps - eta * a * lss * x;
        const double pre = eta * lps * lss * a * x / (num * num * (lps + lss * x));
        const double braces = (1.0 + (lps - eta * a * lss) * s2 / p) *
                                  exp_scaled_gamma0((eta * a + 1.0) * beta * s2) -
                              exp_scaled_gamma0((mu + beta) * s2);
        const double bracket = env * (num + (lps + lss * x) * braces);
        sum += series.weights[i] * pre * bracket;
    }
    return 1.0 - i2_term(x, scn) + sum;
}

double legacy_high_power(double x, const TruncatedSeries& series, const Scenario& scn) {
    const double p = scn.p_peak;
    const double s2 = scn.sigma2;
    const double lps = scn.lambda_ps;
    const double lss = scn.lambda_ss;
    const double eta = scn.eta();
    const double unnorm = std::exp(scn.lambda_p) - 1.0;  // undoes the w_k normalization
    const double g_mu = exp_scaled_gamma0(lps * s2 / p);
    double sum = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double a = series.alphas[i];
        const double num = lps - eta * a * lss * x;
        const double pre = eta * a * lss * x / (num * num);
        const double bracket = num - lps * g_mu +
                               lps * exp_scaled_gamma0(eta * a * lss * x * s2 / p) *
                                   (1.0 + num * s2 / p);
        sum += unnorm * series.weights[i] * pre * bracket;
    }
    return sum;
}

}  // namespace

double cdf_t(double x, const TruncatedSeries& series, const Scenario& scn) {
    if (x < 0.0) throw std::domain_error("cdf_t: requires x >= 0");
    const double eta = scn.eta();
    double sum = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double bx = eta * series.alphas[i] * x;
        sum += series.weights[i] * bx / (bx + scn.p_peak);
    }
    return sum;
}

double pdf_t(double x, const TruncatedSeries& series, const Scenario& scn) {
    if (!(x > 0.0)) throw std::domain_error("pdf_t: requires x > 0");
    const double eta = scn.eta();
    double sum = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double b = eta * series.alphas[i];
        const double den = b * x + scn.p_peak;
        sum += series.weights[i] * b * scn.p_peak / (den * den);
    }
    return sum;
}

double cdf_ptx(double x, const TruncatedSeries& series, const Scenario& scn) {
    if (x < 0.0) throw std::domain_error("cdf_ptx: requires x >= 0");
    if (x >= scn.p_peak) return 1.0;
    return cdf_t(x, series, scn);
}

AtomicMin ptx_distribution(const TruncatedSeries& series, const Scenario& scn) {
    return AtomicMin{[series, scn](double x) { return cdf_t(x, series, scn); }, scn.p_peak};
}

double cdf_prx(double x, const TruncatedSeries& series, const Scenario& scn) {
    if (x < 0.0) throw std::domain_error("cdf_prx: requires x >= 0");
    if (x == 0.0) return 0.0;
    const double c = scn.lambda_ss * x / scn.p_peak;
    const double env = std::exp(-c);
    const double eta = scn.eta();
    double sum = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double b = eta * series.alphas[i];
        sum += series.weights[i] * b * c * exp_scaled_gamma0((b + 1.0) * c);
    }
    return clamp_cdf(-std::expm1(-c) + env * sum, "cdf_prx");
}

double outage_general(double x, const TruncatedSeries& series, const Scenario& scn,
                      OutageForm form) {
    if (x < 0.0) throw std::domain_error("outage_general: requires x >= 0");
    if (x == 0.0) return 0.0;
    if (form == OutageForm::legacy) return legacy_general(x, series, scn);
    const double raw = 1.0 - i2_term(x, scn) + series_sum(x, series, scn, Regime::general);
    return clamp_cdf(raw, "outage_general");
}

double outage_high_power(double x, const TruncatedSeries& series, const Scenario& scn,
                         OutageForm form) {
    if (x < 0.0) throw std::domain_error("outage_high_power: requires x >= 0");
    if (x == 0.0) return 0.0;
    if (form == OutageForm::legacy) return legacy_high_power(x, series, scn);
    return clamp_cdf(series_sum(x, series, scn, Regime::high_power), "outage_high_power");
}

double survival_general(double x, const TruncatedSeries& series, const Scenario& scn) {
    if (x < 0.0) throw std::domain_error("survival_general: requires x >= 0");
    if (x == 0.0) return 1.0;
    return i2_term(x, scn) - series_sum(x, series, scn, Regime::general);
}

double survival_high_power(double x, const TruncatedSeries& series, const Scenario& scn) {
    if (x < 0.0) throw std::domain_error("survival_high_power: requires x >= 0");
    if (x == 0.0) return 1.0;
    return 1.0 - series_sum(x, series, scn, Regime::high_power);
}

double survival_fixed_it(double x, double psi_fixed, const Scenario& scn) {
    if (x < 0.0) throw std::domain_error("survival_fixed_it: requires x >= 0");
    if (!(psi_fixed > 0.0)) throw std::domain_error("survival_fixed_it: psi_fixed must be > 0");
    if (x == 0.0) return 1.0;
    const double p = scn.p_peak;
    const double W = scn.lambda_sp * psi_fixed;
    const double lssx = scn.lambda_ss * x;
    const double s0 = scn.sigma2 * lssx + W;
    const double arg = s0 * (lssx + scn.lambda_ps) / (p * lssx);
    const double tail = (scn.lambda_ps * W / (p * lssx)) * std::exp(-s0 / p) *
                        exp_scaled_gamma0(arg);
    return -std::expm1(-W / p) * i2_term(x, scn) + tail;
}

double outage_fixed_it(double x, double psi_fixed, const Scenario& scn) {
    if (x == 0.0) return 0.0;
    return clamp_cdf(1.0 - survival_fixed_it(x, psi_fixed, scn), "outage_fixed_it");
}

double capacity_closed_term(const Scenario& scn) {
    const double y_ps = scn.lambda_ps * scn.sigma2 / scn.p_peak;
    const double y_ss = scn.lambda_ss * scn.sigma2 / scn.p_peak;
    if (std::fabs(scn.lambda_ss - scn.lambda_ps) < 1e-9 * scn.lambda_ps) {
        // Removable pole: the limit is 1 - y G(y).
        return 1.0 - y_ps * exp_scaled_gamma0(y_ps);
    }
    return scn.lambda_ps / (scn.lambda_ss - scn.lambda_ps) *
           (exp_scaled_gamma0(y_ps) - exp_scaled_gamma0(y_ss));
}

namespace {

void check_quad_tol(double quad_tol) {
    if (!(quad_tol > 0.0) || quad_tol > 1e-4)
        throw std::invalid_argument("mean_capacity: quad_tol must lie in (0, 1e-4]");
}

}  // namespace

CapacityResult mean_capacity(Regime regime, const TruncatedSeries& series, const Scenario& scn,
                             double quad_tol) {
    check_quad_tol(quad_tol);
    CapacityResult out;
    out.regime = regime;
    if (regime == Regime::general) {
        out.closed_term = capacity_closed_term(scn);
        const auto q = integrate_semi_infinite(
            [&](double x) { return -series_sum(x, series, scn, Regime::general) / (1.0 + x); },
            quad_tol);
        out.quadrature_term = q.value;
        out.quad_abs_err = q.abs_err;
    } else {
        const auto q = integrate_semi_infinite(
            [&](double x) { return survival_high_power(x, series, scn) / (1.0 + x); }, quad_tol);
        out.quadrature_term = q.value;
        out.quad_abs_err = q.abs_err;
    }
    out.mean_capacity = scn.bandwidth * (out.closed_term + out.quadrature_term);
    return out;
}

CapacityResult mean_capacity_direct(Regime regime, const TruncatedSeries& series,
                                    const Scenario& scn, double quad_tol) {
    check_quad_tol(quad_tol);
    auto survival = [&](double x) {
        return regime == Regime::general ? survival_general(x, series, scn)
                                         : survival_high_power(x, series, scn);
    };
    const auto q =
        integrate_semi_infinite([&](double x) { return survival(x) / (1.0 + x); }, quad_tol);
    CapacityResult out;
    out.regime = regime;
    out.quadrature_term = q.value;
    out.quad_abs_err = q.abs_err;
    out.mean_capacity = scn.bandwidth * q.value;
    return out;
}

CapacityResult capacity_fixed_it(double psi_fixed, const Scenario& scn, double quad_tol) {
    check_quad_tol(quad_tol);
    if (!(psi_fixed > 0.0)) throw std::domain_error("capacity_fixed_it: psi_fixed must be > 0");
    const double p = scn.p_peak;
    const double W = scn.lambda_sp * psi_fixed;
    CapacityResult out;
    out.closed_term = -std::expm1(-W / p) * capacity_closed_term(scn);
    const auto q = integrate_semi_infinite(
        [&](double x) {
            const double lssx = scn.lambda_ss * x;
            const double s0 = scn.sigma2 * lssx + W;
            const double arg = s0 * (lssx + scn.lambda_ps) / (p * lssx);
            const double tail = (scn.lambda_ps * W / (p * lssx)) * std::exp(-s0 / p) *
                                exp_scaled_gamma0(arg);
            return tail / (1.0 + x);
        },
        quad_tol);
    out.quadrature_term = q.value;
    out.quad_abs_err = q.abs_err;
    out.mean_capacity = scn.bandwidth * (out.closed_term + out.quadrature_term);
    return out;
}

OutageCurve make_outage_curve(const std::vector<double>& x_grid, const TruncatedSeries& series,
                              const Scenario& scn, Regime regime, OutageForm form) {
    OutageCurve curve;
    curve.x_grid = x_grid;
    curve.regime = regime;
    curve.scenario = scn;
    curve.values.reserve(x_grid.size());
    for (double x : x_grid)
        curve.values.push_back(regime == Regime::general
                                   ? outage_general(x, series, scn, form)
                                   : outage_high_power(x, series, scn, form));
    return curve;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2)
        throw std::invalid_argument("log_grid: requires 0 < lo < hi and n >= 2");
    std::vector<double> g(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                                  static_cast<double>(n - 1));
    return g;
}

}  // namespace dynit
