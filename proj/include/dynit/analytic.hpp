#pragma once

#include <stdexcept>
#include <vector>

#include "dynit/distributions.hpp"
#include "dynit/scenario.hpp"

namespace dynit {

// Two self-consistent transcriptions of the closed-form outage circulate in
// our derivation notes; they differ in the sign of a boundary term and in an
// x factor inside the cross term (the high-power version additionally in the
// truncated-demand normalization).  `derived` is the independently re-derived
// form; `legacy` is kept solely so the simulation oracle can reject it.
enum class OutageForm { derived, legacy };

enum class Regime { general, high_power };

// CDF of t = psi / g_sp:  F_T(x) = sum w_k eta alpha_k x / (eta alpha_k x + p).
double cdf_t(double x, const TruncatedSeries& series, const Scenario& scn);

// Density of t:  f_T(x) = sum w_k eta alpha_k p / (eta alpha_k x + p)^2.
// Throws std::domain_error for x <= 0.
double pdf_t(double x, const TruncatedSeries& series, const Scenario& scn);

// CDF of P_tx = min(t, p): follows cdf_t below the peak, exactly 1 at and
// above it (atom of mass 1 - F_T(p^-) at p).
double cdf_ptx(double x, const TruncatedSeries& series, const Scenario& scn);
AtomicMin ptx_distribution(const TruncatedSeries& series, const Scenario& scn);

// CDF of the received power P_rx = P_tx * g_ss.
double cdf_prx(double x, const TruncatedSeries& series, const Scenario& scn);

// Outage probability (CDF of the SU SINR) with peak power adaptation.
// The raw value is asserted within [-1e-9, 1+1e-9] before clamping to [0,1];
// a violation raises ConditioningError.  The legacy form is returned raw.
double outage_general(double x, const TruncatedSeries& series, const Scenario& scn,
                      OutageForm form = OutageForm::derived);

// Outage probability when the transmit power is always t = psi / g_sp.
double outage_high_power(double x, const TruncatedSeries& series, const Scenario& scn,
                         OutageForm form = OutageForm::derived);

// 1 - outage, evaluated without forming the difference (exponentially small
// tails stay accurate); derived form only.
double survival_general(double x, const TruncatedSeries& series, const Scenario& scn);
double survival_high_power(double x, const TruncatedSeries& series, const Scenario& scn);

// Outage of the fixed-threshold baseline (psi degenerate at psi_fixed,
// P_tx = min(psi_fixed / g_sp, p)).
double outage_fixed_it(double x, double psi_fixed, const Scenario& scn);
double survival_fixed_it(double x, double psi_fixed, const Scenario& scn);

class ConditioningError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct CapacityResult {
    double mean_capacity = 0.0;     // (nats/s)/Hz, bandwidth-scaled
    double closed_term = 0.0;       // part evaluated in closed form
    double quadrature_term = 0.0;   // numerically integrated remainder
    double quad_abs_err = 0.0;      // error estimate of the quadrature
    Regime regime = Regime::general;
};

// Mean SU capacity E[ln(1 + gamma_s)] = B * int_0^inf (1-F(x))/(1+x) dx.
// General regime: closed leading term (with the analytic limit at
// lambda_ss == lambda_ps) plus adaptive quadrature of the series remainder.
// High-power regime: fully numeric.  quad_tol must lie in (0, 1e-4].
CapacityResult mean_capacity(Regime regime, const TruncatedSeries& series, const Scenario& scn,
                             double quad_tol = 1e-8);

// Same via direct quadrature of the survival function; cross-checks the
// closed/numeric decomposition against the defining integral.
CapacityResult mean_capacity_direct(Regime regime, const TruncatedSeries& series,
                                    const Scenario& scn, double quad_tol = 1e-8);

// Mean capacity of the fixed-threshold baseline.
CapacityResult capacity_fixed_it(double psi_fixed, const Scenario& scn, double quad_tol = 1e-8);

// Closed-form leading term of the general-regime capacity (exposed for the
// decomposition cross-check).
double capacity_closed_term(const Scenario& scn);

// Tabulated outage curve on an x grid.
struct OutageCurve {
    std::vector<double> x_grid;
    std::vector<double> values;
    Regime regime = Regime::general;
    Scenario scenario;
};

OutageCurve make_outage_curve(const std::vector<double>& x_grid, const TruncatedSeries& series,
                              const Scenario& scn, Regime regime,
                              OutageForm form = OutageForm::derived);

std::vector<double> log_grid(double lo, double hi, std::size_t n);

}  // namespace dynit
