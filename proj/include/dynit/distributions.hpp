#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "dynit/scenario.hpp"

namespace dynit {

// Demand rates below this are clamped to keep the zero-truncated
// normalization 1 - e^-lambda away from 0/0.
inline constexpr double kMinLambdaP = 1e-9;

// Zero-truncated Poisson pmf, k >= 1:
//   P(k) = lambda^k e^-lambda / (k! (1 - e^-lambda)).
// Throws std::domain_error for k = 0 (the truncated support excludes zero).
double zt_poisson_pmf(int k, double lambda_p);

// Plain Poisson pmf, k >= 0 (reference series for the truncation comparison).
double poisson_pmf(int k, double lambda_p);

// Mean of the zero-truncated law, lambda / (1 - e^-lambda).
double zt_poisson_mean(double lambda_p);

// Finite realization of the demand series: weights w_k = zt_poisson_pmf(k)
// and support points alpha_k = e^k - 1 for k = 1..K, with K the smallest
// cutoff whose tail mass is below tail_tol.
struct TruncatedSeries {
    std::vector<double> weights;  // w_1..w_K
    std::vector<double> alphas;   // e^1-1 .. e^K-1, strictly increasing
    double tail = 0.0;            // mass beyond K at construction

    std::size_t size() const { return weights.size(); }
    double weight_sum() const;
};

// tail_tol must lie in (0, 1e-3]; throws std::runtime_error if the cutoff
// would exceed 400 terms (pathological lambda_p).
TruncatedSeries build_series(const Scenario& scn, double tail_tol = 1e-12);

// Probability that the PU SINR equals alpha_k = e^k - 1; identical to
// zt_poisson_pmf(k, scn.lambda_p).
double sinr_pmf(int k, const Scenario& scn);

// Interference-plus-noise threshold psi as a mixture of exponentials:
// component rates lambda_pp * alpha_k / p with the series weights.
struct MixtureExp {
    std::vector<double> rates;
    std::vector<double> weights;

    std::size_t size() const { return rates.size(); }
};

MixtureExp make_psi_mixture(const Scenario& scn, const TruncatedSeries& series);

// f_psi(x) = sum w_k r_k e^{-r_k x}; strictly positive and decreasing.
// Throws std::domain_error for x <= 0.
double psi_pdf(double x, const MixtureExp& mix);

// F_psi(x) = sum w_k (1 - e^{-r_k x}); 0 at 0, -> 1 - tail.  x >= 0.
double psi_cdf(double x, const MixtureExp& mix);

// min(T, atom_location) for a continuous T: the CDF follows continuous_cdf
// below the atom and jumps to exactly 1 there, concentrating the mass
// 1 - F_T(atom^-) in a point.
struct AtomicMin {
    std::function<double(double)> continuous_cdf;
    double atom_location = 0.0;

    double cdf(double x) const;
    double atom_mass() const;
};

}  // namespace dynit
