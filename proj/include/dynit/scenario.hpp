#pragma once

#include <cmath>

namespace dynit {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double v) { return 10.0 * std::log10(v); }

// Full parameter set of an underlay link: Poisson demand rate at the primary,
// exponential rate parameters of the four Rayleigh channel power gains
// (rate = 1 / mean gain), noise variance and the common peak transmit power.
struct Scenario {
    double lambda_p = 2.0;          // demand rate (dimensionless)
    double lambda_pp = 1.0 / 4.0;   // PU-Tx -> PU-Rx
    double lambda_sp = 1.0 / 2.0;   // SU-Tx -> PU-Rx
    double lambda_ss = 1.0 / 5.0;   // SU-Tx -> SU-Rx
    double lambda_ps = 1.0 / 3.3;   // PU-Tx -> SU-Rx
    double sigma2 = 1.0;            // AWGN variance
    double p_peak = 10.0;           // peak transmit power, linear
    double bandwidth = 1.0;         // Hz

    double eta() const { return lambda_pp / lambda_sp; }

    Scenario with_lambda_p(double lp) const {
        Scenario s = *this;
        s.lambda_p = lp;
        return s;
    }
    Scenario with_p_peak_db(double db) const {
        Scenario s = *this;
        s.p_peak = db_to_linear(db);
        return s;
    }

    // Throws std::invalid_argument unless every field is strictly positive
    // and finite (which also makes eta finite and positive).
    void validate() const;
};

}  // namespace dynit
