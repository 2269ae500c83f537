#pragma once

namespace dynit {

// Upper incomplete gamma at zero order, Gamma(0,x) = E1(x) = \int_x^inf e^-t/t dt.
// Power series below x = 1, modified Lentz continued fraction above.
// Relative accuracy ~1e-13 over [1e-12, 700]; underflows to exactly 0 once
// e^-x does.  Throws std::domain_error for x <= 0 (the integral diverges).
double upper_gamma0(double x);

// e^x * Gamma(0,x), overflow-free for x up to ~1e8 and beyond.
// Monotone decreasing, ~ 1/x - 1/x^2 for large x.
double exp_scaled_gamma0(double x);

// ln(k!).  Exact table for k <= 20, Stirling series above.  k >= 0.
double log_factorial(int k);

// d^n/dx^n of exp_scaled_gamma0 in closed form:
//   G'(x) = G(x) - 1/x, and generally G^(n)(x) = G(x) + sum_{j<=n} (-1)^j (j-1)!/x^j.
// Needed by the outage kernel's Taylor branch.
double exp_scaled_gamma0_deriv(double x, int order);

// Stable evaluation of the recurring outage summand shape
//   S(z,d) = ((1+d)*G(z-d) - d/z - G(z)) / d^2,   z > 0, z - d > 0,
// where G = exp_scaled_gamma0.  The numerator vanishes to O(d^2) at d = 0
// (the summand's pole is removable); for |d| <= z/10 the value is computed
// from the Taylor expansion of G about z with the cancelling orders removed
// analytically, keeping full precision through the singular window.
double outage_kernel(double z, double d);

}  // namespace dynit
