#include "dynit/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace dynit {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;  // 20 digits
constexpr double kTiny = 1e-300;

// E1(x) = -gamma - ln x + sum_{n>=1} (-1)^{n+1} x^n / (n n!),  for x < 1.
double e1_series(double x) {
    double sum = 0.0;
    double term = 1.0;  // x^n / n! carrier
    for (int n = 1; n <= 60; ++n) {
        term *= x / n;
        const double inc = ((n & 1) ? term : -term) / n;
        sum += inc;
        if (std::fabs(inc) < std::fabs(sum) * 1e-18) break;
    }
    return -kEulerGamma - std::log(x) + sum;
}

// Modified Lentz evaluation of the continued fraction
//   e^x E1(x) = 1/(x+1- 1/(x+3- 4/(x+5- 9/(x+7- ...)))),  for x >= 1.
double scaled_e1_cf(double x) {
    double b = x + 1.0;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 200; ++i) {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = a * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + a / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) <= std::numeric_limits<double>::epsilon()) return h;
    }
    throw std::runtime_error("exp_scaled_gamma0: continued fraction failed to converge at x=" +
                             std::to_string(x));
}

struct LogFactTable {
    std::array<double, 21> v{};
    LogFactTable() {
        unsigned long long f = 1;  // 20! < 2^63
        v[0] = 0.0;
        for (int k = 1; k <= 20; ++k) {
            f *= static_cast<unsigned long long>(k);
            v[k] = std::log(static_cast<double>(f));
        }
    }
};

}  // namespace

double upper_gamma0(double x) {
    if (!(x > 0.0)) throw std::domain_error("upper_gamma0: requires x > 0");
    if (x < 1.0) return e1_series(x);
    return std::exp(-x) * scaled_e1_cf(x);  // underflows to 0 for x > ~745
}

double exp_scaled_gamma0(double x) {
    if (!(x > 0.0)) throw std::domain_error("exp_scaled_gamma0: requires x > 0");
    if (x < 1.0) return std::exp(x) * e1_series(x);
    return scaled_e1_cf(x);
}

double log_factorial(int k) {
    if (k < 0) throw std::domain_error("log_factorial: requires k >= 0");
    static const LogFactTable table;
    if (k <= 20) return table.v[static_cast<std::size_t>(k)];
    // Stirling series; error < 1e-16 relative for k > 20.
    const double n = k;
    const double n2 = n * n;
    return (n + 0.5) * std::log(n) - n + 0.9189385332046727417803297  // ln sqrt(2 pi)
           + (1.0 / 12.0) / n - (1.0 / 360.0) / (n * n2) + (1.0 / 1260.0) / (n * n2 * n2);
}

double exp_scaled_gamma0_deriv(double x, int order) {
    if (order < 0) throw std::domain_error("exp_scaled_gamma0_deriv: order >= 0");
    double v = exp_scaled_gamma0(x);
    double t = 1.0;  // (-1)^j (j-1)! / x^j
    for (int j = 1; j <= order; ++j) {
        t *= -static_cast<double>(j == 1 ? 1 : j - 1) / x;
        v += t;
    }
    return v;
}

double outage_kernel(double z, double d) {
    if (!(z > 0.0) || !(z - d > 0.0))
        throw std::domain_error("outage_kernel: requires z > 0 and z - d > 0");
    if (std::fabs(d) > 0.1 * z) {
        const double g = exp_scaled_gamma0(z);
        const double gm = exp_scaled_gamma0(z - d);
        return ((1.0 + d) * gm - d / z - g) / (d * d);
    }
    // Taylor branch: numerator = sum_{m>=2} (-d)^m [G^(m)(z)/m! - G^(m-1)(z)/(m-1)!]
    // (orders 0 and 1 cancel exactly via G'(z) = G(z) - 1/z).
    const double g = exp_scaled_gamma0(z);
    double c_prev = g - 1.0 / z;        // G^(1)(z)
    double t = -1.0 / z;                // (-1)^j (j-1)!/z^j at j=1
    double fact_prev = 1.0;             // (m-1)!
    double dpow = 1.0;                  // (-d)^m / d^2 carrier, starts at m=2
    double sum = 0.0;
    for (int m = 2; m <= 40; ++m) {
        t *= -static_cast<double>(m - 1) / z;
        const double c_m = c_prev + t;  // G^(m)(z)
        const double fact_m = fact_prev * m;
        const double coef = c_m / fact_m - c_prev / fact_prev;
        const double inc = dpow * coef;  // dpow = (-d)^(m-2) at this point
        sum += inc;
        if (std::fabs(inc) < std::fabs(sum) * 1e-18 && m > 5) break;
        c_prev = c_m;
        fact_prev = fact_m;
        dpow *= -d;
    }
    return sum;
}

}  // namespace dynit
