#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "dynit/specfun.hpp"

using namespace dynit;

namespace {

// Independent oracle: adaptive Simpson of int_x^inf e^-t/t dt, written
// against the definition only (no series / continued fraction).
double simpson(double (*f)(double), double a, double b, double fa, double fb, double fm,
               double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth > 40 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson(f, a, m, fa, fm, flm, tol / 2, depth + 1) +
           simpson(f, m, b, fm, fb, frm, tol / 2, depth + 1);
}

double integrand(double t) { return std::exp(-t) / t; }

double e1_oracle(double x) {
    // cut the tail where e^-t is far below the target accuracy
    const double hi = std::max(x + 60.0, 60.0);
    const double m = 0.5 * (x + hi);
    return simpson(integrand, x, hi, integrand(x), integrand(hi), integrand(m), 1e-15, 0);
}

}  // namespace

TEST_CASE("upper_gamma0 against the quadrature oracle") {
    CHECK(e1_oracle(1.0) == doctest::Approx(0.21938393439552027).epsilon(1e-11));
    CHECK(upper_gamma0(1.0) == doctest::Approx(0.21938393439552027).epsilon(1e-12));
    CHECK(upper_gamma0(0.5) == doctest::Approx(0.55977359477616081).epsilon(1e-12));
    CHECK(upper_gamma0(2.0) == doctest::Approx(0.04890051070806112).epsilon(1e-12));
    CHECK(upper_gamma0(10.0) == doctest::Approx(4.1569689296853243e-6).epsilon(1e-12));
    for (double x : {0.03, 0.4, 1.7, 4.0, 25.0}) {
        CAPTURE(x);
        CHECK(upper_gamma0(x) == doctest::Approx(e1_oracle(x)).epsilon(2e-12));
    }
    // deep series / deep tail ends of the contract range
    CHECK(upper_gamma0(1e-6) == doctest::Approx(13.238295893062491).epsilon(1e-12));
    CHECK(upper_gamma0(1e-12) == doctest::Approx(27.053805451028015).epsilon(1e-12));
    CHECK(upper_gamma0(700.0) == doctest::Approx(1.4065187662340329e-307).epsilon(1e-11));
}

TEST_CASE("upper_gamma0 limits and domain") {
    CHECK(upper_gamma0(800.0) == 0.0);  // e^-x underflow
    CHECK(upper_gamma0(1e-10) > upper_gamma0(1e-9));
    CHECK_THROWS_AS(upper_gamma0(0.0), std::domain_error);
    CHECK_THROWS_AS(upper_gamma0(-1.0), std::domain_error);
}

TEST_CASE("derivative identity d/dx Gamma(0,x) = -e^-x/x") {
    for (int i = 0; i <= 40; ++i) {
        const double x = std::pow(10.0, -6.0 + 8.0 * i / 40.0);  // 1e-6 .. 1e2
        const double h = 1e-5 * x;
        const double num = (upper_gamma0(x + h) - upper_gamma0(x - h)) / (2.0 * h);
        const double exact = -std::exp(-x) / x;
        CAPTURE(x);
        CHECK(num == doctest::Approx(exact).epsilon(1e-6));
    }
}

TEST_CASE("series / continued-fraction crossover is seamless") {
    const double delta = 1e-13;
    const double left = upper_gamma0(1.0 - delta);
    const double right = upper_gamma0(1.0 + delta);
    CHECK(std::fabs(left - right) / left < 1e-12);
}

TEST_CASE("exp_scaled_gamma0") {
    CHECK(exp_scaled_gamma0(1.0) == doctest::Approx(0.59634736232319407).epsilon(1e-12));
    CHECK(exp_scaled_gamma0(100.0) == doctest::Approx(0.0099019422867330184).epsilon(1e-12));
    CHECK(exp_scaled_gamma0(1e8) == doctest::Approx(9.999999900000002e-9).epsilon(1e-12));
    CHECK(exp_scaled_gamma0(0.01) == doctest::Approx(4.0785114434564258).epsilon(1e-12));
    CHECK_THROWS_AS(exp_scaled_gamma0(0.0), std::domain_error);

    // consistency with the unscaled form wherever e^-x does not underflow
    for (double x : {1e-6, 0.01, 0.3, 1.0, 3.0, 30.0, 300.0}) {
        CAPTURE(x);
        CHECK(exp_scaled_gamma0(x) * std::exp(-x) ==
              doctest::Approx(upper_gamma0(x)).epsilon(1e-12));
    }
    // monotone decreasing, positive, bounded by -ln(x) e^x for small x
    double prev = exp_scaled_gamma0(1e-9);
    for (double x : {1e-6, 1e-3, 0.1, 1.0, 10.0, 1e4, 1e8}) {
        const double g = exp_scaled_gamma0(x);
        CHECK(g > 0.0);
        CHECK(g < prev);
        prev = g;
        if (x < 0.5) CHECK(g < -std::log(x) * std::exp(x));
    }
    // leading 1/x behavior at the far end
    for (double x : {1e4, 1e6, 1e8}) CHECK(std::fabs(x * exp_scaled_gamma0(x) - 1.0) < 2.0 / x);
}

TEST_CASE("log_factorial") {
    CHECK(log_factorial(0) == 0.0);
    CHECK(log_factorial(1) == 0.0);
    CHECK(log_factorial(5) == doctest::Approx(4.787491742782046).epsilon(1e-15));
    CHECK(log_factorial(20) == doctest::Approx(42.33561646075348503).epsilon(1e-14));
    CHECK(log_factorial(21) == doctest::Approx(45.380138898476908026).epsilon(1e-14));
    CHECK(log_factorial(100) == doctest::Approx(363.73937555556349014).epsilon(1e-14));
    CHECK(log_factorial(400) == doctest::Approx(2000.5006979832413891).epsilon(1e-14));
    CHECK_THROWS_AS(log_factorial(-1), std::domain_error);

    // long-double cumulative-log oracle across the hard cap range
    long double acc = 0.0L;
    for (int k = 1; k <= 400; ++k) {
        acc += std::log(static_cast<long double>(k));
        CAPTURE(k);
        CHECK(log_factorial(k) == doctest::Approx(static_cast<double>(acc)).epsilon(1e-14));
    }
}

TEST_CASE("exp_scaled_gamma0_deriv closed form matches finite differences") {
    for (double z : {0.05, 0.7, 3.0, 40.0}) {
        const double h = 1e-6 * z;
        const double fd =
            (exp_scaled_gamma0(z + h) - exp_scaled_gamma0(z - h)) / (2.0 * h);
        CAPTURE(z);
        CHECK(exp_scaled_gamma0_deriv(z, 1) == doctest::Approx(fd).epsilon(1e-7));
        CHECK(exp_scaled_gamma0_deriv(z, 0) == exp_scaled_gamma0(z));
    }
}

TEST_CASE("outage_kernel branches agree where both are accurate") {
    for (double z : {0.03, 0.5, 2.0, 50.0}) {
        // inside the Taylor window but with enough d for a clean direct value
        for (double frac : {0.05, 0.08, -0.05, -0.08}) {
            const double d = frac * z;
            const double g = exp_scaled_gamma0(z);
            const double gm = exp_scaled_gamma0(z - d);
            const double direct = ((1.0 + d) * gm - d / z - g) / (d * d);
            CAPTURE(z);
            CAPTURE(frac);
            CHECK(outage_kernel(z, d) == doctest::Approx(direct).epsilon(1e-8));
        }
        // continuity across the window boundary
        const double lo = outage_kernel(z, 0.0999 * z);
        const double hi = outage_kernel(z, 0.1001 * z);
        CHECK(std::fabs(lo - hi) <= 1e-3 * std::fabs(lo) + 1e-14);
    }
}

TEST_CASE("outage_kernel near and at the removable singularity") {
    for (double z : {0.1, 1.0, 10.0}) {
        const double at0 = outage_kernel(z, 0.0);
        CHECK(std::isfinite(at0));
        // smooth approach from both sides
        double prev = at0;
        for (double d : {1e-12, 1e-9, 1e-6, 1e-4}) {
            const double v = outage_kernel(z, d * z);
            CHECK(std::fabs(v - at0) < std::fabs(at0) * (100.0 * d + 1e-12) + 1e-15);
            prev = v;
        }
        (void)prev;
    }
    CHECK_THROWS_AS(outage_kernel(-1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(outage_kernel(1.0, 1.5), std::domain_error);  // z - d <= 0
}
