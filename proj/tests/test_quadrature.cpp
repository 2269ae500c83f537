#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dynit/quadrature.hpp"

using namespace dynit;

TEST_CASE("polynomials and smooth integrands") {
    auto sq = [](double x) { return x * x; };
    const auto r = integrate_adaptive(sq, 0.0, 1.0, 1e-12);
    CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(r.abs_err <= 1e-12);

    const auto s = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12);
    CHECK(s.value == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("semi-infinite map") {
    const auto e = integrate_semi_infinite([](double x) { return std::exp(-x); }, 1e-12);
    CHECK(e.value == doctest::Approx(1.0).epsilon(1e-12));

    const auto g = integrate_semi_infinite([](double x) { return std::exp(-x * x); }, 1e-12);
    CHECK(g.value == doctest::Approx(0.88622692545275801).epsilon(1e-12));  // sqrt(pi)/2

    const auto c = integrate_semi_infinite(
        [](double x) { return 1.0 / ((1.0 + x) * (1.0 + x)); }, 1e-12);
    CHECK(c.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("adaptive refinement resolves sharp exponential scales") {
    // mass concentrated within ~1e-6 of the origin
    const double rate = 1e6;
    const auto r =
        integrate_semi_infinite([rate](double x) { return rate * std::exp(-rate * x); }, 1e-10,
                                0.0, 20000);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("failure reports the offending subinterval") {
    bool threw = false;
    try {
        integrate_adaptive([](double x) { return 1.0 / std::sqrt(std::fabs(x - 0.3)); }, 0.0,
                           1.0, 1e-14, 0.0, 8);
    } catch (const QuadratureError& e) {
        threw = true;
        CHECK(e.lo >= 0.0);
        CHECK(e.hi <= 1.0);
        CHECK(e.lo < e.hi);
    }
    CHECK(threw);
}
