#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dynit/analytic.hpp"
#include "dynit/distributions.hpp"
#include "dynit/quadrature.hpp"

using namespace dynit;

namespace {

Scenario table_scn(double lambda_p = 2.0, double p_db = 10.0) {
    Scenario s;
    s.lambda_p = lambda_p;
    s.p_peak = db_to_linear(p_db);
    return s;
}

// direct-evaluation oracle for the truncated pmf
double zt_oracle(int k, double lam) {
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    return std::pow(lam, k) * std::exp(-lam) / (fact * (1.0 - std::exp(-lam)));
}

}  // namespace

TEST_CASE("zero-truncated pmf point values") {
    CHECK(zt_poisson_pmf(2, 2.0) == doctest::Approx(0.313).epsilon(2e-4));
    CHECK(zt_poisson_pmf(2, 2.0) == doctest::Approx(zt_oracle(2, 2.0)).epsilon(1e-13));
    CHECK(zt_poisson_pmf(3, 2.0) == doctest::Approx(zt_oracle(3, 2.0)).epsilon(1e-13));
    CHECK(zt_poisson_pmf(3, 2.0) == doctest::Approx(0.208690190332888).epsilon(1e-12));
    CHECK(poisson_pmf(2, 2.0) == doctest::Approx(0.2707).epsilon(2e-4));
    // all truncated mass collapses onto k=1 as the rate vanishes
    CHECK(zt_poisson_pmf(1, 1e-12) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK_THROWS_AS(zt_poisson_pmf(0, 2.0), std::domain_error);
    CHECK_THROWS_AS(zt_poisson_pmf(2, 0.0), std::domain_error);
}

TEST_CASE("pmf normalization and mean") {
    for (double lam : {0.3, 1.0, 2.0, 6.0}) {
        double sum = 0.0, mean = 0.0;
        for (int k = 1; k <= 120; ++k) {
            const double w = zt_poisson_pmf(k, lam);
            sum += w;
            mean += k * w;
        }
        CAPTURE(lam);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(mean == doctest::Approx(zt_poisson_mean(lam)).epsilon(1e-12));
    }
    CHECK(zt_poisson_mean(2.0) == doctest::Approx(2.31303528549933).epsilon(1e-12));
}

TEST_CASE("build_series picks the smallest adequate cutoff") {
    const Scenario scn = table_scn(2.0);
    const TruncatedSeries s = build_series(scn, 1e-12);
    CHECK(s.size() >= 15);
    CHECK(s.size() <= 30);
    CHECK(s.weight_sum() >= 1.0 - 1e-12);
    // smallest-K property: one term fewer would leave too much mass behind
    double tail_km1 = 1.0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) tail_km1 -= s.weights[i];
    CHECK(tail_km1 >= 1e-12);

    const TruncatedSeries s6 = build_series(table_scn(6.0), 1e-12);
    CHECK(s6.size() > s.size());
    CHECK(s6.weight_sum() >= 1.0 - 1e-12);

    const TruncatedSeries tiny = build_series(table_scn(1e-12), 1e-6);
    CHECK(tiny.size() == 1);
    CHECK(tiny.weights[0] == doctest::Approx(1.0).epsilon(1e-6));

    CHECK_THROWS_AS(build_series(table_scn(300.0), 1e-12), std::runtime_error);
    CHECK_THROWS_AS(build_series(scn, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_series(scn, 1e-2), std::invalid_argument);
}

TEST_CASE("series support is alpha_k = e^k - 1") {
    const TruncatedSeries s = build_series(table_scn(2.0), 1e-12);
    for (std::size_t i = 0; i < s.size(); ++i) {
        volatile double k = static_cast<double>(i + 1);  // defeat constant folding
        CHECK(s.alphas[i] == std::expm1(k));
        if (i) CHECK(s.alphas[i] > s.alphas[i - 1]);
        // mixture weights are bit-equal to the pmf
        CHECK(s.weights[i] == zt_poisson_pmf(static_cast<int>(i + 1), 2.0));
        CHECK(s.weights[i] == sinr_pmf(static_cast<int>(i + 1), table_scn(2.0)));
    }
}

TEST_CASE("psi mixture pdf/cdf point values and shape") {
    const Scenario scn = table_scn(2.0);
    const TruncatedSeries series = build_series(scn, 1e-12);
    const MixtureExp mix = make_psi_mixture(scn, series);

    CHECK(psi_pdf(0.5, mix) == doctest::Approx(0.234589977706039).epsilon(1e-10));
    CHECK(psi_pdf(5.0, mix) == doctest::Approx(0.0426806309365292).epsilon(1e-10));
    CHECK(psi_cdf(1.0, mix) == doctest::Approx(0.275427575739909).epsilon(1e-10));
    CHECK(psi_cdf(0.0, mix) == 0.0);
    CHECK(psi_cdf(1e9, mix) == doctest::Approx(1.0).epsilon(1e-11));
    CHECK_THROWS_AS(psi_pdf(0.0, mix), std::domain_error);
    CHECK_THROWS_AS(psi_cdf(-1.0, mix), std::domain_error);

    // pdf at the origin is the weighted rate sum
    double rate_sum = 0.0;
    for (std::size_t i = 0; i < mix.size(); ++i) rate_sum += mix.weights[i] * mix.rates[i];
    CHECK(psi_pdf(1e-300, mix) == doctest::Approx(rate_sum).epsilon(1e-12));

    // strictly decreasing density, nondecreasing distribution
    double fprev = psi_pdf(1e-6, mix), cprev = 0.0;
    for (double x : log_grid(1e-4, 1e3, 60)) {
        const double f = psi_pdf(x, mix);
        const double F = psi_cdf(x, mix);
        CHECK(f < fprev);
        CHECK(F >= cprev);
        fprev = f;
        cprev = F;
    }
}

TEST_CASE("psi normalization (valid density)") {
    for (double lp : {2.0, 4.0, 6.0}) {
        const Scenario scn = table_scn(lp);
        const MixtureExp mix = make_psi_mixture(scn, build_series(scn, 1e-12));
        const auto q =
            integrate_semi_infinite([&](double x) { return psi_pdf(x, mix); }, 1e-10, 0.0, 20000);
        CAPTURE(lp);
        CHECK(std::fabs(q.value - 1.0) <= 1e-9);
    }
}

TEST_CASE("psi cdf/pdf consistency via central differences") {
    const Scenario scn = table_scn(4.0);
    const MixtureExp mix = make_psi_mixture(scn, build_series(scn, 1e-12));
    for (double x : log_grid(1e-2, 50.0, 25)) {
        const double h = 1e-5 * x;
        const double num = (psi_cdf(x + h, mix) - psi_cdf(x - h, mix)) / (2.0 * h);
        CAPTURE(x);
        CHECK(num == doctest::Approx(psi_pdf(x, mix)).epsilon(1e-6));
    }
}

TEST_CASE("higher demand stochastically tightens the threshold") {
    const auto grid = log_grid(1e-3, 1e3, 50);
    double prev_lp = 1.0;
    MixtureExp prev = make_psi_mixture(table_scn(prev_lp), build_series(table_scn(prev_lp), 1e-12));
    for (double lp : {2.0, 4.0, 6.0}) {
        const MixtureExp cur = make_psi_mixture(table_scn(lp), build_series(table_scn(lp), 1e-12));
        for (double x : grid) {
            CAPTURE(lp);
            CAPTURE(x);
            CHECK(psi_cdf(x, cur) >= psi_cdf(x, prev) - 1e-12);
        }
        prev = cur;
        prev_lp = lp;
    }
}

TEST_CASE("median of psi matches the frozen bisection value") {
    const Scenario scn = table_scn(2.0);
    const MixtureExp mix = make_psi_mixture(scn, build_series(scn, 1e-12));
    double lo = 1e-6, hi = 1e3;
    for (int i = 0; i < 200; ++i) {
        const double m = 0.5 * (lo + hi);
        (psi_cdf(m, mix) < 0.5 ? lo : hi) = m;
    }
    CHECK(0.5 * (lo + hi) == doctest::Approx(3.31459419524563).epsilon(1e-9));
}

TEST_CASE("atomic min distribution") {
    const Scenario scn = table_scn(2.0);
    const TruncatedSeries series = build_series(scn, 1e-12);
    const AtomicMin ptx = ptx_distribution(series, scn);
    CHECK(ptx.cdf(scn.p_peak) == 1.0);
    CHECK(ptx.cdf(scn.p_peak * 2) == 1.0);
    CHECK(ptx.cdf(scn.p_peak / 2) == doctest::Approx(cdf_t(scn.p_peak / 2, series, scn)));
    CHECK(ptx.atom_mass() ==
          doctest::Approx(1.0 - cdf_t(scn.p_peak, series, scn)).epsilon(1e-14));
}

TEST_CASE("scenario validation") {
    Scenario s = table_scn();
    CHECK_NOTHROW(s.validate());
    s.lambda_ss = 0.0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = table_scn();
    s.sigma2 = -1.0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    CHECK(db_to_linear(10.0) == doctest::Approx(10.0));
    CHECK(db_to_linear(-10.0) == doctest::Approx(0.1));
    CHECK(linear_to_db(100.0) == doctest::Approx(20.0));
}
