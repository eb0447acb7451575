#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "hypercs/measure.hpp"
#include "hypercs/quadrature.hpp"
#include "hypercs/specfun.hpp"

using namespace hypercs;
using std::complex;

namespace {
const ModelParams kCanonical{{}, {}};
const ModelParams kWorked{{1.0}, {1.5}};
const ModelParams kBessel{{}, {2.0}};
}  // namespace

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(kWorked.validate());
    CHECK_THROWS_AS(ModelParams({0.0}, {1.0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams({1.0}, {-2.0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams({std::nan("")}, {}).validate(), std::invalid_argument);
}

TEST_CASE("series domain policy") {
    CHECK(series_entire(kCanonical));
    CHECK(series_entire(kWorked));
    CHECK_FALSE(series_entire(ModelParams{{1.0, 1.0}, {1.0}}));
    CHECK_NOTHROW(check_series_argument(kCanonical, 1e6));
    CHECK_NOTHROW(check_series_argument(ModelParams{{1.0, 1.0}, {1.0}}, 0.5));
    CHECK_THROWS_AS(check_series_argument(ModelParams{{1.0, 1.0}, {1.0}}, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(check_series_argument(ModelParams{{1.0, 1.0, 1.0}, {1.0}}, 0.1),
                    std::domain_error);
    CHECK_NOTHROW(check_series_argument(ModelParams{{1.0, 1.0, 1.0}, {1.0}}, 0.0));
    CHECK_THROWS_AS(check_series_argument(kCanonical, INFINITY), std::domain_error);
}

TEST_CASE("gamma against the standard library") {
    for (double x : {0.1, 0.5, 1.0, 1.5, 2.0, 3.7, 10.2, 56.0}) {
        CAPTURE(x);
        CHECK(gamma_fn(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-13));
    }
    // near the top of the double range the log-space route costs a few digits
    CHECK(gamma_fn(171.0) == doctest::Approx(std::tgamma(171.0)).epsilon(1e-11));
    // reflection side
    CHECK(gamma_fn(-0.5) == doctest::Approx(std::tgamma(-0.5)).epsilon(1e-13));
    CHECK(gamma_fn(-1.5) == doctest::Approx(std::tgamma(-1.5)).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-3.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(172.0), std::overflow_error);
}

TEST_CASE("log gamma on the line and in the plane") {
    for (double x : {0.3, 1.0, 5.5, 120.0})
        CHECK(std::exp(log_gamma(x)) == doctest::Approx(std::tgamma(x)).epsilon(1e-13));
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(complex<double>(-2.0, 0.0)), std::domain_error);

    // |Gamma(1/2 + it)|^2 = pi / cosh(pi t)
    for (double t : {0.5, 3.0, 10.0}) {
        CAPTURE(t);
        const double mag2 = std::norm(std::exp(log_gamma(complex<double>(0.5, t))));
        CHECK(mag2 == doctest::Approx(M_PI / std::cosh(M_PI * t)).epsilon(1e-12));
    }
    // recurrence Gamma(z+1) = z Gamma(z) off the axis
    const complex<double> z{0.8, 2.3};
    const complex<double> lhs = std::exp(log_gamma(z + 1.0));
    const complex<double> rhs = z * std::exp(log_gamma(z));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(1.0, 0) == 1.0);
    CHECK(pochhammer(1.5, 1) == 1.5);
    CHECK(pochhammer(0.5, 3) == 1.875);
    CHECK_THROWS_AS(pochhammer(0.0, 2), std::domain_error);
    CHECK_THROWS_AS(pochhammer(-2.0, 3), std::domain_error);
    CHECK_THROWS_AS(pochhammer(1.0, -1), std::invalid_argument);
}

TEST_CASE("gamma ratio prefactor") {
    CHECK(gamma_ratio(kCanonical) == 1.0);
    CHECK(gamma_ratio(kWorked) == doctest::Approx(1.1283791670955126).epsilon(1e-14));
    CHECK(gamma_ratio(ModelParams{{2.0}, {1.0}}) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("series evaluation") {
    CHECK(pfq(kCanonical, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
    CHECK(pfq(kWorked, 0.0) == 1.0);
    CHECK(pfq(kBessel, 0.0) == 1.0);
    // 2F1(1,1;1;x) is the geometric series
    CHECK(pfq(ModelParams{{1.0, 1.0}, {1.0}}, 0.5) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK_THROWS_AS(pfq(ModelParams{{1.0, 1.0}, {1.0}}, 1.5), std::domain_error);
    CHECK_THROWS_AS(pfq(kCanonical, 1.0, 1e-15, 3), ConvergenceError);

    const complex<double> ei = pfq(kCanonical, complex<double>(0.0, 1.0));
    CHECK(ei.real() == doctest::Approx(std::cos(1.0)).epsilon(1e-14));
    CHECK(ei.imag() == doctest::Approx(std::sin(1.0)).epsilon(1e-14));
}

TEST_CASE("series terms match the pochhammer form") {
    // term n of pFq(x) is x^n prod (a_i)_n / (prod (b_j)_n n!): summing that
    // directly is an independent route to the running-ratio recurrence.
    for (const ModelParams& params : {kWorked, kBessel, ModelParams{{2.2}, {0.7, 3.1}}}) {
        for (double x : {0.3, 1.0, 2.5}) {
            CAPTURE(x);
            double direct = 0.0;
            for (int n = 0; n < 200; ++n) {
                double term = std::pow(x, n) / std::tgamma(n + 1.0);
                for (double a : params.upper) term *= pochhammer(a, n);
                for (double b : params.lower) term /= pochhammer(b, n);
                direct += term;
                if (term < 1e-18 * direct && n > 4) break;
            }
            CHECK(pfq(params, x) == doctest::Approx(direct).epsilon(1e-12));
        }
    }
    // and the published ratio itself
    for (int n : {0, 1, 5, 17}) {
        const double expected = (1.0 + n) / ((1.5 + n) * (n + 1.0));
        CHECK(pfq_term_ratio(kWorked, n) == doctest::Approx(expected).epsilon(1e-15));
    }
}

TEST_CASE("series stays at or above one for non-negative arguments") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> par(0.2, 4.0);
    std::uniform_real_distribution<double> arg(0.0, 6.0);
    for (int trial = 0; trial < 40; ++trial) {
        const ModelParams params{{par(rng)}, {par(rng), par(rng)}};
        const double x = arg(rng);
        CAPTURE(x);
        CHECK(pfq(params, x) >= 1.0);
    }
}

TEST_CASE("truncated series") {
    CHECK(pfq_truncated(kWorked, 0.7, 0) == 1.0);
    CHECK(pfq_truncated(kCanonical, 1.0, 3) == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
    // the two-level normalization of the worked case: 1 + (2/3) x
    CHECK(pfq_truncated(kWorked, 2.0, 1) == doctest::Approx(7.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(pfq_truncated(kWorked, 1.0, -1), std::invalid_argument);

    // partial sums increase monotonically to the full series for x >= 0
    const double x = 1.7;
    double previous = 0.0;
    for (int n_max : {0, 2, 5, 10, 20, 40}) {
        const double partial = pfq_truncated(kWorked, x, n_max);
        CHECK(partial >= previous);
        previous = partial;
    }
    CHECK(previous == doctest::Approx(pfq(kWorked, x)).epsilon(1e-13));
}

TEST_CASE("quadrature on finite intervals") {
    CHECK(integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, M_PI) ==
          doctest::Approx(2.0).epsilon(1e-12));
    // narrow gaussian spike: forces subdivision
    const double spike = integrate_adaptive(
        [](double x) { return std::exp(-1000.0 * (x - 0.5) * (x - 0.5)); }, 0.0, 1.0,
        1e-12);
    CHECK(spike == doctest::Approx(std::sqrt(M_PI / 1000.0)).epsilon(1e-9));
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::cos(1e4 * x); }, 0.0,
                                       1.0, 1e-15, 0.0, 3),
                    ConvergenceError);
}

TEST_CASE("quadrature on the half line") {
    CHECK(integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0) ==
          doctest::Approx(1.0).epsilon(1e-10));
    // sub-exponential tail, the case a log substitution cannot absorb
    CHECK(integrate_semi_infinite([](double x) { return std::exp(-2.0 * std::sqrt(x)); },
                                  0.0) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("contour weight construction") {
    const MeasureWeight w = make_measure_weight(kWorked);
    CHECK(w.contour_abscissa == doctest::Approx(0.5));
    // p = q + 1 has no decaying density
    CHECK_THROWS_AS(make_measure_weight(ModelParams{{1.0}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(measure_weight_value(w, 0.0), std::domain_error);
    CHECK_THROWS_AS(measure_weight_value(w, -1.0), std::domain_error);

    MeasureWeight bad = make_measure_weight(ModelParams{{}, {0.3}});
    bad.contour_abscissa = 0.5;  // sits left of the pole at s = 0.7
    CHECK_THROWS_AS(measure_weight_value(bad, 1.0), std::invalid_argument);
}

TEST_CASE("contour weight matches the closed forms") {
    struct Entry {
        ModelParams params;
        double (*closed)(double);
    };
    const Entry entries[] = {
        {kCanonical, [](double x) { return std::exp(-x); }},
        {kWorked, [](double x) { return std::sqrt(x) * std::exp(-x); }},
        {kBessel,
         [](double x) { return 2.0 * std::sqrt(x) * std::cyl_bessel_k(1.0, 2.0 * std::sqrt(x)); }},
    };
    for (const Entry& entry : entries) {
        const MeasureWeight w = make_measure_weight(entry.params);
        for (double x : {0.05, 0.5, 1.0, 2.0, 8.0}) {
            CAPTURE(x);
            CHECK(measure_weight_value(w, x) ==
                  doctest::Approx(entry.closed(x)).epsilon(1e-6));
        }
    }
}

TEST_CASE("closed-form catalog") {
    auto exp_case = weight_catalog(kCanonical);
    REQUIRE(exp_case.has_value());
    CHECK(exp_case->value(1.3) == doctest::Approx(std::exp(-1.3)).epsilon(1e-15));
    REQUIRE(exp_case->log_value);
    CHECK(exp_case->log_value(1.3) == doctest::Approx(-1.3).epsilon(1e-15));

    auto worked_case = weight_catalog(kWorked);
    REQUIRE(worked_case.has_value());
    CHECK(worked_case->value(0.49) ==
          doctest::Approx(0.7 * std::exp(-0.49)).epsilon(1e-14));
    REQUIRE(worked_case->log_value);
    CHECK(worked_case->log_value(2.0) ==
          doctest::Approx(0.5 * std::log(2.0) - 2.0).epsilon(1e-14));

    // general lower parameter in the same family
    auto shifted = weight_catalog(ModelParams{{1.0}, {2.5}});
    REQUIRE(shifted.has_value());
    CHECK(shifted->value(2.0) ==
          doctest::Approx(std::pow(2.0, 1.5) * std::exp(-2.0)).epsilon(1e-14));

    auto bessel_case = weight_catalog(kBessel);
    REQUIRE(bessel_case.has_value());
    CHECK_FALSE(bessel_case->log_value);
    CHECK(bessel_case->value(1.0) ==
          doctest::Approx(2.0 * std::cyl_bessel_k(1.0, 2.0)).epsilon(1e-14));

    CHECK_FALSE(weight_catalog(ModelParams{{1.0, 2.0}, {3.0, 4.0, 5.0}}).has_value());
}

TEST_CASE("weighted moments") {
    const MeasureWeight canonical = make_measure_weight(kCanonical);
    double factorial = 1.0;
    for (int n = 0; n <= 6; ++n) {
        if (n > 0) factorial *= n;
        CAPTURE(n);
        CHECK(weighted_moment(canonical, n) == doctest::Approx(factorial).epsilon(1e-8));
    }

    const MeasureWeight worked = make_measure_weight(kWorked);
    CHECK(weighted_moment(worked, 0) ==
          doctest::Approx(0.88622692545275801).epsilon(1e-8));
    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(weighted_moment(worked, n) ==
              doctest::Approx(std::tgamma(n + 1.5)).epsilon(1e-8));
    }

    // Mellin pair Gamma(s) Gamma(1+s): moments n! (n+1)!
    const MeasureWeight bessel = make_measure_weight(kBessel);
    const double expected[5] = {1.0, 2.0, 12.0, 144.0, 2880.0};
    for (int n = 0; n <= 4; ++n) {
        CAPTURE(n);
        CHECK(weighted_moment(bessel, n) == doctest::Approx(expected[n]).epsilon(1e-8));
    }

    CHECK_THROWS_AS(weighted_moment(canonical, -1), std::invalid_argument);
}

TEST_CASE("moment identity against the structure function") {
    for (const ModelParams& params : {kCanonical, kWorked}) {
        const MeasureWeight w = make_measure_weight(params);
        const double ratio = gamma_ratio(params);
        double rho = 1.0;
        for (int n = 0; n <= 6; ++n) {
            if (n > 0) {
                double e = n;
                for (double b : params.lower) e *= b - 1.0 + n;
                for (double a : params.upper) e /= a - 1.0 + n;
                rho *= e;
            }
            CAPTURE(n);
            CHECK(ratio * weighted_moment(w, n) == doctest::Approx(rho).epsilon(1e-6));
        }
    }
}
