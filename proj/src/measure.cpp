#include "hypercs/measure.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "hypercs/log.hpp"
#include "hypercs/quadrature.hpp"

namespace hypercs {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559005768;

double min_lower(const ModelParams& params) {
    double m = std::numeric_limits<double>::infinity();
    for (double b : params.lower) m = std::min(m, b);
    return m;
}

// Mellin image of the density along s = c + it, as exp of a log-Gamma sum so
// the p and q products never overflow individually.
std::complex<double> mellin_image(const ModelParams& params, std::complex<double> s) {
    std::complex<double> acc = log_gamma(s);
    for (double b : params.lower) acc += log_gamma(s + (b - 1.0));
    for (double a : params.upper) acc -= log_gamma(s + (a - 1.0));
    return std::exp(acc);
}

}  // namespace

MeasureWeight make_measure_weight(const ModelParams& params, double halfwidth,
                                  double step) {
    params.validate();
    if (params.q() + 1 <= params.p())
        throw std::invalid_argument("measure weight needs q + 1 > p");
    // Poles of the image sit at s = 0, -1, ... and s = 1 - b_j, -b_j, ...;
    // half a unit of clearance keeps the trapezoid sum well conditioned.
    double left_edge = 0.0;
    if (params.q() > 0) left_edge = std::max(left_edge, 1.0 - min_lower(params));
    return MeasureWeight{params, left_edge + 0.5, halfwidth, step};
}

double measure_weight_value(const MeasureWeight& weight, double x) {
    if (!(x > 0.0)) throw std::domain_error("measure density needs x > 0");
    const ModelParams& params = weight.params;
    if (params.q() + 1 <= params.p())
        throw std::invalid_argument("measure weight needs q + 1 > p");
    const double c = weight.contour_abscissa;
    if (!(c > 0.0) || (params.q() > 0 && c <= 1.0 - min_lower(params)))
        throw std::invalid_argument("contour abscissa sits on or left of a pole");

    const double log_x = std::log(x);
    auto integrand = [&](double t) {
        // exp(-i t log x) has unit modulus; only the real part survives the
        // conjugate-symmetric sum.
        return mellin_image(params, {c, t}) *
               std::exp(std::complex<double>(0.0, -t * log_x));
    };

    // Trapezoid over [-T, T] folded by symmetry: value(-t) = conj(value(t)).
    auto trapezoid = [&](double T, double h) {
        const int n = static_cast<int>(std::ceil(T / h));
        double acc = 0.5 * integrand(0.0).real();
        for (int k = 1; k < n; ++k) acc += integrand(k * h).real();
        acc += 0.5 * integrand(n * h).real();
        return 2.0 * h * acc;
    };

    double T = weight.contour_halfwidth;
    double h = weight.step;
    double sum = trapezoid(T, h);

    // Grow the cut-off until the integrand at the ends is negligible against
    // the accumulated value.
    bool tail_ok = false;
    for (int i = 0; i < 12; ++i) {
        const double edge = std::abs(mellin_image(params, {c, T}));
        if (edge <= 1e-16 * std::max(std::fabs(sum), 1e-300)) {
            tail_ok = true;
            break;
        }
        T *= 2.0;
        sum = trapezoid(T, h);
    }
    if (!tail_ok)
        throw ConvergenceError("contour tail still significant at maximum half-width");

    // Refine the step until two successive halvings agree.
    bool step_ok = false;
    for (int i = 0; i < 12; ++i) {
        h *= 0.5;
        const double refined = trapezoid(T, h);
        if (std::fabs(refined - sum) <= 1e-8 * std::max(std::fabs(refined), 1e-300)) {
            sum = refined;
            step_ok = true;
            break;
        }
        sum = refined;
    }
    if (!step_ok)
        throw ConvergenceError("contour step refinement stalled");

    return std::pow(x, -c) * sum / kTwoPi;
}

std::optional<WeightClosedForm> weight_catalog(const ModelParams& params) {
    params.validate();
    if (params.p() == 0 && params.q() == 0) {
        WeightClosedForm f;
        f.value = [](double x) { return std::exp(-x); };
        f.log_value = [](double x) { return -x; };
        return f;
    }
    if (params.p() == 1 && params.q() == 1 && params.upper[0] == 1.0) {
        const double b = params.lower[0];
        WeightClosedForm f;
        f.value = [b](double x) { return std::pow(x, b - 1.0) * std::exp(-x); };
        f.log_value = [b](double x) { return (b - 1.0) * std::log(x) - x; };
        return f;
    }
    if (params.p() == 0 && params.q() == 1) {
        const double b = params.lower[0];
        const double order = std::fabs(b - 1.0);  // K_nu is even in nu
        WeightClosedForm f;
        f.value = [b, order](double x) {
            return 2.0 * std::pow(x, 0.5 * (b - 1.0)) *
                   std::cyl_bessel_k(order, 2.0 * std::sqrt(x));
        };
        return f;
    }
    return std::nullopt;
}

double weighted_moment(const MeasureWeight& weight, int n, double rel_tol) {
    if (n < 0) throw std::invalid_argument("moment order must be non-negative");
    const ModelParams& params = weight.params;
    const auto catalog = weight_catalog(params);
    std::function<double(double)> density;
    if (catalog) {
        density = catalog->value;
    } else {
        density = [weight](double x) { return measure_weight_value(weight, x); };
    }
    auto integrand = [n, &density](double x) { return std::pow(x, n) * density(x); };

    // The integrand peaks near n + max(b); split a comfortable margin past it.
    double b_max = 0.0;
    for (double b : params.lower) b_max = std::max(b_max, b);
    const double split = n + b_max + 10.0;

    const double head = integrate_adaptive(integrand, 0.0, split, 0.5 * rel_tol, 1e-300);
    const double tail = integrate_semi_infinite(integrand, split, rel_tol);
    return head + tail;
}

}  // namespace hypercs
