#include "hypercs/specfun.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hypercs {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640561764;

// Lanczos coefficients for g = 7, 9 terms (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

template <class T>
T lanczos_log_gamma_core(T z) {
    // Valid for Re z >= 0.5.  Shift by one so the series is indexed from z-1.
    z -= 1.0;
    T acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
    T t = z + (kLanczosG + 0.5);
    return kLogSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

void ModelParams::validate() const {
    auto check = [](const char* which, const std::vector<double>& v) {
        for (double x : v) {
            if (!(x > 0.0) || !std::isfinite(x)) {
                std::ostringstream os;
                os << "model parameter " << which << " entry " << x
                   << " is not strictly positive";
                throw std::invalid_argument(os.str());
            }
        }
    };
    check("a", upper);
    check("b", lower);
}

bool series_entire(const ModelParams& params) { return params.p() <= params.q(); }

void check_series_argument(const ModelParams& params, double abs_x) {
    if (!std::isfinite(abs_x)) throw std::domain_error("series argument is not finite");
    if (params.p() <= params.q()) return;
    if (params.p() == params.q() + 1) {
        if (abs_x >= 1.0)
            throw std::domain_error("series with p = q + 1 requires |x| < 1");
        return;
    }
    if (abs_x != 0.0)
        throw std::domain_error("series with p > q + 1 diverges for x != 0");
}

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.imag() == 0.0 && is_nonpositive_integer(z.real()))
        throw std::domain_error("log_gamma pole at non-positive integer");
    if (z.real() < 0.5) {
        // Reflection; exp() of the result is insensitive to the log branch.
        std::complex<double> s = std::sin(kPi * z);
        return std::log(kPi / s) - log_gamma(1.0 - z);
    }
    return lanczos_log_gamma_core(z);
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("real log_gamma requires x > 0");
    return lanczos_log_gamma_core(x);
}

double gamma_fn(double x) {
    if (std::isnan(x)) throw std::domain_error("gamma of NaN");
    if (is_nonpositive_integer(x)) throw std::domain_error("gamma pole at non-positive integer");
    if (x > 171.7) throw std::overflow_error("gamma overflows double range");
    if (x < 0.5)
        return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
    // The direct form's t^(z+1/2) overflows before Gamma itself does.
    if (x > 140.0) return std::exp(lanczos_log_gamma_core(x));
    double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
    double t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

double pochhammer(double c, int n) {
    if (n < 0) throw std::invalid_argument("pochhammer needs n >= 0");
    double out = 1.0;
    for (int k = 0; k < n; ++k) {
        if (c + k == 0.0)
            throw std::domain_error("pochhammer factor hits zero (rising-factorial pole)");
        out *= c + k;
    }
    return out;
}

double gamma_ratio(const ModelParams& params) {
    params.validate();
    double acc = 0.0;
    for (double a : params.upper) acc += log_gamma(a);
    for (double b : params.lower) acc -= log_gamma(b);
    return std::exp(acc);
}

double pfq_term_ratio(const ModelParams& params, int n) {
    double num = 1.0;
    double den = n + 1.0;
    for (double a : params.upper) num *= a + n;
    for (double b : params.lower) den *= b + n;
    return num / den;
}

namespace {

template <class T>
T pfq_impl(const ModelParams& params, T x, double tol, int max_terms) {
    params.validate();
    check_series_argument(params, std::abs(x));
    T sum = 1.0;
    T term = 1.0;
    for (int n = 0; n < max_terms; ++n) {
        term *= x * pfq_term_ratio(params, n);
        sum += term;
        if (std::abs(term) <= tol * std::abs(sum)) return sum;
    }
    throw ConvergenceError("hypergeometric series did not settle within term budget");
}

}  // namespace

double pfq(const ModelParams& params, double x, double tol, int max_terms) {
    return pfq_impl(params, x, tol, max_terms);
}

std::complex<double> pfq(const ModelParams& params, std::complex<double> x,
                         double tol, int max_terms) {
    return pfq_impl(params, x, tol, max_terms);
}

double pfq_truncated(const ModelParams& params, double x, int n_max) {
    params.validate();
    if (n_max < 0) throw std::invalid_argument("pfq_truncated needs n_max >= 0");
    if (!std::isfinite(x)) throw std::domain_error("series argument is not finite");
    double sum = 1.0;
    double term = 1.0;
    for (int n = 0; n < n_max; ++n) {
        term *= x * pfq_term_ratio(params, n);
        sum += term;
    }
    return sum;
}

std::complex<double> pfq_truncated(const ModelParams& params, std::complex<double> x,
                                   int n_max) {
    params.validate();
    if (n_max < 0) throw std::invalid_argument("pfq_truncated needs n_max >= 0");
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
        throw std::domain_error("series argument is not finite");
    std::complex<double> sum = 1.0;
    std::complex<double> term = 1.0;
    for (int n = 0; n < n_max; ++n) {
        term *= x * pfq_term_ratio(params, n);
        sum += term;
    }
    return sum;
}

}  // namespace hypercs
