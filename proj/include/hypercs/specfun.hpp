#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "hypercs/errors.hpp"

namespace hypercs {

/// Parameter multiset of a generalized hypergeometric series pFq:
/// `upper` holds the numerator parameters a_1..a_p, `lower` the denominator
/// parameters b_1..b_q.  All entries must be strictly positive; that keeps
/// every Gamma factor finite and the associated measure problems well posed.
struct ModelParams {
    std::vector<double> upper;
    std::vector<double> lower;

    std::size_t p() const { return upper.size(); }
    std::size_t q() const { return lower.size(); }

    /// Throws std::invalid_argument if any parameter is non-positive or NaN.
    void validate() const;

    bool operator==(const ModelParams&) const = default;
};

/// True when the series converges for every finite argument (p <= q).
bool series_entire(const ModelParams& params);

/// Enforces the classical convergence domain: entire for p <= q, the open
/// unit disk for p == q + 1, and only x == 0 beyond that.  Throws
/// std::domain_error on violation.
void check_series_argument(const ModelParams& params, double abs_x);

// --- Gamma machinery -------------------------------------------------------
//
// Lanczos approximation (g = 7, 9 terms).  Good to ~15 significant digits on
// the real axis and ample for the contour evaluations, where the integrand is
// later re-normalized anyway.  Reflection handles Re z < 1/2.

/// log Gamma on the complex plane; throws std::domain_error at the poles
/// (non-positive integers on the real axis).
std::complex<double> log_gamma(std::complex<double> z);

/// Real log Gamma for x > 0.
double log_gamma(double x);

/// Real Gamma with pole detection and overflow check.
double gamma_fn(double x);

// --- Building blocks -------------------------------------------------------

/// Rising factorial (c)_n = c (c+1) ... (c+n-1); (c)_0 = 1.  n >= 0.
double pochhammer(double c, int n);

/// prod Gamma(a_i) / prod Gamma(b_j), evaluated in log space.
double gamma_ratio(const ModelParams& params);

/// Ratio term_{n+1}/term_n of the pFq series at unit argument:
/// prod(a_i + n) / (prod(b_j + n) * (n + 1)).  Exposed so the series
/// recurrence and the coefficient identities share one definition.
double pfq_term_ratio(const ModelParams& params, int n);

/// pFq(a; b; x) summed by the running-ratio recurrence until the relative
/// term size drops below `tol`.  Throws ConvergenceError after `max_terms`.
double pfq(const ModelParams& params, double x, double tol = 1e-15,
           int max_terms = 10000);
std::complex<double> pfq(const ModelParams& params, std::complex<double> x,
                         double tol = 1e-15, int max_terms = 10000);

/// Partial sum of the first n_max + 1 terms (n = 0..n_max).  This is the
/// normalization function of a state truncated at level n_max.
double pfq_truncated(const ModelParams& params, double x, int n_max);
std::complex<double> pfq_truncated(const ModelParams& params, std::complex<double> x,
                                   int n_max);

}  // namespace hypercs
