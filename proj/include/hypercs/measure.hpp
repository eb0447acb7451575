#pragma once

#include <functional>
#include <optional>

#include "hypercs/specfun.hpp"

namespace hypercs {

/// Density W(x) on (0, inf) whose Mellin transform is
///   integral x^(s-1) W(x) dx = Gamma(s) prod_j Gamma(b_j - 1 + s)
///                                        / prod_i Gamma(a_i - 1 + s),
/// so that Gamma-ratio-normalized moments at integer s = n + 1 reproduce the
/// structure coefficients of the model.  Requires q + 1 > p, otherwise no
/// decaying density exists.
struct MeasureWeight {
    ModelParams params;
    double contour_abscissa;   // Re s on the inversion contour
    double contour_halfwidth;  // initial |Im s| cut-off, doubled as needed
    double step;               // initial trapezoid step, halved as needed
};

/// Picks a contour strictly right of every integrand pole and conservative
/// truncation defaults.  Throws std::invalid_argument unless q + 1 > p.
MeasureWeight make_measure_weight(const ModelParams& params,
                                  double halfwidth = 16.0, double step = 0.05);

/// Evaluates W(x) by direct numerical Mellin inversion along the vertical
/// contour.  x > 0.  Throws ConvergenceError if the contour tail refuses to
/// decay or the step refinement stalls.
double measure_weight_value(const MeasureWeight& weight, double x);

/// Closed forms for the parameter families where the inversion is classical.
/// `log_value` is only set when the expression is safe to evaluate in log
/// space for large x (needed by ratio-of-weights constructions).
struct WeightClosedForm {
    std::function<double(double)> value;
    std::function<double(double)> log_value;  // may be empty
};

/// Returns the closed form when the parameters match a known family:
///   p = 0, q = 0                ->  exp(-x)
///   p = 1, q = 1 with a_1 = 1   ->  x^(b_1 - 1) exp(-x)
///   p = 0, q = 1                ->  2 x^((b_1 - 1)/2) K_{b_1 - 1}(2 sqrt x)
/// Otherwise std::nullopt, and callers fall back on the contour evaluation.
std::optional<WeightClosedForm> weight_catalog(const ModelParams& params);

/// n-th moment integral x^n W(x) dx over (0, inf), using the catalog density
/// when available and the contour density otherwise.  The integration range
/// is split at a point past the integrand's peak, with a doubling tail.
double weighted_moment(const MeasureWeight& weight, int n, double rel_tol = 1e-9);

}  // namespace hypercs
