#pragma once

#include <complex>
#include <memory>

#include "hypercs/algebra.hpp"

namespace hypercs {

/// Normalized truncated Fock expansion of a label-z coherent state:
/// coeffs[n] = z^n / (sqrt(norm_fn) * sqrt(rho[n])), n = 0..n_max, with
/// norm_fn the partial normalization sum at |z|^2, so the vector has unit
/// 2-norm exactly and coeffs[0] > 0 fixes the global phase.
struct CoherentState {
    std::shared_ptr<const StructureTable> table;
    std::complex<double> label;
    int n_max = 0;  // may sit below table->n_max
    Eigen::VectorXcd coeffs;
    double norm_fn = 1.0;
};

/// Direct coefficient construction.  n_max = -1 uses the full table depth.
/// Throws std::domain_error when |z|^2 lies outside the series domain and
/// std::out_of_range when n_max exceeds the table.
CoherentState make_state(std::shared_ptr<const StructureTable> table,
                         std::complex<double> z, int n_max = -1);

/// Same state built the operator way: the normalization series evaluated at
/// z * raising, applied to the vacuum column and then normalized.  The
/// raising operator is nilpotent on the truncated space, so the series
/// terminates at n_max exactly.  Throws ConvergenceError when the dropped
/// tail estimate |z|^{n_max+1}/sqrt(rho[n_max+1]) exceeds tol.
CoherentState displace_vacuum(std::shared_ptr<const StructureTable> table,
                              std::complex<double> z, double tol = 1e-10);

/// Inner product sum conj(coeffs1[n]) * coeffs2[n].  Both states must share
/// parameters and truncation; otherwise std::invalid_argument.
std::complex<double> overlap(const CoherentState& s1, const CoherentState& s2);

/// Norm distance between the states at labels z and z + delta (delta > 0,
/// real shift); tends to 0 with delta, which is the label-continuity probe.
double label_continuity_probe(std::shared_ptr<const StructureTable> table,
                              std::complex<double> z, double delta);

/// Polynomial function of the level number, A(n) = sum_j c_j n^j.
struct DiagonalObservable {
    std::vector<double> poly_coeffs;

    double eval(double n) const {
        double acc = 0.0;
        for (std::size_t j = poly_coeffs.size(); j-- > 0;) acc = acc * n + poly_coeffs[j];
        return acc;
    }
};

/// <A> as the coefficient sum  sum_n A(n) |coeffs[n]|^2.  Logs a warning if
/// the estimated dropped tail exceeds 1e-10.
double expect_direct(const CoherentState& state, const DiagonalObservable& obs);

/// <A> via the Euler operator x d/dx acting termwise on the normalization
/// series at x = |z|^2: sum_j c_j (x d/dx)^j F(x) / F(x).  Independent
/// accumulation path; must agree with expect_direct.
double expect_euler(const CoherentState& state, const DiagonalObservable& obs);

}  // namespace hypercs
