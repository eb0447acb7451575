#pragma once

#include <functional>
#include <utility>

#include "hypercs/states.hpp"

namespace hypercs {

/// Diagonal matrix with a single 1 at (index, index): the singular rank-1
/// building block of the label algebra.
struct Projector {
    int dim = 0;
    int index = 0;

    Eigen::MatrixXd materialize() const;
};

/// Throws std::out_of_range unless 0 <= n < dim.
Projector projector(int dim, int n);

/// Label Z = z * u0 + sigma * u1 = diag(z, sigma): two complex slot values
/// carried on orthogonal projectors.  Products and powers act slotwise.
struct DiagonalLabel {
    std::complex<double> slot0;  // z
    std::complex<double> slot1;  // sigma

    Eigen::Matrix2cd as_matrix() const {
        Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
        m(0, 0) = slot0;
        m(1, 1) = slot1;
        return m;
    }
};

inline DiagonalLabel operator+(const DiagonalLabel& a, const DiagonalLabel& b) {
    return {a.slot0 + b.slot0, a.slot1 + b.slot1};
}
inline DiagonalLabel operator*(const DiagonalLabel& a, const DiagonalLabel& b) {
    return {a.slot0 * b.slot0, a.slot1 * b.slot1};
}
inline DiagonalLabel operator*(double c, const DiagonalLabel& a) {
    return {c * a.slot0, c * a.slot1};
}
inline DiagonalLabel pow_value(const DiagonalLabel& a, int k) {
    return {pow_value(a.slot0, k), pow_value(a.slot1, k)};
}

using ScalarFn = std::function<std::complex<double>(std::complex<double>)>;

/// Functional decomposition over the diagonal slots:
/// F(z u0 + sigma u1) = F(z) u0 + F(sigma) u1.  Slot domain errors from f
/// propagate unchanged.
DiagonalLabel cauchy_apply(const ScalarFn& f, const DiagonalLabel& label);

/// Slotwise product F(label1) G(label2), asserted against the explicit 2x2
/// matrix product of the two diagonal images (std::logic_error on mismatch).
DiagonalLabel product_rule_check(const ScalarFn& f, const ScalarFn& g,
                                 const DiagonalLabel& label1,
                                 const DiagonalLabel& label2);

/// [z u0 + sigma u1]^l = z^l u0 + sigma^l u1 for l >= 0.
DiagonalLabel bracket_matrix_power(const DiagonalLabel& label, int l);

/// Coherent state with the diagonal-matrix label: one scalar-label state per
/// slot, all cross-slot pairings vanishing by the projector orthogonality.
struct MatrixCoherentState {
    CoherentState comp0;  // label z on slot u0
    CoherentState comp1;  // label sigma on slot u1
};

MatrixCoherentState make_matrix_state(std::shared_ptr<const StructureTable> table,
                                      const DiagonalLabel& label, int n_max = -1);

/// Matrix-valued Gram <Z|Z> = u0 <z|z> + u1 <sigma|sigma>; the identity for
/// any normalized state.
Eigen::Matrix2cd matrix_gram(const MatrixCoherentState& s);

/// Cross Gram of two matrix states: diag(<z'|z>, <sigma'|sigma>).
Eigen::Matrix2cd matrix_gram(const MatrixCoherentState& bra,
                             const MatrixCoherentState& ket);

/// Slot-tagged rank-1 Fock-space projectors |z><z| and |sigma><sigma|.
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> matrix_projector_decomposition(
    const MatrixCoherentState& s);

}  // namespace hypercs
