#include "hypercs/matrixstates.hpp"

#include <algorithm>
#include <cmath>

namespace hypercs {

namespace {

bool close(std::complex<double> a, std::complex<double> b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) <= 1e-13 * scale;
}

}  // namespace

Eigen::MatrixXd Projector::materialize() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    m(index, index) = 1.0;
    return m;
}

Projector projector(int dim, int n) {
    if (n < 0 || n >= dim) throw std::out_of_range("projector index outside dimension");
    return Projector{dim, n};
}

DiagonalLabel cauchy_apply(const ScalarFn& f, const DiagonalLabel& label) {
    return {f(label.slot0), f(label.slot1)};
}

DiagonalLabel product_rule_check(const ScalarFn& f, const ScalarFn& g,
                                 const DiagonalLabel& label1,
                                 const DiagonalLabel& label2) {
    const DiagonalLabel slotwise = cauchy_apply(f, label1) * cauchy_apply(g, label2);
    const Eigen::Matrix2cd product =
        cauchy_apply(f, label1).as_matrix() * cauchy_apply(g, label2).as_matrix();
    if (!close(slotwise.slot0, product(0, 0)) || !close(slotwise.slot1, product(1, 1)) ||
        !close(product(0, 1), 0.0) || !close(product(1, 0), 0.0))
        throw std::logic_error("slotwise product disagrees with the 2x2 matrix product");
    return slotwise;
}

DiagonalLabel bracket_matrix_power(const DiagonalLabel& label, int l) {
    if (l < 0) throw std::invalid_argument("matrix bracket power needs l >= 0");
    return pow_value(label, l);
}

MatrixCoherentState make_matrix_state(std::shared_ptr<const StructureTable> table,
                                      const DiagonalLabel& label, int n_max) {
    return {make_state(table, label.slot0, n_max), make_state(table, label.slot1, n_max)};
}

Eigen::Matrix2cd matrix_gram(const MatrixCoherentState& s) {
    return matrix_gram(s, s);
}

Eigen::Matrix2cd matrix_gram(const MatrixCoherentState& bra,
                             const MatrixCoherentState& ket) {
    // Cross-slot entries pair u0 against u1 and vanish structurally.
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = overlap(bra.comp0, ket.comp0);
    m(1, 1) = overlap(bra.comp1, ket.comp1);
    return m;
}

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> matrix_projector_decomposition(
    const MatrixCoherentState& s) {
    const Eigen::MatrixXcd p0 = s.comp0.coeffs * s.comp0.coeffs.adjoint();
    const Eigen::MatrixXcd p1 = s.comp1.coeffs * s.comp1.coeffs.adjoint();
    return {p0, p1};
}

}  // namespace hypercs
