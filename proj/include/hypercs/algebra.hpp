#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>

#include "hypercs/specfun.hpp"

namespace hypercs {

/// Precomputed structure data of the deformed algebra up to level n_max:
///   e[n]   = n * prod(b_j - 1 + n) / prod(a_i - 1 + n)
///   rho[n] = prod_{s=1..n} e[s],  rho[0] = 1.
/// e[0] is stored as the limiting value of the e(n) formula at n -> 0 after
/// cancelling matched zero factors (a_i = 1 against the leading n, b_j = 1
/// against nothing); it is not used by the rho recurrence.
struct StructureTable {
    ModelParams params;
    int n_max = 0;
    std::vector<double> e;    // size n_max + 1
    std::vector<double> rho;  // size n_max + 1
    double gamma_ratio = 1.0;
};

/// Builds the table by the product recurrence and cross-checks every rho[n]
/// against the log-gamma closed form to 1e-12 relative.  Throws
/// std::overflow_error once rho leaves the double range (lower n_max).
StructureTable build_structure(const ModelParams& params, int n_max);

/// Same table behind a shared handle, for states that outlive local scopes.
std::shared_ptr<const StructureTable> build_structure_shared(const ModelParams& params,
                                                             int n_max);

/// e(n) evaluated straight from the parameters (no table); n >= 0, with the
/// same matched-zero cancellation at n = 0 as build_structure.
double deformation_e(const ModelParams& params, int n);

/// Deformation function f(n) = sqrt(e[n] / n) for 1 <= n <= n_max.
/// Throws std::domain_error at n = 0 and std::out_of_range beyond the table.
double deformation_value(const StructureTable& table, int n);

/// Matrix representations on the truncated Fock space (dim = n_max + 1):
/// lowering[n-1][n] = sqrt(e[n]), raising is its transpose, number = diag(n).
struct LadderOperators {
    int dim = 0;
    Eigen::MatrixXd lowering;
    Eigen::MatrixXd raising;
    Eigen::MatrixXd number;
};

LadderOperators build_ladders(const StructureTable& table);

/// rho(l) / (rho(m) * rho(l-m)) for 0 <= m <= l <= n_max.
double generalized_binomial(const StructureTable& table, int l, int m);

// Integer powers by repeated multiplication; x^0 is the multiplicative
// identity (std::pow on complex zero would produce NaN there).
inline double pow_value(double x, int k) {
    double acc = 1.0;
    for (int i = 0; i < k; ++i) acc *= x;
    return acc;
}
inline std::complex<double> pow_value(std::complex<double> x, int k) {
    std::complex<double> acc = 1.0;
    for (int i = 0; i < k; ++i) acc *= x;
    return acc;
}

/// Generalized binomial expansion [x+y]^l = sum_m binom(l,m) x^(l-m) y^m.
/// Works for scalars and for any slot-valued type providing +, *, scalar *
/// and a pow_value overload (orthogonal slots then kill every cross term).
template <class Value>
Value bracket_power(const StructureTable& table, const Value& x, const Value& y,
                    int l) {
    if (l < 0 || l > table.n_max)
        throw std::out_of_range("bracket power order outside table range");
    Value acc = pow_value(x, l);  // m = 0 term, binomial weight 1
    for (int m = 1; m <= l; ++m)
        acc = acc + generalized_binomial(table, l, m) *
                        (pow_value(x, l - m) * pow_value(y, m));
    return acc;
}

}  // namespace hypercs
