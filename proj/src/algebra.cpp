#include "hypercs/algebra.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace hypercs {

double deformation_e(const ModelParams& params, int n) {
    if (n < 0) throw std::invalid_argument("deformation level must be non-negative");
    if (n >= 1) {
        double num = n;
        for (double b : params.lower) num *= b - 1.0 + n;
        double den = 1.0;
        for (double a : params.upper) den *= a - 1.0 + n;
        return num / den;
    }
    // n = 0: the leading factor n and any (b_j - 1), (a_i - 1) with unit
    // parameter all vanish linearly.  Cancel matched zero pairs and take the
    // limit of the rest; unmatched numerator zeros give 0, unmatched
    // denominator zeros give +inf.
    int zeros_num = 1;  // the explicit factor n
    double num = 1.0;
    for (double b : params.lower) {
        if (b == 1.0)
            ++zeros_num;
        else
            num *= b - 1.0;
    }
    int zeros_den = 0;
    double den = 1.0;
    for (double a : params.upper) {
        if (a == 1.0)
            ++zeros_den;
        else
            den *= a - 1.0;
    }
    if (zeros_num > zeros_den) return 0.0;
    if (zeros_num < zeros_den) return std::numeric_limits<double>::infinity();
    return num / den;
}

StructureTable build_structure(const ModelParams& params, int n_max) {
    params.validate();
    if (n_max < 0) throw std::invalid_argument("structure table needs n_max >= 0");

    StructureTable table;
    table.params = params;
    table.n_max = n_max;
    table.gamma_ratio = gamma_ratio(params);
    table.e.resize(n_max + 1);
    table.rho.resize(n_max + 1);
    table.e[0] = deformation_e(params, 0);
    table.rho[0] = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        table.e[n] = deformation_e(params, n);
        table.rho[n] = table.rho[n - 1] * table.e[n];
        if (!std::isfinite(table.rho[n]))
            throw std::overflow_error("structure function left the double range; lower n_max");
    }

    // Cross-check the recurrence against the gamma closed form
    // rho(n) = gamma_ratio * n! * prod Gamma(b_j + n) / prod Gamma(a_i + n),
    // in log space so large n stays comparable.
    double log_ratio = 0.0;
    for (double a : params.upper) log_ratio += log_gamma(a);
    for (double b : params.lower) log_ratio -= log_gamma(b);
    for (int n = 1; n <= n_max; ++n) {
        double log_closed = log_ratio + log_gamma(n + 1.0);
        for (double b : params.lower) log_closed += log_gamma(b + n);
        for (double a : params.upper) log_closed -= log_gamma(a + n);
        const double diff = std::fabs(std::log(table.rho[n]) - log_closed);
        if (diff > 1e-12) {
            std::ostringstream os;
            os << "structure recurrence disagrees with gamma closed form at n=" << n
               << " (log gap " << diff << ")";
            throw std::runtime_error(os.str());
        }
    }
    return table;
}

std::shared_ptr<const StructureTable> build_structure_shared(const ModelParams& params,
                                                             int n_max) {
    return std::make_shared<const StructureTable>(build_structure(params, n_max));
}

double deformation_value(const StructureTable& table, int n) {
    if (n == 0)
        throw std::domain_error("deformation function is evaluated on n >= 1 only");
    if (n < 0 || n > table.n_max)
        throw std::out_of_range("deformation level outside table range");
    return std::sqrt(table.e[n] / n);
}

LadderOperators build_ladders(const StructureTable& table) {
    const int dim = table.n_max + 1;
    LadderOperators ops;
    ops.dim = dim;
    ops.lowering = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) ops.lowering(n - 1, n) = std::sqrt(table.e[n]);
    ops.raising = ops.lowering.transpose();
    ops.number = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) ops.number(n, n) = n;
    return ops;
}

double generalized_binomial(const StructureTable& table, int l, int m) {
    if (m < 0 || l < m || l > table.n_max)
        throw std::out_of_range("generalized binomial indices outside 0 <= m <= l <= n_max");
    return table.rho[l] / (table.rho[m] * table.rho[l - m]);
}

}  // namespace hypercs
