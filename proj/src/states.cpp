#include "hypercs/states.hpp"

#include <cmath>

#include "hypercs/log.hpp"

namespace hypercs {

namespace {

void require_table(const std::shared_ptr<const StructureTable>& table) {
    if (!table) throw std::invalid_argument("null structure table");
}

// |c_{n_max+1}|^2 / |c_{n_max}|^2 continuation factor for tail estimates.
double next_level_ratio(const CoherentState& state) {
    const double x = std::norm(state.label);
    const double e_next = deformation_e(state.table->params, state.n_max + 1);
    return x / e_next;
}

}  // namespace

CoherentState make_state(std::shared_ptr<const StructureTable> table,
                         std::complex<double> z, int n_max) {
    require_table(table);
    if (n_max < 0) n_max = table->n_max;
    if (n_max > table->n_max)
        throw std::out_of_range("state truncation exceeds structure table depth");
    check_series_argument(table->params, std::norm(z));

    CoherentState state;
    state.table = table;
    state.label = z;
    state.n_max = n_max;
    state.norm_fn = pfq_truncated(table->params, std::norm(z), n_max);
    state.coeffs.resize(n_max + 1);
    // Running ratio keeps z^n and sqrt(rho[n]) from ever being formed alone;
    // each step multiplies by exactly z * sqrt(rho[n-1]/rho[n]).
    std::complex<double> c = 1.0 / std::sqrt(state.norm_fn);
    state.coeffs[0] = c;
    for (int n = 1; n <= n_max; ++n) {
        c *= z * std::sqrt(table->rho[n - 1] / table->rho[n]);
        state.coeffs[n] = c;
    }
    return state;
}

CoherentState displace_vacuum(std::shared_ptr<const StructureTable> table,
                              std::complex<double> z, double tol) {
    require_table(table);
    check_series_argument(table->params, std::norm(z));
    const int n_max = table->n_max;

    const double rho_next = table->rho[n_max] * deformation_e(table->params, n_max + 1);
    const double tail = std::pow(std::abs(z), n_max + 1) / std::sqrt(rho_next);
    if (tail > tol) {
        throw ConvergenceError(
            "displacement series tail above tolerance at this truncation");
    }

    const LadderOperators ops = build_ladders(*table);
    Eigen::VectorXd power = Eigen::VectorXd::Zero(ops.dim);
    power(0) = 1.0;  // vacuum column
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(ops.dim);
    std::complex<double> zk = 1.0;
    for (int k = 0; k <= n_max; ++k) {
        acc += (zk / table->rho[k]) * power.cast<std::complex<double>>();
        power = ops.raising * power;
        zk *= z;
    }

    CoherentState state;
    state.table = table;
    state.label = z;
    state.n_max = n_max;
    state.norm_fn = acc.squaredNorm();
    acc /= std::sqrt(state.norm_fn);
    state.coeffs = acc;
    return state;
}

std::complex<double> overlap(const CoherentState& s1, const CoherentState& s2) {
    if (!s1.table || !s2.table) throw std::invalid_argument("null structure table");
    if (!(s1.table->params == s2.table->params) || s1.n_max != s2.n_max)
        throw std::invalid_argument("overlap needs matching parameters and truncation");
    return s1.coeffs.dot(s2.coeffs);  // Eigen conjugates the left factor
}

double label_continuity_probe(std::shared_ptr<const StructureTable> table,
                              std::complex<double> z, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("continuity probe needs delta > 0");
    const CoherentState a = make_state(table, z);
    const CoherentState b = make_state(table, z + delta);
    return (a.coeffs - b.coeffs).norm();
}

double expect_direct(const CoherentState& state, const DiagonalObservable& obs) {
    double acc = 0.0;
    for (int n = 0; n <= state.n_max; ++n)
        acc += obs.eval(n) * std::norm(state.coeffs[n]);

    const double tail = std::fabs(obs.eval(state.n_max + 1)) *
                        std::norm(state.coeffs[state.n_max]) * next_level_ratio(state);
    if (tail > 1e-10)
        log_warn("expectation truncation tail estimate " + std::to_string(tail));
    return acc;
}

double expect_euler(const CoherentState& state, const DiagonalObservable& obs) {
    const ModelParams& params = state.table->params;
    const double x = std::norm(state.label);
    const std::size_t degree = obs.poly_coeffs.size();

    // (x d/dx)^j maps x^n to n^j x^n, so each derivative order is its own
    // weighted partial sum of the same series terms.
    std::vector<double> euler(degree, 0.0);
    double denom = 0.0;
    double term = 1.0;
    for (int n = 0;; ++n) {
        denom += term;
        double weight = 1.0;
        for (std::size_t j = 0; j < degree; ++j) {
            euler[j] += weight * term;
            weight *= n;
        }
        if (n == state.n_max) break;
        term *= x * pfq_term_ratio(params, n);
    }

    double acc = 0.0;
    for (std::size_t j = 0; j < degree; ++j) acc += obs.poly_coeffs[j] * euler[j];
    const double result = acc / denom;

    const double tail = std::fabs(obs.eval(state.n_max + 1)) *
                        std::norm(state.coeffs[state.n_max]) * next_level_ratio(state);
    if (tail > 1e-10)
        log_warn("expectation truncation tail estimate " + std::to_string(tail));
    return result;
}

}  // namespace hypercs
