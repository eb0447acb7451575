#include "hypercs/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypercs/quadrature.hpp"

namespace hypercs {

namespace {

double rel_gap(double lhs, double rhs) {
    const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
    if (scale == 0.0) return 0.0;
    return std::fabs(lhs - rhs) / scale;
}

CheckRow make_row(std::string name, double lhs, double rhs, double tol) {
    CheckRow row;
    row.name = std::move(name);
    row.lhs = lhs;
    row.rhs = rhs;
    row.rel_err = rel_gap(lhs, rhs);
    row.pass = row.rel_err <= tol;
    return row;
}

void finalize(VerifyReport& report) {
    report.pass = true;
    report.max_rel_err = 0.0;
    for (const CheckRow& row : report.checks) {
        report.pass = report.pass && row.pass;
        report.max_rel_err = std::max(report.max_rel_err, row.rel_err);
    }
}

// Semi-infinite moment-style integral with the same split convention as
// weighted_moment: adaptive head up to past the integrand peak, doubling tail.
template <class F>
double moment_integral(F&& f, double split, double quad_tol) {
    const double head = integrate_adaptive(f, 0.0, split, 0.5 * quad_tol, 1e-300);
    const double tail = integrate_semi_infinite(f, split, quad_tol);
    return head + tail;
}

}  // namespace

ThermalModel make_thermal(double beta, std::vector<double> energies) {
    if (!(beta > 0.0)) throw std::invalid_argument("thermal model needs beta > 0");
    if (energies.empty()) throw std::invalid_argument("thermal model needs energies");
    ThermalModel model;
    model.beta = beta;
    model.energies = std::move(energies);
    const double e_min = *std::min_element(model.energies.begin(), model.energies.end());
    double shifted = 0.0;
    model.partition = 0.0;
    model.weights.resize(model.energies.size());
    for (std::size_t n = 0; n < model.energies.size(); ++n) {
        model.weights[n] = std::exp(-beta * (model.energies[n] - e_min));
        shifted += model.weights[n];
        model.partition += std::exp(-beta * model.energies[n]);
    }
    for (double& w : model.weights) w /= shifted;
    return model;
}

ThermalModel thermal_two_level(double beta, double e0, double e1) {
    if (!(beta > 0.0)) throw std::invalid_argument("thermal model needs beta > 0");
    const double gap = e1 - e0;
    ThermalModel model;
    model.beta = beta;
    model.energies = {e0, e1};
    model.weights = {1.0 / (1.0 + std::exp(-beta * gap)),
                     1.0 / (1.0 + std::exp(beta * gap))};
    model.partition = std::exp(-beta * e0) + std::exp(-beta * e1);
    return model;
}

double LinearSpectrum::partition(double beta) const {
    if (!(beta > 0.0) || !(hbar_omega > 0.0))
        throw std::invalid_argument("linear-spectrum partition needs beta, hbar_omega > 0");
    return std::exp(-beta * e0) / (1.0 - std::exp(-beta * hbar_omega));
}

double husimi_q(const ThermalModel& model, const StructureTable& table, double x,
                int n_levels, bool truncate_norm) {
    if (!(x >= 0.0)) throw std::domain_error("Husimi argument needs x >= 0");
    if (n_levels < 1 || n_levels > static_cast<int>(model.weights.size()))
        throw std::out_of_range("Husimi level count outside the thermal model");
    if (n_levels > table.n_max + 1)
        throw std::out_of_range("Husimi level count outside the structure table");

    double acc = 0.0;
    double xn = 1.0;
    for (int n = 0; n < n_levels; ++n) {
        acc += model.weights[n] * xn / table.rho[n];
        xn *= x;
    }
    const double norm = truncate_norm ? pfq_truncated(table.params, x, table.n_max)
                                      : pfq(table.params, x);
    return acc / norm;
}

double p_function_linear(const LinearSpectrum& spectrum, double beta,
                         const ModelParams& params, double x) {
    if (!(x > 0.0)) throw std::domain_error("P function needs x > 0");
    const double t = beta * spectrum.hbar_omega;
    if (!(t > 0.0)) throw std::invalid_argument("P function needs beta * hbar_omega > 0");
    const double factor = std::expm1(t);
    const double x_up = std::exp(t) * x;

    const auto catalog = weight_catalog(params);
    if (catalog && catalog->log_value)
        return factor * std::exp(catalog->log_value(x_up) - catalog->log_value(x));
    double lo, hi;
    if (catalog) {
        lo = catalog->value(x);
        hi = catalog->value(x_up);
    } else {
        const MeasureWeight weight = make_measure_weight(params);
        lo = measure_weight_value(weight, x);
        hi = measure_weight_value(weight, x_up);
    }
    if (lo == 0.0)
        throw std::overflow_error("P-function denominator weight underflowed");
    return factor * hi / lo;
}

VerifyReport verify_p_moments(const LinearSpectrum& spectrum, double beta,
                              const ModelParams& params, int n_lo, int n_hi,
                              double tol, double quad_tol) {
    if (n_lo < 0 || n_hi < n_lo) throw std::invalid_argument("bad moment range");
    VerifyReport report;
    report.suite = "pmoments";
    report.tol = tol;

    const StructureTable table = build_structure(params, n_hi);
    const double z_part = spectrum.partition(beta);
    const auto catalog = weight_catalog(params);
    const MeasureWeight weight = make_measure_weight(params);
    auto density = [&](double x) {
        return catalog ? catalog->value(x) : measure_weight_value(weight, x);
    };

    double b_max = 0.0;
    for (double b : params.lower) b_max = std::max(b_max, b);

    for (int n = n_lo; n <= n_hi; ++n) {
        auto integrand = [&](double x) {
            return p_function_linear(spectrum, beta, params, x) * density(x) *
                   std::pow(x, n);
        };
        // P * W decays at the rescaled rate, so the peak sits left of the
        // plain moment peak; the plain split point is comfortably past it.
        const double split = n + b_max + 10.0;
        const double lhs = moment_integral(integrand, split, quad_tol);
        const double rhs = (1.0 / table.gamma_ratio) *
                           (std::exp(-beta * spectrum.energy(n)) / z_part) *
                           table.rho[n];
        std::ostringstream name;
        name << "p_moment_n" << n;
        report.checks.push_back(make_row(name.str(), lhs, rhs, tol));
    }
    finalize(report);
    return report;
}

VerifyReport verify_identity_resolution(const ModelParams& params, int n_lo,
                                        int n_hi, double tol, double quad_tol) {
    if (n_lo < 0 || n_hi < n_lo) throw std::invalid_argument("bad moment range");
    VerifyReport report;
    report.suite = "identity";
    report.tol = tol;

    const StructureTable table = build_structure(params, n_hi);
    const MeasureWeight weight = make_measure_weight(params);
    for (int n = n_lo; n <= n_hi; ++n) {
        const double lhs = table.gamma_ratio * weighted_moment(weight, n, quad_tol);
        const double rhs = table.rho[n];
        std::ostringstream name;
        name << "moment_identity_n" << n;
        report.checks.push_back(make_row(name.str(), lhs, rhs, tol));
    }

    // Both slots carry the same scalar measure; their projector sum closes
    // the 2x2 identity exactly.
    const Eigen::MatrixXd sum =
        projector(2, 0).materialize() + projector(2, 1).materialize();
    CheckRow row;
    row.name = "projector_sum_identity";
    row.lhs = (sum - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff();
    row.rhs = 0.0;
    row.rel_err = row.lhs;
    row.pass = row.lhs == 0.0;
    report.checks.push_back(row);

    finalize(report);
    return report;
}

VerifyReport reproduce_two_level_ho(double beta, double tol) {
    if (!(beta > 0.0)) throw std::invalid_argument("two-level check needs beta > 0");
    VerifyReport report;
    report.suite = "twolevel";
    report.tol = tol;

    const ModelParams params{{1.0}, {1.5}};
    const StructureTable table = build_structure(params, 1);
    const double t = beta;  // hbar_omega = 1 in the worked case

    // Direct Boltzmann route at E_n = n + 1/2.
    const ThermalModel direct = thermal_two_level(beta, 0.5, 1.5);

    // Moment route: closed-form integral values of the P-weighted moments,
    // divided by the structure function.
    const double z_part = std::exp(-0.5 * t) + std::exp(-1.5 * t);
    const double two_over_sqrt_pi = 2.0 / std::sqrt(std::acos(-1.0));
    for (int n = 0; n <= 1; ++n) {
        const double integral = two_over_sqrt_pi * (std::exp(-0.5 * t) / z_part) *
                                std::pow(std::exp(-t), n) * gamma_fn(1.5 + n);
        const double reconstructed = integral / table.rho[n];
        std::ostringstream name;
        name << "weight_n" << n;
        report.checks.push_back(
            make_row(name.str(), reconstructed, direct.weights[n], tol));
    }

    // Closed-form normalization factor: (2/sqrt(pi)) * (2/3) * Gamma(5/2) = 1.
    report.checks.push_back(make_row(
        "gamma_factor_unity", two_over_sqrt_pi * (2.0 / 3.0) * gamma_fn(2.5), 1.0,
        1e-12));

    finalize(report);
    return report;
}

QubitSlots qubit_from_label(const ModelParams& params, const DiagonalLabel& label) {
    params.validate();
    double rho1 = 1.0;
    for (double b : params.lower) rho1 *= b;
    for (double a : params.upper) rho1 /= a;
    if (rho1 == 0.0 || !std::isfinite(rho1))
        throw std::invalid_argument("qubit construction needs rho(1) finite and nonzero");

    auto slot = [rho1](std::complex<double> z) {
        const double norm = std::sqrt(1.0 + std::norm(z) / rho1);
        return std::array<std::complex<double>, 2>{1.0 / norm,
                                                   z / std::sqrt(rho1) / norm};
    };
    QubitSlots q{slot(label.slot0), slot(label.slot1)};
    for (const auto& amps : {q.slot0, q.slot1}) {
        const double total = std::norm(amps[0]) + std::norm(amps[1]);
        if (std::fabs(total - 1.0) > 1e-12)
            throw std::logic_error("qubit slot amplitudes lost normalization");
    }
    return q;
}

double entropy_closed(const ThermalModel& model) {
    double acc = 0.0;
    for (double w : model.weights) {
        if (w < 0.0) throw std::domain_error("entropy needs non-negative weights");
        if (w > 0.0) acc -= w * std::log(w);
    }
    return acc;
}

double entropy_series(const ThermalModel& model, int k_max, double tol) {
    double total = 0.0;
    for (double w : model.weights) {
        if (w == 0.0) continue;  // 0 log 0 convention, matching the closed form
        if (w < 0.05 || w >= 2.0)
            throw std::domain_error(
                "entropy series needs weights in [0.05, 2); use the closed form");
        const double u = w - 1.0;
        double power = 1.0;
        double inner = 0.0;
        bool settled = false;
        for (int k = 1; k <= k_max; ++k) {
            power *= u;
            const double term = (k % 2 == 1 ? power : -power) / k;
            inner += term;
            if (std::fabs(w * term) < tol) {
                settled = true;
                break;
            }
        }
        if (!settled)
            throw ConvergenceError("entropy log series too slow at this weight");
        total -= w * inner;
    }
    return total;
}

double thermal_expectation(const ThermalModel& model, const DiagonalObservable& obs) {
    double acc = 0.0;
    for (std::size_t n = 0; n < model.weights.size(); ++n)
        acc += model.weights[n] * obs.eval(static_cast<double>(n));
    return acc;
}

}  // namespace hypercs
