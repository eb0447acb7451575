// hypercs: tabulate structure functions and coherent-state coefficients,
// run the verification suites, and sample the thermal quasi-distributions.
// Exit codes: 0 success, 1 numeric failure, 2 usage/config error.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hypercs/config.hpp"
#include "hypercs/report_io.hpp"

namespace {

using namespace hypercs;

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError("cannot parse '" + item + "' as a number");
        }
    }
    return out;
}

std::complex<double> parse_complex(const std::string& text) {
    const auto parts = parse_real_list(text);
    if (parts.size() == 1) return {parts[0], 0.0};
    if (parts.size() == 2) return {parts[0], parts[1]};
    throw ConfigError("complex value must be 're' or 're,im', got '" + text + "'");
}

// One set of shared flags per subcommand; option presence decides whether a
// flag overrides the config file.
struct CommonFlags {
    std::string config_path, params_a, params_b, z, sigma, out, format_name;
    std::string suite = "all";
    int n_max = 0;
    double beta = 0.0, hbar_omega = 0.0, tol = 0.0;
    bool truncate_norm = true;

    CLI::Option* o_params_a = nullptr;
    CLI::Option* o_params_b = nullptr;
    CLI::Option* o_z = nullptr;
    CLI::Option* o_sigma = nullptr;
    CLI::Option* o_out = nullptr;
    CLI::Option* o_format = nullptr;
    CLI::Option* o_n_max = nullptr;
    CLI::Option* o_beta = nullptr;
    CLI::Option* o_hbar_omega = nullptr;
    CLI::Option* o_tol = nullptr;
    CLI::Option* o_truncate = nullptr;

    void attach(CLI::App* cmd, bool with_suite) {
        cmd->add_option("--config", config_path, "JSON config file");
        o_params_a = cmd->add_option("--params-a", params_a,
                                     "upper parameters, comma separated (may be empty)");
        o_params_b = cmd->add_option("--params-b", params_b,
                                     "lower parameters, comma separated (may be empty)");
        o_n_max = cmd->add_option("--n-max", n_max, "Fock truncation level");
        o_beta = cmd->add_option("--beta", beta, "inverse temperature");
        o_hbar_omega = cmd->add_option("--hbar-omega", hbar_omega, "level spacing");
        o_z = cmd->add_option("--z", z, "slot-0 label as re,im");
        o_sigma = cmd->add_option("--sigma", sigma, "slot-1 label as re,im");
        if (with_suite)
            cmd->add_option("--suite", suite, "identity|pmoments|entropy|twolevel|all");
        o_tol = cmd->add_option("--tol", tol, "override every named tolerance");
        o_out = cmd->add_option("--out", out, "output file (default stdout)");
        o_format = cmd->add_option("--format", format_name, "csv|json");
        o_truncate = cmd->add_flag("--truncate-norm,!--no-truncate-norm", truncate_norm,
                                   "normalize with the truncated series (default)");
    }

    RunConfig build() const {
        RunConfig config;
        if (!config_path.empty()) config = load_config(config_path);
        if (o_params_a->count()) config.params.upper = parse_real_list(params_a);
        if (o_params_b->count()) config.params.lower = parse_real_list(params_b);
        if (o_n_max->count()) config.n_max = n_max;
        if (o_beta->count()) config.beta = beta;
        if (o_hbar_omega->count()) config.hbar_omega = hbar_omega;
        if (o_z->count()) config.label.slot0 = parse_complex(z);
        if (o_sigma->count()) config.label.slot1 = parse_complex(sigma);
        if (o_tol->count()) {
            if (!(tol > 0.0)) throw ConfigError("--tol must be positive");
            for (auto& [name, value] : config.tolerances) value = tol;
        }
        if (o_out->count()) config.output_path = out;
        if (o_format->count()) config.format = parse_format(format_name);
        if (o_truncate->count()) config.truncate_norm = truncate_norm;
        config.validate();
        return config;
    }
};

void write_output(const RunConfig& config, const std::string& text) {
    if (config.output_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(config.output_path);
    if (!out) throw ConfigError("cannot open output file '" + config.output_path + "'");
    out << text;
}

void emit_table(const RunConfig& config, const NumericTable& table) {
    if (config.format == OutputFormat::csv)
        write_output(config, table_to_csv(table));
    else
        write_output(config, table_to_json(table).dump(2) + "\n");
}

int cmd_structure(const RunConfig& config) {
    const StructureTable table = build_structure(config.params, config.n_max);
    NumericTable out;
    out.columns = {"n", "e", "rho"};
    for (int n = 0; n <= table.n_max; ++n)
        out.rows.push_back({static_cast<double>(n), table.e[n], table.rho[n]});
    emit_table(config, out);
    return 0;
}

int cmd_state(const RunConfig& config) {
    const auto table = build_structure_shared(config.params, config.n_max);
    const MatrixCoherentState state = make_matrix_state(table, config.label);
    NumericTable out;
    out.columns = {"n", "z_re", "z_im", "z_prob", "sigma_re", "sigma_im", "sigma_prob"};
    for (int n = 0; n <= config.n_max; ++n) {
        const std::complex<double> c0 = state.comp0.coeffs[n];
        const std::complex<double> c1 = state.comp1.coeffs[n];
        const double p0 = std::norm(c0);
        const double p1 = std::norm(c1);
        if (p0 == 0.0 && p1 == 0.0) continue;  // dead levels (e.g. vacuum labels)
        out.rows.push_back(
            {static_cast<double>(n), c0.real(), c0.imag(), p0, c1.real(), c1.imag(), p1});
    }
    emit_table(config, out);
    return 0;
}

VerifyReport entropy_consistency_suite(const RunConfig& config) {
    VerifyReport report;
    report.suite = "entropy";
    report.tol = config.tolerances.at("entropy");
    auto add = [&](const std::string& name, double lhs, double rhs, double tol) {
        CheckRow row;
        row.name = name;
        row.lhs = lhs;
        row.rhs = rhs;
        const double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
        row.rel_err = std::fabs(lhs - rhs) / scale;
        row.pass = row.rel_err <= tol;
        report.checks.push_back(row);
    };

    for (double w0 : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        ThermalModel model;
        model.beta = config.beta;
        model.energies = {0.0, 0.0};
        model.weights = {w0, 1.0 - w0};
        model.partition = 2.0;
        std::ostringstream name;
        name << "series_vs_closed_w" << w0;
        add(name.str(), entropy_series(model, 20000, 1e-12), entropy_closed(model),
            report.tol);
    }

    ThermalModel half = thermal_two_level(1.0, 0.0, 0.0);
    add("maximal_mixing_ln2", entropy_closed(half), std::log(2.0), report.tol);

    ThermalModel pure;
    pure.beta = config.beta;
    pure.energies = {0.0, 1.0};
    pure.weights = {1.0, 0.0};
    pure.partition = 1.0;
    add("pure_state_zero", entropy_closed(pure), 0.0, report.tol);

    const ThermalModel configured =
        thermal_two_level(config.beta, config.e0, config.e0 + config.hbar_omega);
    add("series_vs_closed_configured", entropy_series(configured, 20000, 1e-12),
        entropy_closed(configured), report.tol);

    bool pass = true;
    double worst = 0.0;
    for (const CheckRow& row : report.checks) {
        pass = pass && row.pass;
        worst = std::max(worst, row.rel_err);
    }
    report.pass = pass;
    report.max_rel_err = worst;
    return report;
}

int cmd_verify(const RunConfig& config, const std::string& suite) {
    std::vector<VerifyReport> reports;
    const LinearSpectrum spectrum{config.hbar_omega, config.e0};
    const bool all = suite == "all";
    if (all || suite == "identity")
        reports.push_back(verify_identity_resolution(config.params, 0, 10,
                                                     config.tolerances.at("identity")));
    if (all || suite == "pmoments")
        reports.push_back(verify_p_moments(spectrum, config.beta, config.params, 0, 8,
                                           config.tolerances.at("pmoments")));
    if (all || suite == "entropy") reports.push_back(entropy_consistency_suite(config));
    if (all || suite == "twolevel")
        reports.push_back(
            reproduce_two_level_ho(config.beta, config.tolerances.at("twolevel")));
    if (reports.empty())
        throw ConfigError("unknown suite '" + suite +
                          "' (identity|pmoments|entropy|twolevel|all)");

    bool pass = true;
    for (const VerifyReport& report : reports) {
        std::cout << report_summary_line(report) << "\n";
        pass = pass && report.pass;
    }

    if (config.format == OutputFormat::csv) {
        if (!config.output_path.empty()) write_output(config, reports_to_csv(reports));
        else std::cout << reports_to_csv(reports);
    } else {
        const std::string text = reports_to_json(reports).dump(2) + "\n";
        if (!config.output_path.empty()) write_output(config, text);
        else std::cout << text;
    }
    return pass ? 0 : 1;
}

int cmd_distributions(const RunConfig& config) {
    if (config.grid.points < 1) throw ConfigError("distributions needs a non-empty grid");
    const StructureTable table = build_structure(config.params, config.n_max);
    std::vector<double> energies(config.n_max + 1);
    for (int n = 0; n <= config.n_max; ++n) energies[n] = config.e0 + n * config.hbar_omega;
    const ThermalModel model = make_thermal(config.beta, energies);
    const LinearSpectrum spectrum{config.hbar_omega, config.e0};

    NumericTable out;
    out.columns = {"x", "q", "p"};
    const double log_min = std::log(config.grid.min);
    const double log_max = std::log(config.grid.max);
    for (int i = 0; i < config.grid.points; ++i) {
        const double frac =
            config.grid.points == 1 ? 0.0 : static_cast<double>(i) / (config.grid.points - 1);
        const double x = std::exp(log_min + frac * (log_max - log_min));
        const double q =
            husimi_q(model, table, x, config.n_max + 1, config.truncate_norm);
        const double p = p_function_linear(spectrum, config.beta, config.params, x);
        out.rows.push_back({x, q, p});
    }
    emit_table(config, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized-hypergeometric coherent states toolkit"};
    app.require_subcommand(1);

    CLI::App* structure = app.add_subcommand("structure", "tabulate e(n) and rho(n)");
    CLI::App* state = app.add_subcommand("state", "tabulate slot coefficients");
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    CLI::App* distributions =
        app.add_subcommand("distributions", "sample Husimi Q and P on a grid");

    CommonFlags f_structure, f_state, f_verify, f_distributions;
    f_structure.attach(structure, false);
    f_state.attach(state, false);
    f_verify.attach(verify, true);
    f_distributions.attach(distributions, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (structure->parsed()) return cmd_structure(f_structure.build());
        if (state->parsed()) return cmd_state(f_state.build());
        if (verify->parsed()) return cmd_verify(f_verify.build(), f_verify.suite);
        if (distributions->parsed()) return cmd_distributions(f_distributions.build());
        return 2;
    } catch (const hypercs::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 1;
    }
}
