// Acceptance harness for the released behaviour of the library and CLI.
// Each criterion prints exactly one verdict line; any failure flips the
// process exit code.  Tolerances are pinned here, next to the checks.
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hypercs/config.hpp"
#include "hypercs/measure.hpp"
#include "hypercs/report_io.hpp"
#include "hypercs/thermal.hpp"

using namespace hypercs;
using std::complex;

namespace {

const ModelParams kCanonical{{}, {}};
const ModelParams kWorked{{1.0}, {1.5}};
const ModelParams kBessel{{}, {2.0}};

int g_failures = 0;
int g_index = 0;

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

void require_close(double got, double want, double tol, const std::string& what) {
    const double scale = std::max(1.0, std::abs(want));
    if (!(std::abs(got - want) <= tol * scale)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << what << ": got " << got << ", want " << want << " (tol " << tol << ")";
        throw std::runtime_error(msg.str());
    }
}

void criterion(const std::string& name, const std::function<void()>& body) {
    ++g_index;
    std::string detail;
    try {
        body();
    } catch (const std::exception& e) {
        detail = e.what();
    } catch (...) {
        detail = "unknown exception";
    }
    const bool ok = detail.empty();
    std::printf("[%s] %02d %s\n", ok ? "PASS" : "FAIL", g_index, name.c_str());
    if (!ok) {
        ++g_failures;
        std::printf("          %s\n", detail.c_str());
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <cli-binary> <fixtures-dir>\n", argv[0]);
        return 2;
    }
    const std::string cli = argv[1];
    const std::string fixtures = argv[2];

    criterion("deformed level structure matches its closed form", [] {
        const StructureTable table = build_structure(kWorked, 20);
        require(table.rho[0] == 1.0, "rho(0) must be exactly 1");
        require_close(table.rho[1], 1.5, 1e-12, "rho(1)");
        for (int n = 0; n <= 20; ++n)
            require_close(table.e[n], n + 0.5, 1e-12, "e(" + std::to_string(n) + ")");
    });

    criterion("two-level coherent amplitudes in closed form", [] {
        auto table = build_structure_shared(kWorked, 1);
        std::mt19937 rng(1912);
        std::uniform_real_distribution<double> dist(-1.5, 1.5);
        for (int trial = 0; trial < 10; ++trial) {
            const complex<double> z{dist(rng), dist(rng)};
            const CoherentState state = make_state(table, z);
            const double norm = std::sqrt(1.0 + (2.0 / 3.0) * std::norm(z));
            require(std::abs(state.coeffs(0) - 1.0 / norm) <= 1e-12,
                    "ground amplitude off at trial " + std::to_string(trial));
            require(std::abs(state.coeffs(1) - std::sqrt(2.0 / 3.0) * z / norm) <= 1e-12,
                    "excited amplitude off at trial " + std::to_string(trial));
            require_close(state.coeffs.squaredNorm(), 1.0, 1e-14, "total population");
        }
    });

    criterion("identity resolution by weighted moments", [] {
        for (const ModelParams& params : {kCanonical, kWorked}) {
            const VerifyReport report = verify_identity_resolution(params, 0, 10, 1e-6);
            require(report.pass, "suite verdict for " + report.suite);
            require(report.max_rel_err <= 1e-6, "moment mismatch above 1e-6");
            require(report.checks.back().rel_err == 0.0,
                    "projector sum must close exactly");
        }
    });

    criterion("contour-integral weight matches closed-form densities", [] {
        for (const ModelParams& params : {kCanonical, kWorked, kBessel}) {
            const MeasureWeight weight = make_measure_weight(params);
            for (const double x : {0.05, 0.5, 1.0, 2.0, 8.0}) {
                const double contour = measure_weight_value(weight, x);
                const double closed = weight_catalog(params)->value(x);
                require_close(contour, closed, 1e-6,
                              "weight at x = " + std::to_string(x));
            }
        }
    });

    criterion("thermal P moments reproduce Boltzmann-weighted structure", [] {
        for (const double beta : {0.5, 1.0, 2.0}) {
            const VerifyReport canonical =
                verify_p_moments(LinearSpectrum{1.0, 0.0}, beta, kCanonical, 0, 8, 1e-6);
            require(canonical.pass,
                    "undeformed moments at beta " + std::to_string(beta));
            const VerifyReport worked =
                verify_p_moments(LinearSpectrum{1.0, 0.5}, beta, kWorked, 0, 8, 1e-6);
            require(worked.pass, "deformed moments at beta " + std::to_string(beta));
        }
    });

    criterion("two-level oscillator weights rebuilt from moments", [] {
        for (const double beta : {0.5, 1.0, 2.0}) {
            const VerifyReport report = reproduce_two_level_ho(beta, 1e-8);
            require(report.pass, "reconstruction at beta " + std::to_string(beta));
            require(report.checks.back().rel_err <= 1e-12,
                    "closed gamma factor must be one to 1e-12");
        }
    });

    criterion("displaced vacuum agrees with the direct construction", [] {
        for (const ModelParams& params : {kCanonical, kWorked}) {
            auto table = build_structure_shared(params, 40);
            for (const complex<double> z :
                 {complex<double>(2.0, 0.0), complex<double>(0.0, 2.0),
                  complex<double>(1.2, -1.1), complex<double>(-0.7, 0.6)}) {
                const double fidelity =
                    std::abs(overlap(make_state(table, z), displace_vacuum(table, z)));
                require(fidelity >= 1.0 - 1e-10, "fidelity dropped below 1 - 1e-10");
            }
        }
    });

    criterion("projector algebra and matrix-state Gram identity", [] {
        for (int dim : {2, 3, 4}) {
            Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(dim, dim);
            for (int i = 0; i < dim; ++i) {
                const Eigen::MatrixXd ui = projector(dim, i).materialize();
                for (int j = 0; j < dim; ++j) {
                    const Eigen::MatrixXd prod = ui * projector(dim, j).materialize();
                    if (i == j)
                        require((prod - ui).norm() == 0.0, "projector not idempotent");
                    else
                        require(prod.norm() == 0.0, "projectors not orthogonal");
                }
                sum += ui;
            }
            require((sum - Eigen::MatrixXd::Identity(dim, dim)).norm() == 0.0,
                    "projectors do not sum to the identity");
        }

        auto table = build_structure_shared(kWorked, 60);
        std::mt19937 rng(60601);
        std::uniform_real_distribution<double> dist(-1.5, 1.5);
        for (int trial = 0; trial < 20; ++trial) {
            const DiagonalLabel label{{dist(rng), dist(rng)}, {dist(rng), dist(rng)}};
            const Eigen::Matrix2cd gram = matrix_gram(make_matrix_state(table, label));
            require((gram - Eigen::Matrix2cd::Identity()).norm() <= 1e-10,
                    "Gram matrix strayed from the identity");

            Eigen::Matrix2cd power = Eigen::Matrix2cd::Identity();
            for (int l = 0; l <= 10; ++l) {
                require((bracket_matrix_power(label, l).as_matrix() - power).norm() <= 1e-12,
                        "label power differs from the matrix power");
                power = power * label.as_matrix();
            }
        }
    });

    criterion("slotwise function application equals the matrix series", [] {
        struct Probe {
            ScalarFn fn;
            std::function<double(int)> coeff;
        };
        std::vector<Probe> probes;
        probes.push_back({[](complex<double> w) { return std::exp(w); },
                          [](int k) { return 1.0 / std::tgamma(k + 1.0); }});
        probes.push_back({[](complex<double> w) { return 1.0 / (1.0 - w); },
                          [](int) { return 1.0; }});
        probes.push_back({[](complex<double> w) { return std::sqrt(1.0 + w); },
                          [](int k) {
                              double c = 1.0;
                              for (int j = 0; j < k; ++j) c *= (0.5 - j) / (j + 1.0);
                              return c;
                          }});
        std::mt19937 rng(424242);
        std::uniform_real_distribution<double> dist(-0.55, 0.55);
        for (const Probe& probe : probes) {
            for (int trial = 0; trial < 5; ++trial) {
                const DiagonalLabel label{{dist(rng), dist(rng)}, {dist(rng), dist(rng)}};
                Eigen::Matrix2cd series = Eigen::Matrix2cd::Zero();
                Eigen::Matrix2cd power = Eigen::Matrix2cd::Identity();
                for (int k = 0; k <= 120; ++k) {
                    series += probe.coeff(k) * power;
                    power = power * label.as_matrix();
                }
                require((cauchy_apply(probe.fn, label).as_matrix() - series).norm() <= 1e-10,
                        "slotwise application drifted from the series");
            }
        }
    });

    criterion("entropy series agrees with the closed form", [] {
        for (const double w0 : {0.1, 0.25, 0.5, 0.75, 0.9}) {
            ThermalModel model = thermal_two_level(1.0, 0.0, 0.0);
            model.weights = {w0, 1.0 - w0};
            const double series = entropy_series(model);
            const double closed = entropy_closed(model);
            require_close(series, closed, 1e-9, "entropy at w0 = " + std::to_string(w0));
        }
        require(entropy_closed(thermal_two_level(1.0, 0.0, 0.0)) == std::log(2.0),
                "equal mixing must give ln 2 exactly");
        ThermalModel pure = thermal_two_level(1.0, 0.0, 0.0);
        pure.weights = {1.0, 0.0};
        require(entropy_closed(pure) == 0.0, "pure state entropy must be exactly 0");
        require(entropy_series(pure) == 0.0, "series route must skip zero weights");

        // independent route: matrix elements of rho (rho - I)^k in the
        // 2x2 diagonal representation
        const ThermalModel model = thermal_two_level(1.0, 0.5, 1.5);
        Eigen::Matrix2d rho = Eigen::Matrix2d::Zero();
        rho(0, 0) = model.weights[0];
        rho(1, 1) = model.weights[1];
        const Eigen::Matrix2d shifted = rho - Eigen::Matrix2d::Identity();
        Eigen::Matrix2d power = rho;
        double matrix_sum = 0.0;
        for (int k = 1; k <= 200; ++k) {
            power = power * shifted;
            matrix_sum -= (std::pow(-1.0, k + 1) / k) * power.trace();
        }
        require_close(matrix_sum, entropy_series(model), 1e-9,
                      "matrix-element route vs series route");
    });

    criterion("Husimi positivity and matching expectation routes", [] {
        const StructureTable table = build_structure(kCanonical, 40);
        std::vector<double> energies(41);
        for (int n = 0; n <= 40; ++n) energies[n] = n;
        const ThermalModel model = make_thermal(1.0, energies);
        for (int i = 0; i < 200; ++i) {
            const double x = std::pow(10.0, -3.0 + 6.0 * i / 199.0);
            require(husimi_q(model, table, x, 41) > 0.0,
                    "Husimi value not positive at x = " + std::to_string(x));
        }

        std::mt19937 rng(777);
        std::uniform_real_distribution<double> dist(-2.0, 2.0);
        for (const ModelParams& params : {kCanonical, kWorked}) {
            auto tab = build_structure_shared(params, 40);
            for (int trial = 0; trial < 6; ++trial) {
                const complex<double> z{0.5 * dist(rng), 0.5 * dist(rng)};
                const CoherentState state = make_state(tab, z);
                const DiagonalObservable poly{
                    {dist(rng), dist(rng), dist(rng), dist(rng)}};
                require_close(expect_euler(state, poly), expect_direct(state, poly),
                              1e-10, "coefficient route vs Euler-operator route");
            }
        }
    });

    criterion("CLI verify pipeline end to end", [cli, fixtures] {
        for (const std::string name : {"canonical", "two_level_ho"}) {
            const std::string out = "/tmp/hypercs_acceptance_" + name + ".json";
            const std::string cmd = cli + " verify --suite all --config " + fixtures +
                                    "/" + name + ".json --out " + out +
                                    " > /dev/null 2>&1";
            const int status = std::system(cmd.c_str());
            require(WIFEXITED(status) && WEXITSTATUS(status) == 0,
                    "verify run failed for " + name + ".json");
            const nlohmann::json doc = nlohmann::json::parse(slurp(out));
            require(doc.at("suite") == "all", "aggregate suite label missing");
            require(doc.at("pass").get<bool>(), "aggregate verdict not passing");
            const std::string dumped = doc.dump();
            require(nlohmann::json::parse(dumped).dump() == dumped,
                    "JSON output is not a serialization fixed point");
        }
    });

    std::printf("%d of %d criteria passed\n", g_index - g_failures, g_index);
    return g_failures == 0 ? 0 : 1;
}
