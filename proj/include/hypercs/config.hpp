#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "hypercs/matrixstates.hpp"

namespace hypercs {

/// Configuration or usage problem: maps to process exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct GridSpec {
    double min = 1e-3;
    double max = 1e3;
    int points = 200;
};

enum class OutputFormat { csv, json };

OutputFormat parse_format(const std::string& name);  // ConfigError on unknown

/// One run's worth of model, thermal, and output settings.  Every field has
/// a default; a JSON config file overrides defaults and command-line flags
/// override the file.
struct RunConfig {
    ModelParams params;  // empty parameter lists: the undeformed oscillator
    int n_max = 40;
    double beta = 1.0;
    double hbar_omega = 1.0;
    double e0 = 0.0;
    DiagonalLabel label{{1.0, 0.0}, {0.5, 0.0}};
    std::map<std::string, double> tolerances = {
        {"identity", 1e-6}, {"pmoments", 1e-6}, {"entropy", 1e-9}, {"twolevel", 1e-8}};
    std::string output_path;
    OutputFormat format = OutputFormat::json;
    bool truncate_norm = true;
    GridSpec grid;

    /// ConfigError on non-positive tolerances, n_max < 1, bad thermal or
    /// grid settings, or invalid model parameters.
    void validate() const;
};

/// Applies a parsed JSON object onto an existing config.  Unknown keys are
/// rejected so typos fail loudly.  Throws ConfigError with a diagnostic.
void apply_config_json(RunConfig& config, const nlohmann::json& doc);

/// Reads and applies a JSON config file.  Throws ConfigError on I/O or parse
/// problems (message carries the parser diagnostic).
RunConfig load_config(const std::string& path);

nlohmann::json config_to_json(const RunConfig& config);

}  // namespace hypercs
