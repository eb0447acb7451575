#include "hypercs/config.hpp"

#include <fstream>

namespace hypercs {

namespace {

using nlohmann::json;

std::vector<double> real_list(const json& node, const std::string& where) {
    if (!node.is_array()) throw ConfigError(where + " must be an array of numbers");
    std::vector<double> out;
    for (const auto& v : node) {
        if (!v.is_number()) throw ConfigError(where + " must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

std::complex<double> complex_pair(const json& node, const std::string& where) {
    const auto pair = real_list(node, where);
    if (pair.size() != 2) throw ConfigError(where + " must be [re, im]");
    return {pair[0], pair[1]};
}

double positive_number(const json& node, const std::string& where) {
    if (!node.is_number()) throw ConfigError(where + " must be a number");
    return node.get<double>();
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw ConfigError("unknown output format '" + name + "' (expected csv or json)");
}

void RunConfig::validate() const {
    try {
        params.validate();
    } catch (const std::invalid_argument& err) {
        throw ConfigError(err.what());
    }
    if (n_max < 1) throw ConfigError("n_max must be at least 1");
    if (!(beta > 0.0)) throw ConfigError("beta must be positive");
    if (!(hbar_omega > 0.0)) throw ConfigError("hbar_omega must be positive");
    for (const auto& [name, tol] : tolerances)
        if (!(tol > 0.0)) throw ConfigError("tolerance '" + name + "' must be positive");
    if (!(grid.min > 0.0) || !(grid.max > grid.min))
        throw ConfigError("grid needs 0 < min < max");
    if (grid.points < 1) throw ConfigError("grid needs at least one point");
}

void apply_config_json(RunConfig& config, const nlohmann::json& doc) {
    if (!doc.is_object()) throw ConfigError("config root must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key == "params") {
            if (!value.is_object()) throw ConfigError("params must be {\"a\": [...], \"b\": [...]}");
            for (const auto& [pkey, pval] : value.items()) {
                if (pkey == "a")
                    config.params.upper = real_list(pval, "params.a");
                else if (pkey == "b")
                    config.params.lower = real_list(pval, "params.b");
                else
                    throw ConfigError("unknown params key '" + pkey + "'");
            }
        } else if (key == "n_max") {
            if (!value.is_number_integer()) throw ConfigError("n_max must be an integer");
            config.n_max = value.get<int>();
        } else if (key == "beta") {
            config.beta = positive_number(value, "beta");
        } else if (key == "hbar_omega") {
            config.hbar_omega = positive_number(value, "hbar_omega");
        } else if (key == "e0") {
            if (!value.is_number()) throw ConfigError("e0 must be a number");
            config.e0 = value.get<double>();
        } else if (key == "label") {
            if (!value.is_object()) throw ConfigError("label must be {\"z\": [re,im], \"sigma\": [re,im]}");
            for (const auto& [lkey, lval] : value.items()) {
                if (lkey == "z")
                    config.label.slot0 = complex_pair(lval, "label.z");
                else if (lkey == "sigma")
                    config.label.slot1 = complex_pair(lval, "label.sigma");
                else
                    throw ConfigError("unknown label key '" + lkey + "'");
            }
        } else if (key == "tolerances") {
            if (!value.is_object()) throw ConfigError("tolerances must be an object");
            for (const auto& [tkey, tval] : value.items()) {
                if (config.tolerances.find(tkey) == config.tolerances.end())
                    throw ConfigError("unknown tolerance '" + tkey + "'");
                config.tolerances[tkey] = positive_number(tval, "tolerances." + tkey);
            }
        } else if (key == "output_path") {
            if (!value.is_string()) throw ConfigError("output_path must be a string");
            config.output_path = value.get<std::string>();
        } else if (key == "format") {
            if (!value.is_string()) throw ConfigError("format must be a string");
            config.format = parse_format(value.get<std::string>());
        } else if (key == "truncate_norm") {
            if (!value.is_boolean()) throw ConfigError("truncate_norm must be a boolean");
            config.truncate_norm = value.get<bool>();
        } else if (key == "grid") {
            if (!value.is_object()) throw ConfigError("grid must be {min, max, points}");
            for (const auto& [gkey, gval] : value.items()) {
                if (gkey == "min")
                    config.grid.min = positive_number(gval, "grid.min");
                else if (gkey == "max")
                    config.grid.max = positive_number(gval, "grid.max");
                else if (gkey == "points") {
                    if (!gval.is_number_integer())
                        throw ConfigError("grid.points must be an integer");
                    config.grid.points = gval.get<int>();
                } else {
                    throw ConfigError("unknown grid key '" + gkey + "'");
                }
            }
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw ConfigError("config parse failure in '" + path + "': " + err.what());
    }
    RunConfig config;
    apply_config_json(config, doc);
    return config;
}

nlohmann::json config_to_json(const RunConfig& config) {
    nlohmann::json doc;
    doc["params"] = {{"a", config.params.upper}, {"b", config.params.lower}};
    doc["n_max"] = config.n_max;
    doc["beta"] = config.beta;
    doc["hbar_omega"] = config.hbar_omega;
    doc["e0"] = config.e0;
    doc["label"] = {
        {"z", {config.label.slot0.real(), config.label.slot0.imag()}},
        {"sigma", {config.label.slot1.real(), config.label.slot1.imag()}}};
    doc["tolerances"] = config.tolerances;
    doc["output_path"] = config.output_path;
    doc["format"] = config.format == OutputFormat::csv ? "csv" : "json";
    doc["truncate_norm"] = config.truncate_norm;
    doc["grid"] = {{"min", config.grid.min}, {"max", config.grid.max},
                   {"points", config.grid.points}};
    return doc;
}

}  // namespace hypercs
