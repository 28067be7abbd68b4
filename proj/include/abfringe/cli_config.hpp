#pragma once

#include "abfringe/phase_engine.hpp"
#include "abfringe/sweep.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace abfringe::cli {

/// Raw key -> value pairs; keys are the long flag names without "--".
using ConfigMap = std::map<std::string, std::string>;

/// Accepts either a JSON object or flat `key = value` lines (`#` starts a comment).
/// Throws InvalidInput on syntax errors or unknown keys.
ConfigMap parse_config(std::string_view text);

/// Throws sweep::IoError if the file cannot be read.
ConfigMap load_config_file(const std::filesystem::path& path);

/// Every recognised key.
const std::map<std::string, std::string>& known_keys(); // key -> help text

/// Fully resolved run parameters (SI units unless noted).
struct Settings {
    double l1 = 0.01;
    double l2 = 0.01;
    double b = 0.01;
    double ts = 1e-8;
    double td = 1e-8;
    double i0 = 1.0;
    double radius = 1e-3;
    double omega = 0.0;
    double lambda = 1.0;
    std::optional<double> flux; // lambda Phi_s override, Wb
    double energy_ev = 10.0;
    std::optional<double> mass;   // defaults to the electron mass
    std::optional<double> charge; // defaults to +e
    double omega_t_min = 0.0;
    double omega_t_max = 25.0;
    double step = 0.05;
    sweep::TableFormat format = sweep::TableFormat::csv;
    sweep::SweepMode mode = sweep::SweepMode::symmetric_f;
    std::string out = "-";
    unsigned jobs = 1;
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    long steps = 1'000'000; // time-domain oracle
    double fluct_threshold = 1e-2;
    double near_field_threshold = 1e-2;
};

/// Defaults, overridden by `file`, overridden by `flags`.
/// Throws InvalidInput on unparsable values.
Settings resolve_settings(const ConfigMap& file, const ConfigMap& flags);

/// Builds and validates the request (drive from flux if given, else from i0).
phase::PhaseRequest build_request(const Settings& s);

} // namespace abfringe::cli
