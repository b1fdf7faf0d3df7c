// runconfig.hpp — The JSON run-configuration document
//
// A single JSON object with optional sections; command-line flags override
// config values. See docs/config-schema.md for the schema.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cavex/hilbert.hpp"

namespace cavex::cli {

struct RunConfig {
    // system
    std::optional<int> cavities;
    std::optional<int> cutoff;
    std::optional<double> g;
    std::optional<double> chi;
    std::optional<double> omega;
    std::optional<double> gamma;
    std::optional<std::string> phi;
    // top level
    std::optional<std::string> group;
    std::optional<int> excitations;
    // dynamics
    std::optional<double> p;
    std::optional<double> q;
    bool derive{false};
    std::optional<double> x0, y0, u0, w0;
    std::optional<double> tau_end, dt;
    // sweep grids (validated non-empty, strictly increasing when present)
    bool has_sweep{false};
    std::vector<double> sweep_g;
    std::vector<double> sweep_chi;
    std::vector<double> sweep_gamma;
    // output
    std::optional<std::string> out_path;
    std::optional<std::string> out_format;
};

// Parses and validates the document; throws std::invalid_argument on schema
// violations and io_error when the file cannot be read.
RunConfig load_run_config(const std::string& path);

PhaseSelector parse_phi(const std::string& text);

}  // namespace cavex::cli
