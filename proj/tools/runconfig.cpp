// runconfig.cpp

#include "runconfig.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

#include "textio.hpp"

namespace cavex::cli {

namespace {

using nlohmann::json;

void read_number(const json& section, const char* key, std::optional<double>& slot) {
    if (section.contains(key)) slot = section.at(key).get<double>();
}

void read_int(const json& section, const char* key, std::optional<int>& slot) {
    if (section.contains(key)) slot = section.at(key).get<int>();
}

std::vector<double> read_grid(const json& sweep, const char* key) {
    std::vector<double> grid;
    if (!sweep.contains(key)) return grid;
    for (const auto& value : sweep.at(key)) grid.push_back(value.get<double>());
    if (grid.empty()) {
        throw std::invalid_argument(std::string("config: sweep grid '") + key + "' is empty");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw std::invalid_argument(std::string("config: sweep grid '") + key +
                                        "' must be strictly increasing");
        }
    }
    return grid;
}

}  // namespace

PhaseSelector parse_phi(const std::string& text) {
    if (text == "0") return PhaseSelector::zero;
    if (text == "pi") return PhaseSelector::pi;
    throw std::invalid_argument("phi must be '0' or 'pi', got '" + text + "'");
}

RunConfig load_run_config(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument("config: " + std::string(err.what()));
    }
    if (!doc.is_object()) {
        throw std::invalid_argument("config: document must be a JSON object");
    }

    RunConfig config;
    if (doc.contains("system")) {
        const auto& system = doc.at("system");
        read_int(system, "cavities", config.cavities);
        read_int(system, "cutoff", config.cutoff);
        read_number(system, "g", config.g);
        read_number(system, "chi", config.chi);
        read_number(system, "omega", config.omega);
        read_number(system, "gamma", config.gamma);
        if (system.contains("phi")) {
            const auto& phi = system.at("phi");
            if (phi.is_string()) {
                config.phi = phi.get<std::string>();
            } else {
                const double value = phi.get<double>();
                if (value == 0.0) {
                    config.phi = "0";
                } else if (std::abs(value - 3.14159265358979323846) <= 1e-9) {
                    config.phi = "pi";
                } else {
                    throw std::invalid_argument("config: system.phi must be 0 or pi");
                }
            }
        }
    }
    if (doc.contains("group")) config.group = doc.at("group").get<std::string>();
    if (doc.contains("excitations")) config.excitations = doc.at("excitations").get<int>();
    if (doc.contains("dynamics")) {
        const auto& dynamics = doc.at("dynamics");
        read_number(dynamics, "p", config.p);
        read_number(dynamics, "q", config.q);
        if (dynamics.contains("derive")) config.derive = dynamics.at("derive").get<bool>();
        read_number(dynamics, "x0", config.x0);
        read_number(dynamics, "y0", config.y0);
        read_number(dynamics, "u0", config.u0);
        read_number(dynamics, "w0", config.w0);
        read_number(dynamics, "tau_end", config.tau_end);
        read_number(dynamics, "dt", config.dt);
    }
    if (doc.contains("sweep")) {
        config.has_sweep = true;
        const auto& sweep = doc.at("sweep");
        if (!sweep.is_object()) {
            throw std::invalid_argument("config: 'sweep' must be an object of grids");
        }
        config.sweep_g = read_grid(sweep, "g");
        config.sweep_chi = read_grid(sweep, "chi");
        config.sweep_gamma = read_grid(sweep, "gamma");
        if (config.sweep_g.empty() && config.sweep_chi.empty() && config.sweep_gamma.empty()) {
            throw std::invalid_argument("config: sweep section defines no grid");
        }
    }
    if (doc.contains("output")) {
        const auto& output = doc.at("output");
        if (output.contains("path")) config.out_path = output.at("path").get<std::string>();
        if (output.contains("format")) {
            config.out_format = output.at("format").get<std::string>();
            if (*config.out_format != "csv" && *config.out_format != "json") {
                throw std::invalid_argument("config: output.format must be csv or json");
            }
        }
    }
    return config;
}

}  // namespace cavex::cli
