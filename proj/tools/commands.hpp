// commands.hpp — Subcommand options and entry points
//
// Optional fields are set only when the flag was given on the command line;
// run_* resolves flag -> config value -> default, so flags always win.
// Every run_* validates its inputs fully before producing any output and
// throws: std::invalid_argument for bad input (exit 1), cavex::numerical_error
// for numerical failures (exit 2), io_error for filesystem problems (exit 3).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cavex/dynamics.hpp"

namespace cavex::cli {

struct CountOptions {
    int cavities{2};
    int excitations{1};
    std::string group{"dihedral"};
    int cutoff{-1};  // -1: default to excitations
    bool verbose{false};
};

struct SpectrumOptions {
    std::optional<int> cavities;
    std::optional<int> excitations;
    std::optional<int> cutoff;
    std::optional<double> g;
    std::optional<double> chi;
    std::optional<std::string> phi;
    std::optional<std::string> group;
    std::optional<std::string> topology;
    std::optional<std::string> format;
    std::optional<std::string> out;
    std::string config;
};

struct EvolveOptions {
    std::optional<double> p;
    std::optional<double> q;
    bool derive{false};
    std::optional<double> g;
    std::optional<double> chi;
    std::optional<double> gamma;
    std::optional<double> omega;
    std::optional<double> x0, y0, u0, w0;
    std::optional<double> tau_end, dt;
    std::optional<std::string> format;
    std::optional<std::string> out;
    std::string config;
};

struct SweepOptions {
    std::string config;  // required
    std::string out;     // output directory; config output.path when empty
    int jobs{1};
    std::optional<std::string> format;
};

struct CompareOptions {
    std::string out;  // empty: stdout
    std::string deviations;
    std::vector<std::string> select;
};

void run_count(const CountOptions& options);
void run_spectrum(const SpectrumOptions& options);
void run_evolve(const EvolveOptions& options);
void run_sweep(const SweepOptions& options);
void run_compare(const CompareOptions& options);

// series renderers shared by evolve and sweep
std::string render_series_csv(const cavex::TimeSeries& series);
std::string render_series_json(const cavex::TimeSeries& series);

}  // namespace cavex::cli
