// cmd_evolve.cpp — `cavex evolve`: moment time series to CSV/JSON

#include <json.hpp>

#include <cstdio>
#include <stdexcept>

#include "cavex/dynamics.hpp"
#include "commands.hpp"
#include "runconfig.hpp"
#include "textio.hpp"

namespace cavex::cli {

namespace {

struct ResolvedEvolve {
    double p;
    double q;
    MomentState s0;
    double tau_end;
    double dt;
    std::string format;
    std::string out;
};

ResolvedEvolve resolve(const EvolveOptions& options) {
    RunConfig config;
    if (!options.config.empty()) config = load_run_config(options.config);

    const bool derive = options.derive || config.derive;
    const std::optional<double> p = options.p ? options.p : config.p;
    const std::optional<double> q = options.q ? options.q : config.q;
    const bool explicit_rates = p.has_value() || q.has_value();
    if (derive == explicit_rates) {
        throw std::invalid_argument(
            "evolve: give exactly one of (--p and --q) or (--derive with --g --chi --gamma)");
    }

    ResolvedEvolve r;
    if (derive) {
        const std::optional<double> g = options.g ? options.g : config.g;
        const std::optional<double> chi = options.chi ? options.chi : config.chi;
        const std::optional<double> gamma = options.gamma ? options.gamma : config.gamma;
        if (!g || !chi || !gamma) {
            throw std::invalid_argument("evolve: --derive needs --g, --chi and --gamma");
        }
        const double omega = options.omega.value_or(config.omega.value_or(0.0));
        auto params = derive_dynamics_params(*g, *chi, *gamma, omega);
        r.p = params.p;
        r.q = params.q;
    } else {
        if (!p || !q) {
            throw std::invalid_argument("evolve: both --p and --q are required");
        }
        r.p = *p;
        r.q = *q;
    }
    r.s0.x = options.x0.value_or(config.x0.value_or(1.0));
    r.s0.y = options.y0.value_or(config.y0.value_or(0.0));
    r.s0.u = options.u0.value_or(config.u0.value_or(0.0));
    r.s0.w = options.w0.value_or(config.w0.value_or(0.0));
    r.tau_end = options.tau_end.value_or(config.tau_end.value_or(10.0));
    r.dt = options.dt.value_or(config.dt.value_or(1e-3));
    r.format = options.format.value_or(config.out_format.value_or("csv"));
    r.out = options.out.value_or(config.out_path.value_or(""));

    if (!(r.dt > 0.0) || !(r.tau_end > 0.0)) {
        throw std::invalid_argument("evolve: --dt and --tau-end must be > 0");
    }
    if (!(r.p >= 0.0)) {
        throw std::invalid_argument("evolve: p must be >= 0");
    }
    if (r.format != "csv" && r.format != "json") {
        throw std::invalid_argument("evolve: --format must be csv or json");
    }
    return r;
}

}  // namespace

std::string render_series_csv(const TimeSeries& series) {
    std::string out = "tau,x,y,u,w,S,ground\n";
    for (const auto& row : series.rows) {
        out += join_csv({format_sig12(row.tau), format_sig12(row.x), format_sig12(row.y),
                         format_sig12(row.u), format_sig12(row.w), format_sig12(row.entropy),
                         format_sig12(row.ground)});
        out += '\n';
    }
    return out;
}

std::string render_series_json(const TimeSeries& series) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : series.rows) {
        rows.push_back({row.tau, row.x, row.y, row.u, row.w, row.entropy, row.ground});
    }
    nlohmann::json doc{{"header", {"tau", "x", "y", "u", "w", "S", "ground"}},
                       {"rows", rows}};
    return doc.dump(2) + "\n";
}

void run_evolve(const EvolveOptions& options) {
    ResolvedEvolve resolved = resolve(options);
    TimeSeries series =
        integrate_moments(resolved.s0, resolved.p, resolved.q, resolved.tau_end, resolved.dt);
    const std::string rendered = resolved.format == "csv" ? render_series_csv(series)
                                                          : render_series_json(series);
    if (resolved.out.empty()) {
        std::fputs(rendered.c_str(), stdout);
    } else {
        write_file_atomic(resolved.out, rendered);
    }
}

}  // namespace cavex::cli
