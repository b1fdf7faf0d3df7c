// cmd_sweep.cpp — `cavex sweep`: parameter grids, per-point series, manifest

#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cavex/dynamics.hpp"
#include "commands.hpp"
#include "runconfig.hpp"
#include "sha256.hpp"
#include "textio.hpp"

namespace cavex::cli {

namespace {

struct GridPoint {
    double g;
    double chi;
    double gamma;
};

struct PointResult {
    std::string file;
    std::string sha256;
};

std::string point_file_name(const GridPoint& point, const std::string& extension) {
    return "g" + format_sig12(point.g) + "_chi" + format_sig12(point.chi) + "_gamma" +
           format_sig12(point.gamma) + "." + extension;
}

}  // namespace

void run_sweep(const SweepOptions& options) {
    if (options.config.empty()) {
        throw std::invalid_argument("sweep: --config is required");
    }
    RunConfig config = load_run_config(options.config);
    if (!config.has_sweep) {
        throw std::invalid_argument("sweep: config has no sweep section");
    }
    if (config.p || config.q) {
        throw std::invalid_argument(
            "sweep: grids run over physical parameters; remove explicit dynamics.p/q and "
            "use derive semantics");
    }
    const int jobs = options.jobs;
    if (jobs < 1) throw std::invalid_argument("sweep: --jobs must be >= 1");

    // absent axes fall back to the system value as a singleton grid
    auto axis = [](const std::vector<double>& grid, std::optional<double> fallback,
                   const char* name) {
        if (!grid.empty()) return grid;
        if (!fallback) {
            throw std::invalid_argument(std::string("sweep: no grid and no system value for ") +
                                        name);
        }
        return std::vector<double>{*fallback};
    };
    const auto gs = axis(config.sweep_g, config.g, "g");
    const auto chis = axis(config.sweep_chi, config.chi, "chi");
    const auto gammas = axis(config.sweep_gamma, config.gamma, "gamma");

    const double omega = config.omega.value_or(0.0);
    const MomentState s0{config.x0.value_or(1.0), config.y0.value_or(0.0),
                         config.u0.value_or(0.0), config.w0.value_or(0.0)};
    const double tau_end = config.tau_end.value_or(10.0);
    const double dt = config.dt.value_or(1e-3);
    if (!(dt > 0.0) || !(tau_end > 0.0)) {
        throw std::invalid_argument("sweep: dynamics.dt and dynamics.tau_end must be > 0");
    }
    const std::string format = options.format.value_or(config.out_format.value_or("csv"));
    if (format != "csv" && format != "json") {
        throw std::invalid_argument("sweep: format must be csv or json");
    }
    std::string out_dir = options.out;
    if (out_dir.empty()) out_dir = config.out_path.value_or("");
    if (out_dir.empty()) {
        throw std::invalid_argument("sweep: --out directory (or output.path) is required");
    }

    std::vector<GridPoint> points;
    for (double g : gs) {
        for (double chi : chis) {
            for (double gamma : gammas) points.push_back({g, chi, gamma});
        }
    }

    const std::filesystem::path directory(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    {
        // probe writability before any computation
        const auto probe = directory / ".cavex_probe";
        try {
            write_file_atomic(probe, "");
        } catch (const io_error&) {
            throw io_error("sweep: output directory " + directory.string() + " is not writable");
        }
        std::filesystem::remove(probe, ec);
    }

    // one worker per point at most; results indexed by point, manifest written
    // last so a partial run never leaves a manifest behind
    std::vector<PointResult> results(points.size());
    std::vector<std::string> written;
    std::mutex written_mutex;
    std::atomic<std::size_t> cursor{0};
    std::vector<std::exception_ptr> failures(points.size());

    auto worker = [&] {
        for (;;) {
            const std::size_t index = cursor.fetch_add(1);
            if (index >= points.size()) return;
            try {
                const GridPoint& point = points[index];
                auto params = derive_dynamics_params(point.g, point.chi, point.gamma, omega);
                TimeSeries series = integrate_moments(s0, params.p, params.q, tau_end, dt);
                const std::string content =
                    format == "csv" ? render_series_csv(series) : render_series_json(series);
                const std::string name = point_file_name(point, format);
                write_file_atomic(directory / name, content);
                {
                    std::lock_guard<std::mutex> lock(written_mutex);
                    written.push_back(name);
                }
                results[index] = PointResult{name, sha256_hex(content)};
            } catch (...) {
                failures[index] = std::current_exception();
                return;
            }
        }
    };

    const std::size_t thread_count = std::min<std::size_t>(points.size(),
                                                           static_cast<std::size_t>(jobs));
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < thread_count; ++t) threads.emplace_back(worker);
    for (auto& thread : threads) thread.join();

    for (std::size_t index = 0; index < points.size(); ++index) {
        if (failures[index]) {
            // a failed sweep leaves no partial result set behind
            for (const auto& name : written) {
                std::filesystem::remove(directory / name, ec);
            }
            std::rethrow_exception(failures[index]);
        }
    }

    nlohmann::json manifest_points = nlohmann::json::array();
    for (std::size_t index = 0; index < points.size(); ++index) {
        manifest_points.push_back({
            {"point",
             {{"g", points[index].g}, {"chi", points[index].chi}, {"gamma", points[index].gamma}}},
            {"file", results[index].file},
            {"sha256", results[index].sha256},
        });
    }
    nlohmann::json manifest{{"command", "sweep"}, {"points", manifest_points}};
    write_file_atomic(directory / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace cavex::cli
