// acceptance_main.cpp — End-to-end acceptance suite
//
// Runs every acceptance criterion at its pinned tolerance and prints one
// PASS/FAIL line per criterion. Exit code is the number of failed criteria.

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "cavex/dynamics.hpp"
#include "cavex/rng.hpp"
#include "cavex/spectra.hpp"
#include "cli_runner.hpp"

using namespace cavex;
using test_support::fresh_dir;
using test_support::run_cli;
using test_support::slurp;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

HamiltonianMatrix collective_block(int n, int n_ex, double g, double chi, PhaseSelector phi) {
    SystemParams params;
    params.n_cavities = n;
    params.fock_cutoff = n_ex;
    params.g = g;
    params.chi = chi;
    params.phi = phi;
    auto basis = enumerate_basis(params, n_ex);
    auto group = SymmetryGroup::make(GroupKind::dihedral, n);
    return restrict_to(interaction_hamiltonian(params, RingTopology::ring(n), basis),
                       collective_basis(params, n_ex, group, phi));
}

void criterion_1_counting() {
    const auto start = std::chrono::steady_clock::now();
    struct Case {
        int n, n_ex;
        long collective, distinguishable;
    };
    const std::vector<Case> cases = {
        {2, 1, 2, 4}, {2, 2, 5, 8}, {3, 1, 2, 6}, {3, 2, 5, 18}, {3, 3, 10, 38}};
    bool pass = true;
    std::string detail;
    for (const auto& c : cases) {
        SystemParams params;
        params.n_cavities = c.n;
        params.fock_cutoff = c.n_ex;
        const long dim = static_cast<long>(enumerate_basis(params, c.n_ex).size());
        const long collective = count_collective_states(c.n, c.n_ex, GroupKind::dihedral);
        if (collective != c.collective || dim != c.distinguishable) {
            pass = false;
            detail += "(" + std::to_string(c.n) + "," + std::to_string(c.n_ex) + ") got " +
                      std::to_string(collective) + "/" + std::to_string(dim) + " ";
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 1.0) pass = false;
    char timing[64];
    std::snprintf(timing, sizeof(timing), "exact counts 2/5/2/5/10 over 4/8/6/18/38, %.3fs",
                  elapsed);
    report(1, "collective counting suite", pass, detail.empty() ? timing : detail);
}

void criterion_2_burnside() {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    for (auto kind : {GroupKind::cyclic, GroupKind::dihedral}) {
        for (int n = 2; n <= 4; ++n) {
            for (int n_ex = 0; n_ex <= 4; ++n_ex) {
                if (count_collective_states(n, n_ex, kind) != burnside_count(n, n_ex, kind)) {
                    pass = false;
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 10.0) pass = false;
    char detail[80];
    std::snprintf(detail, sizeof(detail),
                  "orbit enumeration == Burnside for n in 2..4, n_ex in 0..4, both groups, %.3fs",
                  elapsed);
    report(2, "Burnside/orbit cross-check", pass, detail);
}

void criterion_3_single_excitation() {
    SplitMix64 rng(0xacce97a2u);
    double level_dev = 0.0;
    double coeff_dev = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double g = rng.positive_uniform(5.0);
        const double chi = rng.positive_uniform(5.0);
        for (auto phi : {PhaseSelector::zero, PhaseSelector::pi}) {
            auto analytic = two_cavity_single_excitation_levels(g, chi, phi);
            auto oracle = diagonalize(collective_block(2, 1, g, chi, phi));
            auto rep = compare({analytic.begin(), analytic.end()}, oracle, 1e-10);
            level_dev = std::max(level_dev, rep.max_deviation);
            for (int level = 0; level < 2; ++level) {
                for (int c = 0; c < 2; ++c) {
                    coeff_dev = std::max(
                        coeff_dev,
                        std::abs(std::abs(analytic[static_cast<std::size_t>(level)]
                                              .coefficients[static_cast<std::size_t>(c)]) -
                                 std::abs(oracle.eigenvectors(c, level))));
                }
            }
        }
        auto ring = ring_single_excitation_levels(g, chi);
        auto oracle3 = diagonalize(collective_block(3, 1, g, chi, PhaseSelector::zero));
        auto rep3 = compare({ring.begin(), ring.end()}, oracle3, 1e-10);
        level_dev = std::max(level_dev, rep3.max_deviation);
        for (int level = 0; level < 2; ++level) {
            for (int c = 0; c < 2; ++c) {
                // eigenvector-derived coefficients; the published ring photon
                // coefficient is a documented deviation, exempt here
                coeff_dev = std::max(
                    coeff_dev, std::abs(std::abs(ring[static_cast<std::size_t>(level)]
                                                     .coefficients[static_cast<std::size_t>(c)]) -
                                        std::abs(oracle3.eigenvectors(c, level))));
            }
        }
    }
    const bool pass = level_dev <= 1e-10 && coeff_dev <= 1e-10;
    char detail[96];
    std::snprintf(detail, sizeof(detail),
                  "100 points: max level dev %.2e, max |coeff| dev %.2e (tol 1e-10)", level_dev,
                  coeff_dev);
    report(3, "single-excitation closed forms vs oracle", pass, detail);
}

void criterion_4_reference_table() {
    auto rep = ring_two_excitation_report(1.0);
    bool pass = rep.analytic.size() == 5 && rep.oracle.size() == 5;
    const auto& reference = ring_two_excitation_reference_levels();
    for (std::size_t k = 0; pass && k < 5; ++k) {
        if (rep.analytic[k] != reference[k]) pass = false;
    }
    double trace = 0.0;
    for (double v : rep.oracle) trace += v;
    if (std::abs(trace - 3.0) > 1e-10) pass = false;

    auto scaled = ring_two_excitation_report(2.0);
    for (std::size_t k = 0; k < 5; ++k) {
        if (std::abs(scaled.oracle[k] - rep.oracle[k]) > 1e-10) pass = false;
    }
    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "reference values tabulated; trace dev %.2e; scaling ok; verdict recorded: %s",
                  std::abs(trace - 3.0), rep.all_match() ? "match" : "deviates");
    report(4, "published three-cavity two-excitation table", pass, detail);
}

void criterion_5_documented_deviation() {
    bool pass = true;
    for (double g : {1.0, 1.7}) {
        auto oracle = diagonalize(collective_block(2, 2, g, 0.0, PhaseSelector::zero));
        const std::vector<double> expected = {-2.0 * g, -std::sqrt(2.0) * g, 0.0,
                                              std::sqrt(2.0) * g, 2.0 * g};
        for (Eigen::Index k = 0; k < 5; ++k) {
            if (std::abs(oracle.eigenvalues(k) - expected[static_cast<std::size_t>(k)]) > 1e-10) {
                pass = false;
            }
        }
        auto verbatim = two_cavity_double_excitation_eigenvalues(g, 0.0, PhaseSelector::zero);
        const std::vector<double> printed = {-2.0 * g, -g, 0.0, g, 2.0 * g};
        for (std::size_t k = 0; k < 5; ++k) {
            if (std::abs(verbatim[k] - printed[k]) > 1e-12) pass = false;
        }
    }
    auto cli = run_cli("compare --select two-cavity-two-excitation-levels");
    std::string verdict = "missing";
    if (cli.exit_code == 0) {
        auto doc = nlohmann::json::parse(cli.out);
        verdict = doc.at("items").at(0).at("verdict").get<std::string>();
    }
    if (cli.exit_code != 0 || verdict != "documented-deviation") pass = false;
    report(5, "two-excitation chi=0 documented deviation", pass,
           "oracle {0,±√2g,±2g}, formulas {0,±g,±2g}, compare verdict " + verdict +
               ", exit " + std::to_string(cli.exit_code));
}

void criterion_6_dynamics_oracle() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double p : {0.0, 0.5, 1.0}) {
        for (double q : {0.0, 3.0}) {
            for (MomentState s0 :
                 {MomentState{1.0, 0.0, 0.0, 0.0}, MomentState{0.5, 0.5, 0.0, 0.0}}) {
                auto series = integrate_moments(s0, p, q, 10.0, 1e-3);
                for (const auto& row : series.rows) {
                    auto exact = closed_form_moments(s0, p, q, row.tau);
                    worst = std::max({worst, std::abs(row.x - exact.x),
                                      std::abs(row.y - exact.y), std::abs(row.u - exact.u),
                                      std::abs(row.w - exact.w)});
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    const bool pass = worst <= 1e-8 && elapsed < 5.0;
    char detail[96];
    std::snprintf(detail, sizeof(detail),
                  "sup-norm RK4 vs matrix exponential %.2e (tol 1e-8), %.2fs", worst, elapsed);
    report(6, "dynamics oracle equivalence", pass, detail);
}

void criterion_7_qualitative() {
    bool pass = true;
    std::string why;
    auto series = integrate_moments({1.0, 0.0, 0.0, 0.0}, 1.0, 3.0, 40.0, 1e-3);

    int sign_changes = 0;
    double prev = 0.0;
    double y_max = 0.0;
    std::size_t y_argmax = 0;
    double y_at_10 = 0.0;
    double s_max = 0.0;
    std::size_t s_argmax = 0;
    for (std::size_t k = 0; k < series.rows.size(); ++k) {
        const auto& row = series.rows[k];
        if (row.tau <= 5.0) {
            if (prev * row.u < 0.0) ++sign_changes;
            if (row.u != 0.0) prev = row.u;
        }
        if (row.y > y_max) {
            y_max = row.y;
            y_argmax = k;
        }
        if (row.tau <= 10.0 + 1e-9) y_at_10 = row.y;
        if (row.entropy > s_max) {
            s_max = row.entropy;
            s_argmax = k;
        }
    }
    if (sign_changes < 2) {
        pass = false;
        why += "u sign changes " + std::to_string(sign_changes) + " ";
    }
    if (!(y_max > 0.0) || y_argmax == 0 || y_argmax + 1 == series.rows.size() ||
        !(y_at_10 < 0.1 * y_max)) {
        pass = false;
        why += "y profile ";
    }
    if (series.rows.front().entropy != 0.0) {
        pass = false;
        why += "S(0) ";
    }
    if (s_argmax == 0 || s_argmax + 1 == series.rows.size()) {
        pass = false;
        why += "S interior max ";
    }
    if (!(series.rows.back().entropy <= 1e-4)) {
        pass = false;
        why += "S(40) ";
    }
    const double mixed = entropy({0.5, 0.5, 0.0, 0.0});
    if (std::abs(mixed - std::log(2.0)) > 1e-9) {
        pass = false;
        why += "S_mixed(0) ";
    }
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "u flips %d times; y max %.4f at tau %.2f, y(10)/max %.1e; S max %.3f; "
                  "S(40) %.1e; S_mixed(0)-ln2 %.1e",
                  sign_changes, y_max, series.rows[y_argmax].tau, y_at_10 / y_max, s_max,
                  series.rows.back().entropy, std::abs(mixed - std::log(2.0)));
    report(7, "nutation, transfer and entropy profile", pass, why.empty() ? detail : why);
}

void criterion_8_generator_consistency() {
    bool pass = true;
    double population_dev = 0.0;
    for (double chi : {0.0, 0.7, 2.0}) {
        auto params = derive_dynamics_params(1.0, chi, 0.45);
        for (auto form : {GeneratorForm::lindblad, GeneratorForm::commutator}) {
            auto cmp = compare_moment_coefficients(params, form);
            population_dev = std::max(population_dev, cmp.max_population_row_difference);
            if (std::abs(cmp.coherence_rate_generator - 0.5 * cmp.coherence_rate_verbatim) >
                1e-12) {
                pass = false;
            }
        }
    }
    if (population_dev > 1e-8) pass = false;

    auto cli = run_cli("compare --select coherence-decay-rate");
    std::string verdict = "missing";
    if (cli.exit_code == 0) {
        auto doc = nlohmann::json::parse(cli.out);
        verdict = doc.at("items").at(0).at("verdict").get<std::string>();
    }
    if (cli.exit_code != 0 || verdict != "documented-deviation") pass = false;
    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "x,y rows dev %.2e (tol 1e-8); coherence (p^2+1)/2 vs (p^2+1) verdict %s",
                  population_dev, verdict.c_str());
    report(8, "generator consistency", pass, detail);
}

void criterion_9_determinism() {
    bool pass = true;
    std::string why;
    const std::vector<std::string> commands = {
        "count --cavities 3 --excitations 3",
        "spectrum --cavities 2 --excitations 1 --g 1 --chi 1",
        "spectrum --cavities 3 --excitations 2 --g 1 --chi 1 --format json",
        "evolve --p 1 --q 3 --tau-end 1 --dt 0.001",
        "compare",
    };
    for (const auto& command : commands) {
        auto first = run_cli(command);
        auto second = run_cli(command);
        if (first.out != second.out || first.exit_code != second.exit_code) {
            pass = false;
            why += "[" + command + "] ";
        }
    }

    // sweep: files and manifest byte-identical across runs
    auto dir = fresh_dir("acceptance_sweep");
    {
        std::ofstream config(dir / "sweep.json");
        config << R"({"system": {"gamma": 0.5},
                      "dynamics": {"derive": true, "tau_end": 1.0, "dt": 0.01},
                      "sweep": {"g": [0.5, 1.0], "chi": [0.0, 1.0]}})";
    }
    auto run_a = run_cli("sweep --config " + (dir / "sweep.json").string() + " --out " +
                         (dir / "a").string());
    auto run_b = run_cli("sweep --config " + (dir / "sweep.json").string() + " --out " +
                         (dir / "b").string() + " --jobs 4");
    if (run_a.exit_code != 0 || run_b.exit_code != 0) {
        pass = false;
        why += "[sweep exit] ";
    } else {
        for (const auto& entry : std::filesystem::directory_iterator(dir / "a")) {
            const auto name = entry.path().filename();
            if (slurp(entry.path()) != slurp(dir / "b" / name)) {
                pass = false;
                why += "[sweep " + name.string() + "] ";
            }
        }
    }
    std::filesystem::remove_all(dir);
    report(9, "CLI determinism", pass,
           pass ? "all golden commands and sweep outputs byte-identical" : why);
}

}  // namespace

int main() {
    criterion_1_counting();
    criterion_2_burnside();
    criterion_3_single_excitation();
    criterion_4_reference_table();
    criterion_5_documented_deviation();
    criterion_6_dynamics_oracle();
    criterion_7_qualitative();
    criterion_8_generator_consistency();
    criterion_9_determinism();
    std::printf("acceptance: %d/9 criteria passed\n", 9 - failures);
    return failures;
}
