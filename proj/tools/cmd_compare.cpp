// cmd_compare.cpp — `cavex compare`: the cross-validation battery
//
// Each item measures one closed form (or the published reference table, or
// the generator-induced moment system) against the numerical oracle and is
// classified match / documented-deviation / mismatch. Only a mismatch —
// a deviation beyond tolerance whose id is not in the documented list —
// fails the command.

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cavex/dynamics.hpp"
#include "cavex/errors.hpp"
#include "cavex/rng.hpp"
#include "cavex/spectra.hpp"
#include "commands.hpp"
#include "deviations.hpp"
#include "textio.hpp"

namespace cavex::cli {

namespace {

struct CompareItem {
    std::string id;
    std::string context;
    double max_deviation{0.0};
    double tolerance{0.0};
    std::string verdict;  // filled after classification
    nlohmann::json detail;  // optional extra payload
};

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

std::vector<CompareItem> build_battery() {
    std::vector<CompareItem> items;
    constexpr int kPoints = 100;

    // single-excitation closed forms vs the oracle, both phases, pair + ring
    {
        SplitMix64 rng(0x5eed0001u);
        double level_dev = 0.0;
        double coeff_dev = 0.0;
        for (int k = 0; k < kPoints; ++k) {
            const double g = rng.positive_uniform(5.0);
            const double chi = rng.positive_uniform(5.0);
            for (auto phi : {PhaseSelector::zero, PhaseSelector::pi}) {
                auto analytic = two_cavity_single_excitation_levels(g, chi, phi);
                auto oracle = diagonalize(collective_block(2, 1, g, chi, phi));
                auto report =
                    compare({analytic.begin(), analytic.end()}, oracle, 1e-10);
                level_dev = std::max(level_dev, report.max_deviation);
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
        }
        items.push_back({"two-cavity-one-excitation-levels",
                         "closed-form doublet vs oracle, 100 points (g, chi) in (0,5]^2, "
                         "phi in {0, pi}",
                         level_dev, 1e-10, "", {}});
        items.push_back({"two-cavity-one-excitation-coefficients",
                         "closed-form coefficient magnitudes vs oracle eigenvectors",
                         coeff_dev, 1e-10, "", {}});
    }
    {
        SplitMix64 rng(0x5eed0002u);
        double level_dev = 0.0;
        double eig_coeff_dev = 0.0;
        double printed_dev = 0.0;
        for (int k = 0; k < kPoints; ++k) {
            const double g = rng.positive_uniform(5.0);
            const double chi = rng.positive_uniform(5.0);
            auto analytic = ring_single_excitation_levels(g, chi);
            auto oracle = diagonalize(collective_block(3, 1, g, chi, PhaseSelector::zero));
            auto report = compare({analytic.begin(), analytic.end()}, oracle, 1e-10);
            level_dev = std::max(level_dev, report.max_deviation);
            for (int level = 0; level < 2; ++level) {
                const auto& dressed = analytic[static_cast<std::size_t>(level)];
                for (int c = 0; c < 2; ++c) {
                    eig_coeff_dev = std::max(
                        eig_coeff_dev,
                        std::abs(std::abs(dressed.coefficients[static_cast<std::size_t>(c)]) -
                                 std::abs(oracle.eigenvectors(c, level))));
                }
                printed_dev = std::max(
                    printed_dev,
                    std::abs(ring_photon_coefficient_reference(g, chi, dressed.lambda) -
                             std::abs(oracle.eigenvectors(1, level))));
            }
        }
        items.push_back({"ring-one-excitation-levels",
                         "ring doublet closed form vs oracle, 100 points", level_dev, 1e-10,
                         "", {}});
        items.push_back({"ring-one-excitation-coefficients",
                         "eigenvector-derived ring coefficients vs oracle", eig_coeff_dev,
                         1e-10, "", {}});
        items.push_back({"ring-photon-coefficient-closed-form",
                         "published ring photon coefficient vs oracle", printed_dev, 1e-10,
                         "", {}});
    }

    // two-excitation closed roots vs oracle (including the chi = 0 line where
    // the oracle gives ±sqrt(2) g instead of ±g)
    {
        double level_dev = 0.0;
        for (auto [g, chi] : {std::pair{1.0, 0.0}, std::pair{1.0, 1.0}, std::pair{2.0, 0.5}}) {
            auto values = two_cavity_double_excitation_eigenvalues(g, chi, PhaseSelector::zero);
            std::vector<DressedLevel> levels;
            for (double lambda : values) levels.push_back({lambda, {}, 0, 2});
            auto oracle = diagonalize(collective_block(2, 2, g, chi, PhaseSelector::zero));
            auto report = compare(levels, oracle, 1e-10);
            level_dev = std::max(level_dev, report.max_deviation);
        }
        items.push_back({"two-cavity-two-excitation-levels",
                         "verbatim two-excitation roots vs oracle at (g,chi) = (1,0), (1,1), "
                         "(2,0.5)",
                         level_dev, 1e-10, "", {}});
    }

    // the published three-cavity two-excitation reference table
    {
        auto report = ring_two_excitation_report(1.0);
        CompareItem item;
        item.id = "ring-two-excitation-reference";
        item.context = report.context;
        item.max_deviation = report.max_deviation;
        item.tolerance = report.tolerance;
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t k = 0; k < report.analytic.size(); ++k) {
            rows.push_back({{"reference", report.analytic[k]},
                            {"oracle", report.oracle[k]},
                            {"deviation", report.deviation[k]}});
        }
        item.detail = {{"rows", rows}, {"notes", report.notes}};
        items.push_back(std::move(item));
    }

    // moment system vs the collective-jump generator
    {
        double population_dev = 0.0;
        double coherence_gap = 0.0;
        double forms_gap = 0.0;
        for (double chi : {0.0, 0.7, 2.0}) {
            auto params = derive_dynamics_params(1.0, chi, 0.45);
            for (auto form : {GeneratorForm::lindblad, GeneratorForm::commutator}) {
                auto cmp = compare_moment_coefficients(params, form);
                population_dev = std::max(population_dev, cmp.max_population_row_difference);
                coherence_gap = std::max(
                    coherence_gap,
                    std::abs(cmp.coherence_rate_verbatim - cmp.coherence_rate_generator));
            }
            // the two generator constructions themselves
            auto lindblad = build_decay_generator(params, GeneratorForm::lindblad);
            auto commutator = build_decay_generator(params, GeneratorForm::commutator);
            SplitMix64 rng(0x5eed0003u);
            for (int trial = 0; trial < 20; ++trial) {
                Eigen::Matrix3cd w;
                for (int r = 0; r < 3; ++r) {
                    for (int c = 0; c < 3; ++c) {
                        w(r, c) = std::complex<double>(rng.positive_uniform(1.0) - 0.5,
                                                       rng.positive_uniform(1.0) - 0.5);
                    }
                }
                w = 0.5 * (w + w.adjoint()).eval();
                w += (1.0 - w.trace()) / 3.0 * Eigen::Matrix3cd::Identity();
                forms_gap = std::max(forms_gap, (lindblad.apply(w) - commutator.apply(w))
                                                    .cwiseAbs()
                                                    .maxCoeff());
            }
        }
        items.push_back({"moment-population-rows",
                         "x and y rows of the generator-induced moment system vs the verbatim "
                         "system, chi in {0, 0.7, 2}",
                         population_dev, 1e-8, "", {}});
        items.push_back({"coherence-decay-rate",
                         "coherence decay: verbatim (p^2+1) vs generator (p^2+1)/2",
                         coherence_gap, 1e-8, "", {}});
        items.push_back({"generator-forms-agreement",
                         "verbatim double-commutator vs textbook dissipator on random states",
                         forms_gap, 1e-12, "", {}});
    }

    return items;
}

}  // namespace

void run_compare(const CompareOptions& options) {
    DeviationList documented = load_deviation_list(options.deviations);

    auto items = build_battery();
    if (!options.select.empty()) {
        std::vector<CompareItem> filtered;
        for (auto& item : items) {
            if (std::find(options.select.begin(), options.select.end(), item.id) !=
                options.select.end()) {
                filtered.push_back(std::move(item));
            }
        }
        items = std::move(filtered);
    }
    if (items.empty()) {
        throw std::invalid_argument("compare: empty comparison set");
    }

    bool any_mismatch = false;
    for (auto& item : items) {
        if (item.max_deviation <= item.tolerance) {
            item.verdict = "match";
        } else if (documented.ids.count(item.id) > 0) {
            item.verdict = "documented-deviation";
        } else {
            item.verdict = "mismatch";
            any_mismatch = true;
        }
    }

    nlohmann::json report_items = nlohmann::json::array();
    for (const auto& item : items) {
        nlohmann::json entry{{"id", item.id},
                             {"context", item.context},
                             {"max_deviation", item.max_deviation},
                             {"tolerance", item.tolerance},
                             {"verdict", item.verdict}};
        if (!item.detail.is_null()) entry["detail"] = item.detail;
        report_items.push_back(std::move(entry));
    }
    nlohmann::json report{{"items", report_items},
                          {"documented_list", documented.source},
                          {"overall", any_mismatch ? "mismatch" : "ok"}};
    const std::string rendered = report.dump(2) + "\n";
    if (options.out.empty()) {
        std::fputs(rendered.c_str(), stdout);
    } else {
        write_file_atomic(options.out, rendered);
    }

    if (any_mismatch) {
        throw numerical_error("compare: mismatch outside the documented-deviation list");
    }
}

}  // namespace cavex::cli
