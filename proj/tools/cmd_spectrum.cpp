// cmd_spectrum.cpp — `cavex spectrum`: dressed levels, oracle vs closed forms

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <optional>
#include <stdexcept>

#include "cavex/spectra.hpp"
#include "commands.hpp"
#include "runconfig.hpp"
#include "textio.hpp"

namespace cavex::cli {

namespace {

struct ResolvedSpectrum {
    int cavities;
    int excitations;
    int cutoff;
    double g;
    double chi;
    std::string phi;
    std::string group;
    std::string topology;
    std::string format;
    std::string out;
};

ResolvedSpectrum resolve(const SpectrumOptions& options) {
    RunConfig config;
    if (!options.config.empty()) config = load_run_config(options.config);
    ResolvedSpectrum r;
    r.cavities = options.cavities.value_or(config.cavities.value_or(2));
    r.excitations = options.excitations.value_or(config.excitations.value_or(1));
    r.cutoff = options.cutoff.value_or(config.cutoff.value_or(-1));
    r.g = options.g.value_or(config.g.value_or(1.0));
    r.chi = options.chi.value_or(config.chi.value_or(0.0));
    r.phi = options.phi.value_or(config.phi.value_or("0"));
    r.group = options.group.value_or(config.group.value_or("dihedral"));
    r.topology = options.topology.value_or("ring");
    r.format = options.format.value_or(config.out_format.value_or("csv"));
    r.out = options.out.value_or(config.out_path.value_or(""));
    return r;
}

struct SpectrumTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;  // cells already formatted
};

std::string format_coefficients(const Eigen::MatrixXcd& vectors, Eigen::Index column) {
    std::string joined;
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
        if (r > 0) joined += ';';
        joined += format_sig12(vectors(r, column).real());
    }
    return joined;
}

SpectrumTable build_table(const ResolvedSpectrum& options) {
    SystemParams params;
    params.n_cavities = options.cavities;
    params.fock_cutoff = options.cutoff < 0 ? options.excitations : options.cutoff;
    params.g = options.g;
    params.chi = options.chi;
    params.phi = parse_phi(options.phi);
    params.validate();

    GroupKind kind;
    if (options.group == "dihedral") {
        kind = GroupKind::dihedral;
    } else if (options.group == "cyclic") {
        kind = GroupKind::cyclic;
    } else {
        throw std::invalid_argument("spectrum: unknown group '" + options.group + "'");
    }
    if (options.topology != "ring" && options.topology != "all") {
        throw std::invalid_argument("spectrum: --topology must be ring or all");
    }
    RingTopology topology = options.topology == "all"
                                ? RingTopology::all_pairs(options.cavities)
                                : RingTopology::ring(options.cavities);
    if (cutoff_truncates(params, options.excitations)) {
        std::fprintf(stderr, "warning: fock cutoff %d truncates the %d-excitation manifold\n",
                     params.fock_cutoff, options.excitations);
    }

    auto basis = enumerate_basis(params, options.excitations);
    auto group = SymmetryGroup::make(kind, options.cavities);
    auto collective = collective_basis(params, options.excitations, group, params.phi);
    if (collective.empty()) {
        throw std::invalid_argument(
            "spectrum: no collective states for this configuration (phi = pi exists only "
            "for two-member orbits)");
    }
    auto block = restrict_to(interaction_hamiltonian(params, topology, basis), collective);
    Spectrum oracle = diagonalize(block);
    const auto dim = static_cast<std::size_t>(oracle.eigenvalues.size());

    // closed forms where they exist and cover the whole block
    std::vector<double> analytic;
    if (options.cavities == 2 && options.excitations == 1 && dim == 2) {
        auto levels = two_cavity_single_excitation_levels(params.g, params.chi, params.phi);
        analytic = {levels[0].lambda, levels[1].lambda};
    } else if (options.cavities == 2 && options.excitations == 2 && dim == 5) {
        auto values = two_cavity_double_excitation_eigenvalues(params.g, params.chi, params.phi);
        analytic.assign(values.begin(), values.end());
    } else if (options.cavities >= 3 && options.excitations == 1 && dim == 2 &&
               options.topology == "ring") {
        auto levels = ring_single_excitation_levels(params.g, params.chi);
        analytic = {levels[0].lambda, levels[1].lambda};
    }
    std::sort(analytic.begin(), analytic.end());

    // published reference values exist for the three-cavity two-excitation
    // block at g = chi (they are quoted in units of g)
    std::optional<std::vector<double>> reference;
    if (options.cavities == 3 && options.excitations == 2 && kind == GroupKind::dihedral &&
        params.phi == PhaseSelector::zero && params.g > 0.0 && params.g == params.chi &&
        dim == 5) {
        reference.emplace();
        for (double value : ring_two_excitation_reference_levels()) {
            reference->push_back(value * params.g);
        }
    }

    SpectrumTable table;
    table.header = {"level", "analytic", "oracle", "deviation"};
    if (reference) table.header.push_back("reference");
    table.header.push_back("coefficients");
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<std::string> row;
        row.push_back(std::to_string(k + 1));
        if (k < analytic.size()) {
            row.push_back(format_sig12(analytic[k]));
            row.push_back(format_sig12(oracle.eigenvalues(static_cast<Eigen::Index>(k))));
            row.push_back(format_sig12(
                std::abs(analytic[k] - oracle.eigenvalues(static_cast<Eigen::Index>(k)))));
        } else {
            row.push_back("");
            row.push_back(format_sig12(oracle.eigenvalues(static_cast<Eigen::Index>(k))));
            row.push_back("");
        }
        if (reference) row.push_back(format_sig12((*reference)[k]));
        row.push_back(format_coefficients(oracle.eigenvectors, static_cast<Eigen::Index>(k)));
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string render_csv(const SpectrumTable& table) {
    std::string out = join_csv(table.header) + "\n";
    for (const auto& row : table.rows) out += join_csv(row) + "\n";
    return out;
}

std::string render_json(const SpectrumTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json item;
        for (std::size_t c = 0; c < table.header.size(); ++c) {
            item[table.header[c]] = row[c];
        }
        rows.push_back(std::move(item));
    }
    return nlohmann::json{{"spectrum", rows}}.dump(2) + "\n";
}

}  // namespace

void run_spectrum(const SpectrumOptions& options) {
    ResolvedSpectrum resolved = resolve(options);
    if (resolved.excitations < 0) {
        throw std::invalid_argument("spectrum: --excitations must be >= 0");
    }
    if (resolved.format != "csv" && resolved.format != "json") {
        throw std::invalid_argument("spectrum: --format must be csv or json");
    }

    auto table = build_table(resolved);
    const std::string rendered =
        resolved.format == "csv" ? render_csv(table) : render_json(table);
    if (resolved.out.empty()) {
        std::fputs(rendered.c_str(), stdout);
    } else {
        write_file_atomic(resolved.out, rendered);
    }
}

}  // namespace cavex::cli
