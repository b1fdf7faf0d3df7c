// main.cpp — cavex: collective excitations in rings of coupled doped cavities
//
// Exit codes: 0 success, 1 invalid input or configuration, 2 numerical
// failure (divergence, positivity violation, residual failure, undocumented
// mismatch), 3 I/O failure.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>

#include "cavex/errors.hpp"
#include "commands.hpp"
#include "textio.hpp"

namespace {

using namespace cavex::cli;

template <typename T>
void bind_optional(CLI::App* cmd, const std::string& flag, std::optional<T>& slot,
                   const std::string& description) {
    cmd->add_option_function<T>(
        flag, [&slot](const T& value) { slot = value; }, description);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collective atom-photon excitations in rings of coupled doped cavities"};
    app.require_subcommand(1);

    CountOptions count_options;
    auto* count = app.add_subcommand("count", "Count collective states of a manifold");
    count->add_option("--cavities", count_options.cavities, "number of cavities (>= 2)");
    count->add_option("--excitations", count_options.excitations, "total excitation number");
    count->add_option("--group", count_options.group, "symmetry group: dihedral|cyclic");
    count->add_option("--cutoff", count_options.cutoff, "fock cutoff (default: excitations)");
    count->add_flag("--verbose", count_options.verbose, "also print the orbit table");

    SpectrumOptions spectrum_options;
    auto* spectrum =
        app.add_subcommand("spectrum", "Dressed levels: closed forms vs the eigensolver");
    bind_optional(spectrum, "--cavities", spectrum_options.cavities, "number of cavities");
    bind_optional(spectrum, "--excitations", spectrum_options.excitations, "excitation number");
    bind_optional(spectrum, "--cutoff", spectrum_options.cutoff, "fock cutoff");
    bind_optional(spectrum, "--g", spectrum_options.g, "atom-mode coupling");
    bind_optional(spectrum, "--chi", spectrum_options.chi, "inter-cavity hopping");
    bind_optional(spectrum, "--phi", spectrum_options.phi, "phase selector: 0|pi");
    bind_optional(spectrum, "--group", spectrum_options.group, "dihedral|cyclic");
    bind_optional(spectrum, "--topology", spectrum_options.topology, "ring|all");
    bind_optional(spectrum, "--format", spectrum_options.format, "csv|json");
    bind_optional(spectrum, "--out", spectrum_options.out, "output file (default stdout)");
    spectrum->add_option("--config", spectrum_options.config, "JSON run configuration");

    EvolveOptions evolve_options;
    auto* evolve = app.add_subcommand("evolve", "Integrate the dissipative moment system");
    bind_optional(evolve, "--p", evolve_options.p, "weight ratio c2/c1");
    bind_optional(evolve, "--q", evolve_options.q, "coherent rate lambda_1 tau_1");
    evolve->add_flag("--derive", evolve_options.derive, "derive p, q from --g --chi --gamma");
    bind_optional(evolve, "--g", evolve_options.g, "atom-mode coupling (with --derive)");
    bind_optional(evolve, "--chi", evolve_options.chi, "hopping (with --derive)");
    bind_optional(evolve, "--gamma", evolve_options.gamma, "decay rate (with --derive)");
    bind_optional(evolve, "--omega", evolve_options.omega, "bare resonance (with --derive)");
    bind_optional(evolve, "--x0", evolve_options.x0, "initial upper population");
    bind_optional(evolve, "--y0", evolve_options.y0, "initial lower population");
    bind_optional(evolve, "--u0", evolve_options.u0, "initial real coherence");
    bind_optional(evolve, "--w0", evolve_options.w0, "initial imaginary coherence");
    bind_optional(evolve, "--tau-end", evolve_options.tau_end, "end of the scaled-time window");
    bind_optional(evolve, "--dt", evolve_options.dt, "fixed step");
    bind_optional(evolve, "--format", evolve_options.format, "csv|json");
    bind_optional(evolve, "--out", evolve_options.out, "output file (default stdout)");
    evolve->add_option("--config", evolve_options.config, "JSON run configuration");

    SweepOptions sweep_options;
    auto* sweep = app.add_subcommand("sweep", "Evolve over parameter grids with a manifest");
    sweep->add_option("--config", sweep_options.config, "JSON run configuration with grids")
        ->required();
    sweep->add_option("--out", sweep_options.out, "output directory");
    sweep->add_option("--jobs", sweep_options.jobs, "parallel workers (default 1)");
    bind_optional(sweep, "--format", sweep_options.format, "csv|json");

    CompareOptions compare_options;
    auto* compare_cmd =
        app.add_subcommand("compare", "Cross-validate closed forms against the oracle");
    compare_cmd->add_option("--out", compare_options.out, "report file (default stdout)");
    compare_cmd->add_option("--deviations", compare_options.deviations,
                            "documented-deviation list (JSON)");
    compare_cmd->add_option("--select", compare_options.select,
                            "run only these item ids (comma separated)")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        std::fprintf(stderr, "%s\n%s", err.what(), app.help().c_str());
        return 1;
    }

    try {
        if (count->parsed()) run_count(count_options);
        if (spectrum->parsed()) run_spectrum(spectrum_options);
        if (evolve->parsed()) run_evolve(evolve_options);
        if (sweep->parsed()) run_sweep(sweep_options);
        if (compare_cmd->parsed()) run_compare(compare_options);
    } catch (const cavex::numerical_error& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 2;
    } catch (const io_error& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 3;
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 1;
    }
    return 0;
}
