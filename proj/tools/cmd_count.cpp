// cmd_count.cpp — `cavex count`: collective-state counting with orbit table

#include <cstdio>
#include <stdexcept>

#include "cavex/symmetry.hpp"
#include "commands.hpp"

namespace cavex::cli {

namespace {

GroupKind parse_group(const std::string& name) {
    if (name == "dihedral") return GroupKind::dihedral;
    if (name == "cyclic") return GroupKind::cyclic;
    throw std::invalid_argument("unknown group kind '" + name + "' (expected dihedral|cyclic)");
}

}  // namespace

void run_count(const CountOptions& options) {
    if (options.cavities < 2) throw std::invalid_argument("count: --cavities must be >= 2");
    if (options.excitations < 0) throw std::invalid_argument("count: --excitations must be >= 0");
    const GroupKind kind = parse_group(options.group);
    const int cutoff = options.cutoff < 0 ? options.excitations : options.cutoff;

    SystemParams params;
    params.n_cavities = options.cavities;
    params.fock_cutoff = cutoff;
    if (cutoff_truncates(params, options.excitations)) {
        std::fprintf(stderr,
                     "warning: fock cutoff %d is below the excitation number %d; "
                     "the manifold is truncated and counts no longer match the exact model\n",
                     cutoff, options.excitations);
    }

    auto basis = enumerate_basis(params, options.excitations);
    auto group = SymmetryGroup::make(kind, options.cavities);
    auto parts = orbits(basis, group);

    std::printf("%zu\n", parts.size());
    if (options.verbose) {
        std::printf("# distinguishable states: %zu, group: %s (order %d)\n", basis.size(),
                    to_string(kind), group.order());
        for (const auto& orbit : parts) {
            std::printf("# orbit %-32s size %d\n", to_string(orbit.representative).c_str(),
                        orbit.size());
        }
    }
}

}  // namespace cavex::cli
