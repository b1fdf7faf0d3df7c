// symmetry.hpp — Ring symmetry group, orbits, and collective states
//
// The geometric symmetry of n cavities at the vertices of a regular polygon:
// cyclic rotations, or the full dihedral group (rotations + reflections).
// Orbits of product states under the group action define the collective
// (indistinguishable-excitation) basis. Burnside's lemma, evaluated from the
// cycle structure of each permutation alone, gives an independent count that
// never touches the orbit partition.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cavex/hilbert.hpp"

namespace cavex {

enum class GroupKind : std::uint8_t { cyclic, dihedral };

const char* to_string(GroupKind kind);

// perm[i] is the destination of cavity i
using CavityPermutation = std::vector<int>;

struct SymmetryGroup {
    GroupKind kind{GroupKind::dihedral};
    int n{0};
    std::vector<CavityPermutation> elements;  // deduplicated, sorted

    // Rotations for cyclic, rotations + reflections for dihedral. For n = 2
    // the two kinds coincide (identity + swap). Throws on n < 2.
    static SymmetryGroup make(GroupKind kind, int n);

    int order() const { return static_cast<int>(elements.size()); }
};

// Relabels atoms and photons by perm; excitation number is unchanged.
// Throws std::invalid_argument on length mismatch or non-bijective perm.
ProductState apply_permutation(const ProductState& s, const CavityPermutation& perm);

struct Orbit {
    ProductState representative;        // lexicographically smallest member
    std::vector<ProductState> members;  // ascending, pairwise distinct

    int size() const { return static_cast<int>(members.size()); }
};

// Partition of `basis` into disjoint orbits, ordered by representative.
// The basis must be closed under the group action; a state whose image is
// missing triggers std::invalid_argument naming that state.
std::vector<Orbit> orbits(const std::vector<ProductState>& basis, const SymmetryGroup& group);

// Number of orbits of the exact manifold (fock cutoff = n_ex).
long count_collective_states(int n_cavities, int n_ex, GroupKind kind);

// Burnside average (1/|G|) sum_g |Fix(g)|. Fixed states of g are counted per
// cycle of g via a small generating-function convolution, independent of
// orbit enumeration. fock_cutoff < 0 means "use n_ex".
long burnside_count(int n_cavities, int n_ex, GroupKind kind, int fock_cutoff = -1);

// Normalized superposition of one group orbit with phase phi.
struct CollectiveState {
    std::map<ProductState, std::complex<double>> amplitudes;
    PhaseSelector phi{PhaseSelector::zero};
    int n_ex{0};

    std::string label() const;  // "sym(|e,0;g,0>)" / "alt(...)"
};

// phi = 0: equal-amplitude 1/sqrt(|orbit|) sum over the members.
// phi = pi: (rep - other)/sqrt(2), defined for two-member orbits only;
// nullopt otherwise (an absent value is a valid outcome, not an error).
std::optional<CollectiveState> build_collective_state(const Orbit& orbit, PhaseSelector phi);

// One collective state per orbit supporting `phi`, in canonical orbit order.
// For phi = 0 this spans the full symmetric subspace of the manifold.
std::vector<CollectiveState> collective_basis(const SystemParams& params, int n_ex,
                                              const SymmetryGroup& group, PhaseSelector phi);

}  // namespace cavex
