// hilbert.hpp — Truncated product basis for a ring of doped cavities
//
// Each cavity holds one two-level atom and one bosonic mode truncated at
// `fock_cutoff` photons. The interaction conserves the total excitation
// number (excited atoms + photons), so most work happens on fixed-excitation
// manifolds; with fock_cutoff >= n_ex the manifold is exact.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cavex {

// e^{i phi} = +1 or -1; the only phases the collective construction admits.
enum class PhaseSelector : std::uint8_t { zero, pi };

constexpr double phase_sign(PhaseSelector phi) {
    return phi == PhaseSelector::zero ? 1.0 : -1.0;
}

const char* to_string(PhaseSelector phi);

// Physical constants of the cavity ring. Angular-frequency units, hbar = 1.
struct SystemParams {
    int n_cavities{2};
    int fock_cutoff{1};   // max photons kept per cavity mode
    double g{1.0};        // atom-mode coupling
    double chi{0.0};      // inter-cavity photon hopping
    double omega{0.0};    // bare resonance of atoms and modes
    double gamma{0.0};    // collective decay rate
    PhaseSelector phi{PhaseSelector::zero};

    // throws std::invalid_argument on n_cavities < 2, fock_cutoff < 0,
    // g < 0 or gamma < 0
    void validate() const;
};

// `excited` sorts before `ground` so that atomic excitations come first in
// the canonical basis order (and orbit representatives read naturally).
enum class AtomLevel : std::uint8_t { excited = 0, ground = 1 };

// One distinguishable basis ket: per-cavity atomic level + photon number.
// Value type with structural equality; cavity 1 is index 0.
struct ProductState {
    std::vector<AtomLevel> atoms;
    std::vector<int> photons;

    friend auto operator<=>(const ProductState&, const ProductState&) = default;
};

// #excited atoms + total photons
int excitation_number(const ProductState& s);

// rendered as "|e,0;g,1>"
std::string to_string(const ProductState& s);

// All states with total excitation exactly n_ex, canonical ascending order,
// no duplicates. When fock_cutoff < n_ex the manifold is truncated (see
// cutoff_truncates); callers that need faithful counting should keep
// fock_cutoff >= n_ex. Throws std::invalid_argument when n_ex is negative or
// exceeds n_cavities * (1 + fock_cutoff).
std::vector<ProductState> enumerate_basis(const SystemParams& params, int n_ex);

// The full truncated space: every excitation number 0..n*(1+cutoff),
// canonical order.
std::vector<ProductState> enumerate_space(const SystemParams& params);

// True when fock_cutoff < n_ex, i.e. enumerate_basis drops states and the
// manifold no longer represents the exact model.
bool cutoff_truncates(const SystemParams& params, int n_ex);

// Canonical bijection ProductState <-> {0..D-1} over a fixed basis.
class BasisIndex {
public:
    explicit BasisIndex(std::vector<ProductState> states);

    // -1 when the state is not in the basis
    int index_of(const ProductState& s) const;
    const ProductState& state(int i) const { return states_[static_cast<std::size_t>(i)]; }
    int size() const { return static_cast<int>(states_.size()); }
    const std::vector<ProductState>& states() const { return states_; }

private:
    std::vector<ProductState> states_;
    std::map<ProductState, int> index_;
};

}  // namespace cavex
