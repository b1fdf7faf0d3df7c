// symmetry.cpp

#include "cavex/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cavex {

const char* to_string(GroupKind kind) {
    return kind == GroupKind::cyclic ? "cyclic" : "dihedral";
}

SymmetryGroup SymmetryGroup::make(GroupKind kind, int n) {
    if (n < 2) {
        throw std::invalid_argument("SymmetryGroup: ring size must be >= 2");
    }
    std::set<CavityPermutation> elements;
    for (int k = 0; k < n; ++k) {
        CavityPermutation rotation(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) rotation[static_cast<std::size_t>(i)] = (i + k) % n;
        elements.insert(std::move(rotation));
        if (kind == GroupKind::dihedral) {
            CavityPermutation reflection(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                reflection[static_cast<std::size_t>(i)] = ((k - i) % n + n) % n;
            }
            elements.insert(std::move(reflection));
        }
    }
    SymmetryGroup group;
    group.kind = kind;
    group.n = n;
    group.elements.assign(elements.begin(), elements.end());
    return group;
}

ProductState apply_permutation(const ProductState& s, const CavityPermutation& perm) {
    const std::size_t n = s.atoms.size();
    if (perm.size() != n || s.photons.size() != n) {
        throw std::invalid_argument("apply_permutation: length mismatch");
    }
    std::vector<bool> hit(n, false);
    ProductState out;
    out.atoms.resize(n);
    out.photons.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int t = perm[i];
        if (t < 0 || static_cast<std::size_t>(t) >= n || hit[static_cast<std::size_t>(t)]) {
            throw std::invalid_argument("apply_permutation: not a bijection on cavities");
        }
        hit[static_cast<std::size_t>(t)] = true;
        out.atoms[static_cast<std::size_t>(t)] = s.atoms[i];
        out.photons[static_cast<std::size_t>(t)] = s.photons[i];
    }
    return out;
}

std::vector<Orbit> orbits(const std::vector<ProductState>& basis, const SymmetryGroup& group) {
    BasisIndex index(basis);
    std::vector<bool> assigned(basis.size(), false);
    std::vector<Orbit> out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (assigned[i]) continue;
        std::set<ProductState> members;
        for (const auto& perm : group.elements) {
            ProductState image = apply_permutation(basis[i], perm);
            const int j = index.index_of(image);
            if (j < 0) {
                throw std::invalid_argument("orbits: basis not closed under the group action, missing " +
                                            to_string(image));
            }
            assigned[static_cast<std::size_t>(j)] = true;
            members.insert(std::move(image));
        }
        Orbit orbit;
        orbit.members.assign(members.begin(), members.end());
        orbit.representative = orbit.members.front();
        out.push_back(std::move(orbit));
    }
    std::sort(out.begin(), out.end(),
              [](const Orbit& a, const Orbit& b) { return a.representative < b.representative; });
    return out;
}

long count_collective_states(int n_cavities, int n_ex, GroupKind kind) {
    SystemParams params;
    params.n_cavities = n_cavities;
    params.fock_cutoff = n_ex;
    auto basis = enumerate_basis(params, n_ex);
    auto group = SymmetryGroup::make(kind, n_cavities);
    return static_cast<long>(orbits(basis, group).size());
}

namespace {

std::vector<int> cycle_lengths(const CavityPermutation& perm) {
    const std::size_t n = perm.size();
    std::vector<bool> seen(n, false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(perm[j]);
            ++len;
        }
        lengths.push_back(len);
    }
    return lengths;
}

}  // namespace

long burnside_count(int n_cavities, int n_ex, GroupKind kind, int fock_cutoff) {
    if (n_ex < 0) throw std::invalid_argument("burnside_count: n_ex must be >= 0");
    const int cutoff = fock_cutoff < 0 ? n_ex : fock_cutoff;
    auto group = SymmetryGroup::make(kind, n_cavities);

    // A state fixed by g is constant on each cycle: one atom level and one
    // photon number per cycle. Count by convolving, per cycle of length L,
    // the weight polynomial sum_{a in {0,1}} sum_{m<=cutoff} x^{L(a+m)}.
    long total = 0;
    for (const auto& perm : group.elements) {
        std::vector<long> poly(static_cast<std::size_t>(n_ex) + 1, 0);
        poly[0] = 1;
        for (int len : cycle_lengths(perm)) {
            std::vector<long> factor(static_cast<std::size_t>(n_ex) + 1, 0);
            for (int a = 0; a <= 1; ++a) {
                for (int m = 0; m <= cutoff; ++m) {
                    const long e = static_cast<long>(len) * (a + m);
                    if (e <= n_ex) factor[static_cast<std::size_t>(e)] += 1;
                }
            }
            std::vector<long> next(static_cast<std::size_t>(n_ex) + 1, 0);
            for (int i = 0; i <= n_ex; ++i) {
                if (poly[static_cast<std::size_t>(i)] == 0) continue;
                for (int j = 0; i + j <= n_ex; ++j) {
                    next[static_cast<std::size_t>(i + j)] +=
                        poly[static_cast<std::size_t>(i)] * factor[static_cast<std::size_t>(j)];
                }
            }
            poly = std::move(next);
        }
        total += poly[static_cast<std::size_t>(n_ex)];
    }
    const long order = static_cast<long>(group.elements.size());
    if (total % order != 0) {
        // Burnside's lemma guarantees divisibility; a remainder means a bug.
        throw std::logic_error("burnside_count: fixed-point sum not divisible by group order");
    }
    return total / order;
}

std::string CollectiveState::label() const {
    std::string prefix = (phi == PhaseSelector::zero) ? "sym(" : "alt(";
    if (amplitudes.empty()) return prefix + ")";
    return prefix + to_string(amplitudes.begin()->first) + ")";
}

std::optional<CollectiveState> build_collective_state(const Orbit& orbit, PhaseSelector phi) {
    if (orbit.members.empty()) return std::nullopt;
    CollectiveState state;
    state.phi = phi;
    state.n_ex = excitation_number(orbit.representative);
    if (phi == PhaseSelector::zero) {
        const double amp = 1.0 / std::sqrt(static_cast<double>(orbit.members.size()));
        for (const auto& member : orbit.members) {
            state.amplitudes.emplace(member, amp);
        }
        return state;
    }
    // phi = pi exists only as (rep - partner)/sqrt(2) on two-member orbits
    if (orbit.members.size() != 2) return std::nullopt;
    const double amp = 1.0 / std::sqrt(2.0);
    state.amplitudes.emplace(orbit.members[0], amp);
    state.amplitudes.emplace(orbit.members[1], -amp);
    return state;
}

std::vector<CollectiveState> collective_basis(const SystemParams& params, int n_ex,
                                              const SymmetryGroup& group, PhaseSelector phi) {
    auto basis = enumerate_basis(params, n_ex);
    std::vector<CollectiveState> out;
    for (const auto& orbit : orbits(basis, group)) {
        if (auto state = build_collective_state(orbit, phi)) {
            out.push_back(std::move(*state));
        }
    }
    return out;
}

}  // namespace cavex
