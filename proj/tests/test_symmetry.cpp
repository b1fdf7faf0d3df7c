#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

#include "cavex/symmetry.hpp"

using namespace cavex;

namespace {

ProductState make_state(std::initializer_list<char> levels, std::initializer_list<int> photons) {
    ProductState s;
    for (char c : levels) s.atoms.push_back(c == 'e' ? AtomLevel::excited : AtomLevel::ground);
    s.photons.assign(photons);
    return s;
}

CavityPermutation compose(const CavityPermutation& a, const CavityPermutation& b) {
    CavityPermutation out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = b[static_cast<std::size_t>(a[i])];
    }
    return out;
}

}  // namespace

TEST_CASE("group elements form a group") {
    for (auto kind : {GroupKind::cyclic, GroupKind::dihedral}) {
        for (int n = 2; n <= 4; ++n) {
            auto group = SymmetryGroup::make(kind, n);
            std::set<CavityPermutation> elements(group.elements.begin(), group.elements.end());
            CAPTURE(to_string(kind));
            CAPTURE(n);
            CHECK(elements.size() == group.elements.size());

            CavityPermutation identity(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) identity[static_cast<std::size_t>(i)] = i;
            CHECK(elements.count(identity) == 1);

            // closure and inverses by exhaustive composition
            for (const auto& a : group.elements) {
                bool has_inverse = false;
                for (const auto& b : group.elements) {
                    auto ab = compose(a, b);
                    CHECK(elements.count(ab) == 1);
                    if (ab == identity) has_inverse = true;
                }
                CHECK(has_inverse);
            }
        }
    }
}

TEST_CASE("cyclic and dihedral coincide for two cavities") {
    auto cyclic = SymmetryGroup::make(GroupKind::cyclic, 2);
    auto dihedral = SymmetryGroup::make(GroupKind::dihedral, 2);
    CHECK(cyclic.elements == dihedral.elements);
    CHECK(cyclic.order() == 2);
}

TEST_CASE("apply_permutation relabels cavities") {
    auto swapped = apply_permutation(make_state({'e', 'g'}, {0, 0}), {1, 0});
    CHECK(swapped == make_state({'g', 'e'}, {0, 0}));

    auto s = make_state({'e', 'g', 'g'}, {2, 1, 0});
    CHECK(apply_permutation(s, {0, 1, 2}) == s);

    auto rotated = apply_permutation(make_state({'g', 'g', 'g'}, {1, 0, 0}), {1, 2, 0});
    CHECK(rotated == make_state({'g', 'g', 'g'}, {0, 1, 0}));

    CHECK(excitation_number(apply_permutation(s, {2, 0, 1})) == excitation_number(s));

    CHECK_THROWS_AS(apply_permutation(s, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(apply_permutation(s, {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("orbit partitions") {
    SystemParams params;
    params.n_cavities = 2;
    params.fock_cutoff = 1;
    auto basis = enumerate_basis(params, 1);
    auto group = SymmetryGroup::make(GroupKind::dihedral, 2);
    auto parts = orbits(basis, group);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].representative == make_state({'e', 'g'}, {0, 0}));
    CHECK(parts[1].representative == make_state({'g', 'g'}, {0, 1}));

    std::size_t total = 0;
    for (const auto& orbit : parts) {
        total += orbit.members.size();
        // applying every group element to the representative recreates the members
        std::set<ProductState> images;
        for (const auto& perm : group.elements) {
            images.insert(apply_permutation(orbit.representative, perm));
        }
        CHECK(std::vector<ProductState>(images.begin(), images.end()) == orbit.members);
        for (const auto& member : orbit.members) {
            CHECK(excitation_number(member) == excitation_number(orbit.representative));
        }
    }
    CHECK(total == basis.size());

    params.n_cavities = 3;
    params.fock_cutoff = 2;
    auto basis32 = enumerate_basis(params, 2);
    REQUIRE(basis32.size() == 18);
    CHECK(orbits(basis32, SymmetryGroup::make(GroupKind::dihedral, 3)).size() == 5);
    CHECK(orbits(basis32, SymmetryGroup::make(GroupKind::cyclic, 3)).size() == 6);

    // singleton basis
    std::vector<ProductState> vacuum = {make_state({'g', 'g', 'g'}, {0, 0, 0})};
    CHECK(orbits(vacuum, SymmetryGroup::make(GroupKind::dihedral, 3)).size() == 1);

    // basis not closed under the action: error names the missing state
    std::vector<ProductState> open = {make_state({'e', 'g'}, {0, 0})};
    CHECK_THROWS_WITH_AS(orbits(open, group),
                         doctest::Contains("|g,0;e,0>"), std::invalid_argument);
}

TEST_CASE("collective counting reproduces n_ex^2 + 1") {
    CHECK(count_collective_states(2, 1, GroupKind::dihedral) == 2);
    CHECK(count_collective_states(2, 2, GroupKind::dihedral) == 5);
    CHECK(count_collective_states(3, 1, GroupKind::dihedral) == 2);
    CHECK(count_collective_states(3, 2, GroupKind::dihedral) == 5);
    CHECK(count_collective_states(3, 3, GroupKind::dihedral) == 10);
    // only the dihedral group reproduces the law; rotations alone give 6
    CHECK(count_collective_states(3, 2, GroupKind::cyclic) == 6);
}

TEST_CASE("orbit enumeration equals the Burnside average everywhere") {
    for (auto kind : {GroupKind::cyclic, GroupKind::dihedral}) {
        for (int n = 2; n <= 4; ++n) {
            for (int n_ex = 0; n_ex <= 4; ++n_ex) {
                CAPTURE(to_string(kind));
                CAPTURE(n);
                CAPTURE(n_ex);
                CHECK(count_collective_states(n, n_ex, kind) == burnside_count(n, n_ex, kind));
            }
        }
    }
}

TEST_CASE("four-excitation counts, reported") {
    // The quadratic law predicts 17 and the published claim is 19; orbit
    // enumeration (checked against Burnside above) gives these instead.
    CHECK(count_collective_states(3, 4, GroupKind::dihedral) == 15);
    CHECK(count_collective_states(3, 4, GroupKind::cyclic) == 22);
    CHECK(count_collective_states(4, 4, GroupKind::dihedral) == 36);
    CHECK(count_collective_states(4, 4, GroupKind::cyclic) == 51);
    MESSAGE("collective states for four excitations: (3,4) dihedral=15 cyclic=22, "
            "(4,4) dihedral=36 cyclic=51");
}

TEST_CASE("collective state construction") {
    SystemParams params;
    params.n_cavities = 2;
    params.fock_cutoff = 1;
    auto group = SymmetryGroup::make(GroupKind::dihedral, 2);
    auto parts = orbits(enumerate_basis(params, 1), group);
    REQUIRE(parts.size() == 2);

    auto symmetric = build_collective_state(parts[0], PhaseSelector::zero);
    REQUIRE(symmetric.has_value());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (const auto& [state, amp] : symmetric->amplitudes) {
        CHECK(amp.real() == doctest::Approx(inv_sqrt2).epsilon(1e-14));
        CHECK(amp.imag() == 0.0);
    }

    auto alternating = build_collective_state(parts[0], PhaseSelector::pi);
    REQUIRE(alternating.has_value());
    CHECK(alternating->amplitudes.at(make_state({'e', 'g'}, {0, 0})).real() ==
          doctest::Approx(inv_sqrt2));
    CHECK(alternating->amplitudes.at(make_state({'g', 'e'}, {0, 0})).real() ==
          doctest::Approx(-inv_sqrt2));

    // three-cavity one-excitation orbit: equal 1/sqrt(3) amplitudes, no pi form
    SystemParams three;
    three.n_cavities = 3;
    three.fock_cutoff = 1;
    auto group3 = SymmetryGroup::make(GroupKind::dihedral, 3);
    auto parts3 = orbits(enumerate_basis(three, 1), group3);
    REQUIRE(parts3.size() == 2);
    auto sym3 = build_collective_state(parts3[0], PhaseSelector::zero);
    REQUIRE(sym3.has_value());
    CHECK(sym3->amplitudes.size() == 3);
    for (const auto& [state, amp] : sym3->amplitudes) {
        CHECK(amp.real() == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    }
    CHECK_FALSE(build_collective_state(parts3[0], PhaseSelector::pi).has_value());

    // singleton orbit keeps amplitude one
    SystemParams pair;
    pair.n_cavities = 2;
    pair.fock_cutoff = 2;
    auto parts22 = orbits(enumerate_basis(pair, 2), group);
    auto singleton = std::find_if(parts22.begin(), parts22.end(),
                                  [](const Orbit& o) { return o.size() == 1; });
    REQUIRE(singleton != parts22.end());
    auto lone = build_collective_state(*singleton, PhaseSelector::zero);
    REQUIRE(lone.has_value());
    CHECK(lone->amplitudes.begin()->second.real() == doctest::Approx(1.0));
}

TEST_CASE("collective bases are orthonormal and permutation invariant") {
    SystemParams params;
    params.n_cavities = 3;
    params.fock_cutoff = 3;
    auto group = SymmetryGroup::make(GroupKind::dihedral, 3);
    auto states = collective_basis(params, 3, group, PhaseSelector::zero);
    REQUIRE(states.size() == 10);

    for (std::size_t a = 0; a < states.size(); ++a) {
        for (std::size_t b = 0; b < states.size(); ++b) {
            std::complex<double> overlap = 0.0;
            for (const auto& [state, amp] : states[a].amplitudes) {
                auto it = states[b].amplitudes.find(state);
                if (it != states[b].amplitudes.end()) overlap += std::conj(amp) * it->second;
            }
            CHECK(std::abs(overlap - (a == b ? 1.0 : 0.0)) < 1e-12);
        }
    }

    // phi = 0 states are fixed points of every group permutation
    for (const auto& state : states) {
        for (const auto& perm : group.elements) {
            for (const auto& [ket, amp] : state.amplitudes) {
                auto image = apply_permutation(ket, perm);
                REQUIRE(state.amplitudes.count(image) == 1);
                CHECK(std::abs(state.amplitudes.at(image) - amp) < 1e-14);
            }
        }
    }
}

TEST_CASE("collective basis for zero excitations is the vacuum") {
    SystemParams params;
    params.n_cavities = 4;
    params.fock_cutoff = 1;
    auto group = SymmetryGroup::make(GroupKind::dihedral, 4);
    auto states = collective_basis(params, 0, group, PhaseSelector::zero);
    REQUIRE(states.size() == 1);
    CHECK(states.front().amplitudes.size() == 1);
    CHECK(states.front().n_ex == 0);
}
