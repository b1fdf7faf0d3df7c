#include <doctest.h>

#include <algorithm>
#include <set>

#include "cavex/hilbert.hpp"

using namespace cavex;

namespace {

ProductState make_state(std::initializer_list<char> levels, std::initializer_list<int> photons) {
    ProductState s;
    for (char c : levels) s.atoms.push_back(c == 'e' ? AtomLevel::excited : AtomLevel::ground);
    s.photons.assign(photons);
    return s;
}

// Independent oracle: scan the whole product space and count states with the
// requested excitation number. Never reuses enumerate_basis internals.
long scan_count(int n, int cutoff, int n_ex) {
    long count = 0;
    const long photon_words = [&] {
        long p = 1;
        for (int i = 0; i < n; ++i) p *= (cutoff + 1);
        return p;
    }();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int atomic = 0;
        for (int i = 0; i < n; ++i) atomic += (mask >> i) & 1u;
        for (long word = 0; word < photon_words; ++word) {
            long rest = word;
            int photons = 0;
            for (int i = 0; i < n; ++i) {
                photons += static_cast<int>(rest % (cutoff + 1));
                rest /= (cutoff + 1);
            }
            if (atomic + photons == n_ex) ++count;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("basis sizes match the published manifold counts") {
    SystemParams params;
    params.n_cavities = 2;
    params.fock_cutoff = 2;
    CHECK(enumerate_basis(params, 1).size() == 4);
    CHECK(enumerate_basis(params, 2).size() == 8);

    params.n_cavities = 3;
    params.fock_cutoff = 3;
    CHECK(enumerate_basis(params, 3).size() == 38);

    params.n_cavities = 4;
    params.fock_cutoff = 2;
    auto vacuum = enumerate_basis(params, 0);
    REQUIRE(vacuum.size() == 1);
    CHECK(excitation_number(vacuum.front()) == 0);
}

TEST_CASE("basis sizes agree with the product-space scan oracle") {
    for (int n = 2; n <= 4; ++n) {
        for (int cutoff = 0; cutoff <= 3; ++cutoff) {
            SystemParams params;
            params.n_cavities = n;
            params.fock_cutoff = cutoff;
            for (int n_ex = 0; n_ex <= n * (1 + cutoff); ++n_ex) {
                CAPTURE(n);
                CAPTURE(cutoff);
                CAPTURE(n_ex);
                CHECK(static_cast<long>(enumerate_basis(params, n_ex).size()) ==
                      scan_count(n, cutoff, n_ex));
            }
        }
    }
}

TEST_CASE("cutoff below the excitation number truncates the manifold") {
    SystemParams params;
    params.n_cavities = 2;
    params.fock_cutoff = 1;
    CHECK(cutoff_truncates(params, 2));
    CHECK_FALSE(cutoff_truncates(params, 1));
    // |g,2;g,0> and |g,0;g,2> are gone
    CHECK(enumerate_basis(params, 2).size() == 6);
}

TEST_CASE("canonical ordering is a strict total order with index round-trip") {
    SystemParams params;
    params.n_cavities = 3;
    params.fock_cutoff = 2;
    auto basis = enumerate_basis(params, 2);
    CHECK(std::is_sorted(basis.begin(), basis.end()));

    auto resorted = basis;
    std::sort(resorted.begin(), resorted.end());
    CHECK(resorted == basis);

    BasisIndex index(basis);
    for (int i = 0; i < index.size(); ++i) {
        CHECK(index.index_of(index.state(i)) == i);
    }
    CHECK(index.index_of(make_state({'e', 'e', 'e'}, {0, 0, 0})) == -1);
}

TEST_CASE("excitation numbers") {
    CHECK(excitation_number(make_state({'e', 'g'}, {0, 0})) == 1);
    CHECK(excitation_number(make_state({'g', 'g'}, {2, 0})) == 2);
    CHECK(excitation_number(make_state({'g', 'g', 'g'}, {0, 0, 0})) == 0);

    // invariant under cavity relabeling
    auto s = make_state({'e', 'g', 'g'}, {1, 0, 2});
    auto t = make_state({'g', 'g', 'e'}, {0, 2, 1});
    CHECK(excitation_number(s) == excitation_number(t));
}

TEST_CASE("enumerate_space covers every manifold exactly once") {
    SystemParams params;
    params.n_cavities = 2;
    params.fock_cutoff = 2;
    auto space = enumerate_space(params);
    CHECK(space.size() == 4u * 9u);
    CHECK(std::is_sorted(space.begin(), space.end()));
    std::set<ProductState> unique(space.begin(), space.end());
    CHECK(unique.size() == space.size());
}

TEST_CASE("parameter validation") {
    SystemParams params;
    params.n_cavities = 1;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
    params.n_cavities = 2;
    params.g = -1.0;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
    params.g = 1.0;
    CHECK_THROWS_AS(enumerate_basis(params, -1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_basis(params, 100), std::invalid_argument);
}
