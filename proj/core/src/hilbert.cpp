// hilbert.cpp

#include "cavex/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace cavex {

const char* to_string(PhaseSelector phi) {
    return phi == PhaseSelector::zero ? "0" : "pi";
}

void SystemParams::validate() const {
    if (n_cavities < 2) {
        throw std::invalid_argument("SystemParams: n_cavities must be >= 2");
    }
    if (fock_cutoff < 0) {
        throw std::invalid_argument("SystemParams: fock_cutoff must be >= 0");
    }
    if (g < 0.0) {
        throw std::invalid_argument("SystemParams: g must be >= 0");
    }
    if (gamma < 0.0) {
        throw std::invalid_argument("SystemParams: gamma must be >= 0");
    }
}

int excitation_number(const ProductState& s) {
    int n = 0;
    for (AtomLevel a : s.atoms) {
        if (a == AtomLevel::excited) ++n;
    }
    for (int m : s.photons) n += m;
    return n;
}

std::string to_string(const ProductState& s) {
    std::string out = "|";
    for (std::size_t i = 0; i < s.atoms.size(); ++i) {
        if (i > 0) out += ';';
        out += (s.atoms[i] == AtomLevel::excited) ? 'e' : 'g';
        out += ',';
        out += std::to_string(s.photons[i]);
    }
    out += '>';
    return out;
}

namespace {

// photon tuples with entries <= cutoff summing to `total`, appended to out
void photon_compositions(int n_cavities, int cutoff, int total,
                         std::vector<int>& current, std::vector<std::vector<int>>& out) {
    const int slot = static_cast<int>(current.size());
    if (slot == n_cavities) {
        if (total == 0) out.push_back(current);
        return;
    }
    const int hi = std::min(cutoff, total);
    for (int m = 0; m <= hi; ++m) {
        current.push_back(m);
        photon_compositions(n_cavities, cutoff, total - m, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<ProductState> enumerate_basis(const SystemParams& params, int n_ex) {
    params.validate();
    const int n = params.n_cavities;
    if (n_ex < 0 || n_ex > n * (1 + params.fock_cutoff)) {
        throw std::invalid_argument("enumerate_basis: n_ex out of range for this space");
    }

    std::vector<ProductState> basis;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<AtomLevel> atoms(static_cast<std::size_t>(n), AtomLevel::ground);
        int atomic = 0;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                atoms[static_cast<std::size_t>(i)] = AtomLevel::excited;
                ++atomic;
            }
        }
        if (atomic > n_ex) continue;
        std::vector<std::vector<int>> photon_sets;
        std::vector<int> scratch;
        photon_compositions(n, params.fock_cutoff, n_ex - atomic, scratch, photon_sets);
        for (auto& photons : photon_sets) {
            basis.push_back(ProductState{atoms, std::move(photons)});
        }
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

std::vector<ProductState> enumerate_space(const SystemParams& params) {
    params.validate();
    std::vector<ProductState> space;
    const int max_ex = params.n_cavities * (1 + params.fock_cutoff);
    for (int n_ex = 0; n_ex <= max_ex; ++n_ex) {
        auto manifold = enumerate_basis(params, n_ex);
        space.insert(space.end(), manifold.begin(), manifold.end());
    }
    std::sort(space.begin(), space.end());
    return space;
}

bool cutoff_truncates(const SystemParams& params, int n_ex) {
    return params.fock_cutoff < n_ex;
}

BasisIndex::BasisIndex(std::vector<ProductState> states) : states_(std::move(states)) {
    for (std::size_t i = 0; i < states_.size(); ++i) {
        index_.emplace(states_[i], static_cast<int>(i));
    }
    if (index_.size() != states_.size()) {
        throw std::invalid_argument("BasisIndex: duplicate states in basis");
    }
}

int BasisIndex::index_of(const ProductState& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

}  // namespace cavex
