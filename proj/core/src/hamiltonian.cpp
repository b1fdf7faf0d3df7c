// hamiltonian.cpp

#include "cavex/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace cavex {

RingTopology RingTopology::ring(int n) {
    if (n < 2) throw std::invalid_argument("RingTopology: n must be >= 2");
    RingTopology t;
    t.n = n;
    if (n == 2) {
        t.edges = {{0, 1}};
    } else {
        for (int i = 0; i < n; ++i) t.edges.emplace_back(i, (i + 1) % n);
    }
    return t;
}

RingTopology RingTopology::all_pairs(int n) {
    if (n < 2) throw std::invalid_argument("RingTopology: n must be >= 2");
    RingTopology t;
    t.n = n;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) t.edges.emplace_back(i, j);
    }
    return t;
}

void RingTopology::validate(int n_cavities) const {
    if (n != n_cavities) {
        throw std::invalid_argument("RingTopology: size does not match n_cavities");
    }
    for (const auto& [i, j] : edges) {
        if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
            throw std::invalid_argument("RingTopology: invalid edge");
        }
    }
}

double HamiltonianMatrix::max_asymmetry() const {
    return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

std::vector<std::string> labels_of(const std::vector<ProductState>& basis) {
    std::vector<std::string> labels;
    labels.reserve(basis.size());
    for (const auto& s : basis) labels.push_back(to_string(s));
    return labels;
}

HamiltonianMatrix empty_matrix(const std::vector<ProductState>& basis) {
    HamiltonianMatrix h;
    const auto d = static_cast<Eigen::Index>(basis.size());
    h.entries = Eigen::MatrixXcd::Zero(d, d);
    h.basis_labels = labels_of(basis);
    h.product_basis = basis;
    return h;
}

}  // namespace

HamiltonianMatrix free_term(const SystemParams& params, const std::vector<ProductState>& basis) {
    params.validate();
    HamiltonianMatrix h = empty_matrix(basis);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const double shift = excitation_number(basis[col]) - 0.5 * params.n_cavities;
        h.entries(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) =
            params.omega * shift;
    }
    return h;
}

HamiltonianMatrix atom_field_term(const SystemParams& params,
                                  const std::vector<ProductState>& basis) {
    params.validate();
    HamiltonianMatrix h = empty_matrix(basis);
    BasisIndex index(basis);
    const int n = params.n_cavities;
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const ProductState& s = basis[col];
        for (int i = 0; i < n; ++i) {
            const auto site = static_cast<std::size_t>(i);
            // R^+ a : absorb a photon, excite the atom
            if (s.atoms[site] == AtomLevel::ground && s.photons[site] >= 1) {
                ProductState t = s;
                t.atoms[site] = AtomLevel::excited;
                t.photons[site] -= 1;
                const int row = index.index_of(t);
                if (row >= 0) {
                    h.entries(row, static_cast<Eigen::Index>(col)) +=
                        params.g * std::sqrt(static_cast<double>(s.photons[site]));
                }
            }
            // R^- a^† : de-excite the atom, emit a photon
            if (s.atoms[site] == AtomLevel::excited && s.photons[site] < params.fock_cutoff) {
                ProductState t = s;
                t.atoms[site] = AtomLevel::ground;
                t.photons[site] += 1;
                const int row = index.index_of(t);
                if (row >= 0) {
                    h.entries(row, static_cast<Eigen::Index>(col)) +=
                        params.g * std::sqrt(static_cast<double>(s.photons[site] + 1));
                }
            }
        }
    }
    return h;
}

HamiltonianMatrix hopping_term(const SystemParams& params, const RingTopology& topology,
                               const std::vector<ProductState>& basis) {
    params.validate();
    topology.validate(params.n_cavities);
    HamiltonianMatrix h = empty_matrix(basis);
    BasisIndex index(basis);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const ProductState& s = basis[col];
        for (const auto& [i, j] : topology.edges) {
            for (const auto& [src, dst] : {std::pair{i, j}, std::pair{j, i}}) {
                const auto from = static_cast<std::size_t>(src);
                const auto to = static_cast<std::size_t>(dst);
                if (s.photons[from] >= 1 && s.photons[to] < params.fock_cutoff) {
                    ProductState t = s;
                    t.photons[from] -= 1;
                    t.photons[to] += 1;
                    const int row = index.index_of(t);
                    if (row >= 0) {
                        h.entries(row, static_cast<Eigen::Index>(col)) +=
                            params.chi * std::sqrt(static_cast<double>(s.photons[from])) *
                            std::sqrt(static_cast<double>(s.photons[to] + 1));
                    }
                }
            }
        }
    }
    return h;
}

HamiltonianMatrix interaction_hamiltonian(const SystemParams& params,
                                          const RingTopology& topology,
                                          const std::vector<ProductState>& basis) {
    HamiltonianMatrix h = atom_field_term(params, basis);
    h.entries += hopping_term(params, topology, basis).entries;
    return h;
}

HamiltonianMatrix restrict_to(const HamiltonianMatrix& h,
                              const std::vector<CollectiveState>& collective) {
    if (h.product_basis.empty()) {
        throw std::invalid_argument("restrict_to: matrix has no product basis attached");
    }
    if (h.entries.rows() != static_cast<Eigen::Index>(h.product_basis.size())) {
        throw std::invalid_argument("restrict_to: dimension mismatch with product basis");
    }
    BasisIndex index(h.product_basis);
    const auto d = static_cast<Eigen::Index>(h.product_basis.size());
    const auto m = static_cast<Eigen::Index>(collective.size());
    Eigen::MatrixXcd columns = Eigen::MatrixXcd::Zero(d, m);
    for (Eigen::Index k = 0; k < m; ++k) {
        for (const auto& [state, amplitude] : collective[static_cast<std::size_t>(k)].amplitudes) {
            const int row = index.index_of(state);
            if (row < 0) {
                throw std::invalid_argument("restrict_to: collective state refers to " +
                                            to_string(state) + " outside the matrix basis");
            }
            columns(row, k) = amplitude;
        }
    }
    HamiltonianMatrix out;
    out.entries = columns.adjoint() * h.entries * columns;
    out.basis_labels.reserve(collective.size());
    for (const auto& state : collective) out.basis_labels.push_back(state.label());
    return out;
}

namespace {

template <typename Fn>
Eigen::MatrixXcd site_operator(const std::vector<ProductState>& basis, Fn&& image_of) {
    BasisIndex index(basis);
    const auto d = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        double amplitude = 0.0;
        ProductState image;
        if (image_of(basis[col], image, amplitude)) {
            const int row = index.index_of(image);
            if (row >= 0) m(row, static_cast<Eigen::Index>(col)) = amplitude;
        }
    }
    return m;
}

std::size_t checked_site(const std::vector<ProductState>& basis, int site) {
    if (basis.empty()) throw std::invalid_argument("site operator: empty basis");
    const auto n = basis.front().atoms.size();
    if (site < 0 || static_cast<std::size_t>(site) >= n) {
        throw std::invalid_argument("site operator: site out of range");
    }
    return static_cast<std::size_t>(site);
}

}  // namespace

Eigen::MatrixXcd annihilation_matrix(const std::vector<ProductState>& basis, int site) {
    const auto i = checked_site(basis, site);
    return site_operator(basis, [i](const ProductState& s, ProductState& t, double& amp) {
        if (s.photons[i] < 1) return false;
        t = s;
        t.photons[i] -= 1;
        amp = std::sqrt(static_cast<double>(s.photons[i]));
        return true;
    });
}

Eigen::MatrixXcd creation_matrix(const std::vector<ProductState>& basis, int site,
                                 int fock_cutoff) {
    const auto i = checked_site(basis, site);
    return site_operator(basis, [i, fock_cutoff](const ProductState& s, ProductState& t, double& amp) {
        if (s.photons[i] >= fock_cutoff) return false;
        t = s;
        t.photons[i] += 1;
        amp = std::sqrt(static_cast<double>(s.photons[i] + 1));
        return true;
    });
}

Eigen::MatrixXcd atom_raising_matrix(const std::vector<ProductState>& basis, int site) {
    const auto i = checked_site(basis, site);
    return site_operator(basis, [i](const ProductState& s, ProductState& t, double& amp) {
        if (s.atoms[i] != AtomLevel::ground) return false;
        t = s;
        t.atoms[i] = AtomLevel::excited;
        amp = 1.0;
        return true;
    });
}

Eigen::MatrixXcd atom_lowering_matrix(const std::vector<ProductState>& basis, int site) {
    const auto i = checked_site(basis, site);
    return site_operator(basis, [i](const ProductState& s, ProductState& t, double& amp) {
        if (s.atoms[i] != AtomLevel::excited) return false;
        t = s;
        t.atoms[i] = AtomLevel::ground;
        amp = 1.0;
        return true;
    });
}

Eigen::MatrixXcd atom_inversion_matrix(const std::vector<ProductState>& basis, int site) {
    const auto i = checked_site(basis, site);
    return site_operator(basis, [i](const ProductState& s, ProductState& t, double& amp) {
        t = s;
        amp = (s.atoms[i] == AtomLevel::excited) ? 0.5 : -0.5;
        return true;
    });
}

Eigen::MatrixXcd permutation_matrix(const std::vector<ProductState>& basis,
                                    const CavityPermutation& perm) {
    BasisIndex index(basis);
    const auto d = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        ProductState image = apply_permutation(basis[col], perm);
        const int row = index.index_of(image);
        if (row < 0) {
            throw std::invalid_argument("permutation_matrix: basis not closed, missing " +
                                        to_string(image));
        }
        m(row, static_cast<Eigen::Index>(col)) = 1.0;
    }
    return m;
}

}  // namespace cavex
