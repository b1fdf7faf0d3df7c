// hamiltonian.hpp — Free and interaction Hamiltonians over product and collective bases
//
// H0 = omega * sum_i (R_zi + a_i^† a_i) with R_z eigenvalues ±1/2.
// H_I = g * sum_i (R_i^+ a_i + R_i^- a_i^†) + chi * sum_edges (a_i^† a_j + h.c.),
// each undirected ring edge counted once. Both are dense Hermitian matrices,
// block-diagonal in the total excitation number.

#pragma once

#include <Eigen/Dense>

#include <string>
#include <utility>
#include <vector>

#include "cavex/hilbert.hpp"
#include "cavex/symmetry.hpp"

namespace cavex {

// Undirected hopping graph. ring(n) is the nearest-neighbour polygon (a
// single edge for n = 2); all_pairs(n) is the fully connected alternative,
// identical to ring(3) for three cavities.
struct RingTopology {
    int n{0};
    std::vector<std::pair<int, int>> edges;

    static RingTopology ring(int n);
    static RingTopology all_pairs(int n);

    void validate(int n_cavities) const;  // throws std::invalid_argument
};

struct HamiltonianMatrix {
    Eigen::MatrixXcd entries;                 // hbar = 1, angular-frequency units
    std::vector<std::string> basis_labels;    // one per row/column
    std::vector<ProductState> product_basis;  // non-empty when rows index product states

    Eigen::Index dim() const { return entries.rows(); }
    double max_asymmetry() const;  // max |H - H^†| entry
};

// omega * (n_ex(s) - n_cavities/2) on the diagonal
HamiltonianMatrix free_term(const SystemParams& params, const std::vector<ProductState>& basis);

// g * sum_i (R_i^+ a_i + R_i^- a_i^†) with a|n> = sqrt(n)|n-1>,
// a^†|n> = sqrt(n+1)|n+1>; images above the fock cutoff are dropped
HamiltonianMatrix atom_field_term(const SystemParams& params,
                                  const std::vector<ProductState>& basis);

// chi * sum_{edges} (a_i^† a_j + a_j^† a_i), each undirected edge once
HamiltonianMatrix hopping_term(const SystemParams& params, const RingTopology& topology,
                               const std::vector<ProductState>& basis);

// atom_field_term + hopping_term
HamiltonianMatrix interaction_hamiltonian(const SystemParams& params,
                                          const RingTopology& topology,
                                          const std::vector<ProductState>& basis);

// M_ab = <collective_a| H |collective_b>. Every amplitude of every collective
// state must refer to a state of H's product basis.
HamiltonianMatrix restrict_to(const HamiltonianMatrix& h,
                              const std::vector<CollectiveState>& collective);

// Single-site operator matrices over an explicit basis; images that leave the
// basis are dropped (truncation). Used by the interaction builders' cross
// checks and the commutation-relation tests.
Eigen::MatrixXcd annihilation_matrix(const std::vector<ProductState>& basis, int site);
Eigen::MatrixXcd creation_matrix(const std::vector<ProductState>& basis, int site,
                                 int fock_cutoff);
Eigen::MatrixXcd atom_raising_matrix(const std::vector<ProductState>& basis, int site);
Eigen::MatrixXcd atom_lowering_matrix(const std::vector<ProductState>& basis, int site);
Eigen::MatrixXcd atom_inversion_matrix(const std::vector<ProductState>& basis, int site);

// Matrix of the cavity-relabeling operator P_g over `basis` (must be closed)
Eigen::MatrixXcd permutation_matrix(const std::vector<ProductState>& basis,
                                    const CavityPermutation& perm);

}  // namespace cavex
