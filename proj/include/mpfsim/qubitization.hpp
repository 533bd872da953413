#pragma once

#include <vector>

#include "mpfsim/clockspace.hpp"
#include "mpfsim/hamiltonian.hpp"
#include "mpfsim/matrix.hpp"

namespace mpfsim {

/// Hamiltonian as a nonnegative combination of unitaries, H = Σ_j α_j U_j.
struct LcuModel {
  std::vector<Mat> unitaries;
  std::vector<double> alphas;
  double alpha_norm1 = 0.0;

  int term_count() const { return static_cast<int>(alphas.size()); }
  Eigen::Index system_dim() const { return unitaries.front().rows(); }
  Mat assemble() const;
};

LcuModel make_lcu(std::vector<Mat> unitaries, std::vector<double> alphas);

/// LCU form of a dense Hermitian n-qubit matrix via Pauli-basis trace inner
/// products; negative coefficients are absorbed into the unitary by sign flip.
LcuModel lcu_from_pauli_decomposition(const Mat& h, int n_qubits);

/// Unitary whose first column is √(α_j/‖α‖₁) padded with zeros, completed
/// deterministically by a Householder reflection.
Mat prep_matrix(const LcuModel& model, Eigen::Index anc_dim);

/// Walk operator on ancilla ⊗ system whose eigenphases on the invariant
/// subspace through PREP|0⟩|E_k⟩ are ±arccos(E_k/‖α‖₁).
Mat walk_operator(const LcuModel& model);

/// Phases and invariance residual of the 2D walk subspace through
/// PREP|0⟩ ⊗ system_eigvec.
struct WalkSubspacePhases {
  Complex plus;
  Complex minus;
  double invariance_residual = 0.0;
};
WalkSubspacePhases walk_eigenphases(const LcuModel& model, const Mat& walk,
                                    const Vec& system_eigvec);

/// Clock-extended Hamiltonian H' = H̃ + i 2^{n_p} Δ.
Mat clock_extended_hamiltonian(const HamiltonianModel& model, const ClockRegister& reg);

}  // namespace mpfsim
