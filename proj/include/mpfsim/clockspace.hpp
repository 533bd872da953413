#pragma once

#include <utility>
#include <vector>

#include "mpfsim/hamiltonian.hpp"
#include "mpfsim/matrix.hpp"

namespace mpfsim {

/// Discrete clock register: n_p precision qubits over the unit interval plus
/// q padding qubits, 2^{n_p+q} points on the clock circle.
struct ClockRegister {
  int n_p = 1;
  int q = 0;

  ClockRegister(int precision, int padding);
  int n_t() const { return n_p + q; }
  Eigen::Index dim() const { return Eigen::Index(1) << n_t(); }
};

/// Cyclic incrementer U₊ |t⟩ = |t+1 mod 2^{n_t}⟩.
Mat incrementer(const ClockRegister& reg);

/// Generator Δ = log U₊, anti-Hermitian, with eigenvalues -2πik/2^{n_t} on the
/// Fourier basis; exp(Δ) = U₊.
Mat delta(const ClockRegister& reg);

/// Mirror-periodic clock argument: index t maps to s = t/2^{n_p} reduced mod 2,
/// then reflected about s = 1.
double mirror_time(const ClockRegister& reg, Eigen::Index t);

/// Controlled Hamiltonian H̃ = Σ_t H(mirror(t/2^{n_p})) ⊗ |t⟩⟨t| on system ⊗ clock.
Mat controlled_hamiltonian(const HamiltonianModel& model, const ClockRegister& reg);

/// 1_system ⊗ op, in the system ⊗ clock index convention used here.
Mat lift_clock_operator(const Mat& op, Eigen::Index system_dim);

/// [Δ, H̃] on the joint space.
Mat clock_commutator(const HamiltonianModel& model, const ClockRegister& reg);

/// ‖[Δ, H̃]‖ for each padding size in q_list at fixed n_p.
std::vector<std::pair<int, double>> commutator_scaling_scan(const HamiltonianModel& model,
                                                            int n_p,
                                                            const std::vector<int>& q_list);

/// First-order clock circuit (1 ⊗ ⟨0|) U₋^{2^{n_p}} (e^{-iH̃/2^{n_p}} U₊)^{2^{n_p}} (1 ⊗ |0⟩):
/// a right-endpoint product formula over [0, 1], error O(‖Ḣ‖ 2^{-n_p}).
Mat block_encode_asymmetric(const HamiltonianModel& model, const ClockRegister& reg);

/// Second-order clock circuit (1 ⊗ ⟨0|) U₋^{2^{n_p}} (U₊ e^{-i2H̃/2^{n_p}} U₊)^{2^{n_p-1}} (1 ⊗ |0⟩):
/// a midpoint product over [0, 1], error O(‖Ḧ‖ 2^{-2n_p}).
Mat block_encode_symmetric(const HamiltonianModel& model, const ClockRegister& reg);

/// Joint-generator exponential (1 ⊗ ⟨0|) U₋^{2^{n_p}} exp(-i(H̃ + i 2^{n_p} Δ)) (1 ⊗ |0⟩).
/// Grouping powers of exp(-i(H̃/2^{n_p} + iΔ)) collapses to this single
/// exponential, so it is the one operator both circuit encodings approximate;
/// it also equals the evolution under the clock-extended Hamiltonian H'.
Mat block_encode_exponential(const HamiltonianModel& model, const ClockRegister& reg);

/// Von Neumann entropy (base 2) of the reduced clock state after applying the
/// pre-projection clock-space unitary to psi0 ⊗ |0⟩.
double clock_entanglement(const HamiltonianModel& model, const ClockRegister& reg,
                          const Vec& psi0);

}  // namespace mpfsim
