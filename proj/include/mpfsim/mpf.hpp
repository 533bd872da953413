#pragma once

#include <vector>

#include "mpfsim/hamiltonian.hpp"
#include "mpfsim/matrix.hpp"

namespace mpfsim {

/// Multiproduct scheme: order parameter M, step counts k (strictly decreasing)
/// and extrapolation coefficients a solving the Vandermonde system exactly.
struct MpfScheme {
  int order_m = 0;
  std::vector<int> k;
  std::vector<double> a;
  double a_norm1 = 0.0;

  int k_max() const { return k.front(); }
};

/// Well-conditioned step counts k_j = ⌈(√8 M/π) |sin(π(2j-1)/8M)|⁻¹⌉ for
/// 2 <= M <= 12; M = 1 is the bare midpoint formula with k = (1).
std::vector<int> wellconditioned_k(int m);

/// Coefficients a_j = Π_{i≠j} k_j²/(k_j² - k_i²), evaluated in exact rational
/// arithmetic and rounded to double. k entries must be distinct positive integers.
std::vector<double> solve_vandermonde(const std::vector<int>& k);

/// Scheme from the well-conditioned k-vector.
MpfScheme make_scheme(int m);
/// Scheme from a user-supplied k-vector, validated against the same invariants.
MpfScheme make_scheme_from_k(std::vector<int> k);

/// Midpoint formula exp(-i H(t0 + dt/2) dt).
Mat midpoint(const HamiltonianModel& model, double t0, double dt);

/// Ordered product of k midpoint steps of width dt/k; later times act on the left.
Mat product_chain(const HamiltonianModel& model, double t0, double dt, int k);

/// Multiproduct formula Σ_j a_j U_2^{(k_j)}; generally not unitary.
Mat mpf_apply(const HamiltonianModel& model, const MpfScheme& scheme, double t0, double dt);

}  // namespace mpfsim
