#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "mpfsim/matrix.hpp"

namespace mpfsim {

/// Scalar coefficient with analytic derivatives. deriv(order, t) returns the
/// order-th derivative at t; orders above analytic_order fall back to central
/// finite differences with step 1e-4 (1 + |t|).
struct Coefficient {
  std::function<double(int, double)> deriv;
  int analytic_order = 0;

  static constexpr int kUnbounded = std::numeric_limits<int>::max();

  double operator()(double t) const { return deriv(0, t); }
  double derivative(int order, double t) const;
};

Coefficient constant_coefficient(double value);
/// amp * cos(freq * t + phase); derivatives of every order are analytic.
Coefficient cosine_coefficient(double amp, double freq, double phase = 0.0);
Coefficient sine_coefficient(double amp, double freq, double phase = 0.0);

/// Time-dependent Hamiltonian H(t) = Σ_j α_j(t) H_j with derivative access.
/// Values are immutable after construction; all methods are pure.
class HamiltonianModel {
 public:
  HamiltonianModel(std::vector<Coefficient> coefficients, std::vector<Mat> terms);

  int dim() const;
  int term_count() const;
  /// Highest derivative order backed by analytic coefficient derivatives.
  int deriv_order() const;

  Mat evaluate(double t) const;
  /// H^{(order)}(t) = Σ_j α_j^{(order)}(t) H_j.
  Mat derivative(int order, double t) const;
  /// Pointwise Λ_n(t) = max_{j in [0..n]} ‖H^{(j)}(t)‖^{1/(j+1)}; n must not
  /// exceed deriv_order().
  double lambda_bound(double t, int n) const;

  struct Impl;
  explicit HamiltonianModel(std::shared_ptr<const Impl> impl);

 private:
  std::shared_ptr<const Impl> impl_;
};

/// Λ-bound with constant K such that |Λ̇| <= K Λ².
struct LambdaBound {
  std::function<double(double)> value;
  double k_const = 0.0;

  double operator()(double t) const { return value(t); }
};

/// Constant Λ: the max of the pointwise bound over [t0, t1], sampled densely.
/// A constant bound gives K = 0.
LambdaBound constant_lambda_bound(const HamiltonianModel& model, double t0, double t1,
                                  int n, int samples = 257);

/// Model seen from the frame T(t): H̃(t) = i Ṫ(t) T(t)† + T(t) H(t) T(t)†.
/// T must be unitary and Tdot consistent with it; validated at sampled times.
HamiltonianModel frame_transform(const HamiltonianModel& model,
                                 const std::function<Mat(double)>& frame,
                                 const std::function<Mat(double)>& frame_dot);

struct SpinHalfSystem {
  HamiltonianModel model;
  /// Exact rotating-frame propagator from time 0: R_z(ωt) exp(-i H_lab t).
  std::function<Mat(double)> exact;
};

/// Spin-1/2 in a static field B tilted by θ, viewed from a frame rotating at ω.
SpinHalfSystem build_spin_half(double b_field, double omega, double theta);

struct XxChainSystem {
  HamiltonianModel model;
  /// Exact interaction-picture propagator from time 0: exp(iH₀t) exp(-i(H₀+H₁)t).
  std::function<Mat(double)> exact;
  Mat magnetization;  // Σ_k Z_k
};

/// Ring of N qubits (N even) with XX+YY hopping in the interaction picture of
/// alternating on-site frequencies ±ω.
XxChainSystem build_xx_chain(int n_qubits, double coupling, double omega);

/// Reference propagator U(t1, t0): composite midpoint steps on successively
/// halved meshes with Richardson extrapolation, until successive refinements
/// agree within tol in spectral norm.
Mat exact_propagator_oracle(const HamiltonianModel& model, double t0, double t1, double tol);

}  // namespace mpfsim
