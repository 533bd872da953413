#include "mpfsim/clockspace.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mpfsim {

namespace {
constexpr Eigen::Index kJointDimCap = 4096;
}

ClockRegister::ClockRegister(int precision, int padding) : n_p(precision), q(padding) {
  if (n_p < 1) throw std::invalid_argument("ClockRegister: n_p must be >= 1");
  if (q < 0) throw std::invalid_argument("ClockRegister: q must be >= 0");
  if (n_t() > 12) throw std::invalid_argument("ClockRegister: n_t capped at 12 for dense matrices");
}

Mat incrementer(const ClockRegister& reg) {
  const Eigen::Index n = reg.dim();
  Mat u = Mat::Zero(n, n);
  for (Eigen::Index t = 0; t < n; ++t) u((t + 1) % n, t) = 1.0;
  return u;
}

Mat delta(const ClockRegister& reg) {
  const Eigen::Index n = reg.dim();
  const Mat f = qft(reg.n_t());
  Vec evals(n);
  for (Eigen::Index k = 0; k < n; ++k)
    evals(k) = Complex(0.0, -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  // Fourier column u_k has U₊ u_k = e^{-2πik/N} u_k, so the logarithm
  // diagonalizes as QFT diag(-2πik/N) QFT†.
  return f * evals.asDiagonal() * f.adjoint();
}

double mirror_time(const ClockRegister& reg, Eigen::Index t) {
  const double raw = static_cast<double>(t) / static_cast<double>(Eigen::Index(1) << reg.n_p);
  double s = std::fmod(raw, 2.0);
  if (s > 1.0) s = 2.0 - s;
  return s;
}

Mat controlled_hamiltonian(const HamiltonianModel& model, const ClockRegister& reg) {
  const Eigen::Index nc = reg.dim();
  const Eigen::Index ns = model.dim();
  if (ns * nc > kJointDimCap)
    throw std::invalid_argument("controlled_hamiltonian: too large, joint dimension exceeds 4096");
  Mat h = Mat::Zero(ns * nc, ns * nc);
  for (Eigen::Index t = 0; t < nc; ++t) {
    const Mat block = model.evaluate(mirror_time(reg, t));
    for (Eigen::Index i = 0; i < ns; ++i)
      for (Eigen::Index k = 0; k < ns; ++k) h(i * nc + t, k * nc + t) = block(i, k);
  }
  return h;
}

Mat lift_clock_operator(const Mat& op, Eigen::Index system_dim) {
  const Eigen::Index nc = op.rows();
  Mat out = Mat::Zero(system_dim * nc, system_dim * nc);
  for (Eigen::Index i = 0; i < system_dim; ++i) out.block(i * nc, i * nc, nc, nc) = op;
  return out;
}

namespace {

struct EncodingPieces {
  Mat evecs;
  RVec evals;
  Eigen::Index ns, nc;
};

// Spectral pieces of the Hermitian generator H̃·h_scale + iΔ·d_scale.
EncodingPieces generator_eigen(const HamiltonianModel& model, const ClockRegister& reg,
                               double h_scale, double d_scale) {
  const Eigen::Index ns = model.dim(), nc = reg.dim();
  Mat gen = h_scale * controlled_hamiltonian(model, reg) +
            Complex(0, 1) * d_scale * lift_clock_operator(delta(reg), ns);
  auto [evals, evecs] = hermitian_eigen(gen);
  return {std::move(evecs), std::move(evals), ns, nc};
}

// (1 ⊗ ⟨0|) U₋^{shift} exp(-i s G) (1 ⊗ |0⟩) from the spectral pieces of G.
Mat project_encoding(const EncodingPieces& p, double power, Eigen::Index shift) {
  const Eigen::Index full = p.ns * p.nc;
  Mat top(p.ns, full), bottom(p.ns, full);
  const Eigen::Index row_shift = shift % p.nc;
  for (Eigen::Index i = 0; i < p.ns; ++i) {
    top.row(i) = p.evecs.row(i * p.nc + row_shift);
    bottom.row(i) = p.evecs.row(i * p.nc);
  }
  Vec phases(full);
  for (Eigen::Index e = 0; e < full; ++e) phases(e) = std::exp(Complex(0.0, -power * p.evals(e)));
  return top * phases.asDiagonal() * bottom.adjoint();
}

}  // namespace

Mat clock_commutator(const HamiltonianModel& model, const ClockRegister& reg) {
  const Mat h = controlled_hamiltonian(model, reg);
  const Mat d = lift_clock_operator(delta(reg), model.dim());
  return d * h - h * d;
}

std::vector<std::pair<int, double>> commutator_scaling_scan(const HamiltonianModel& model,
                                                            int n_p,
                                                            const std::vector<int>& q_list) {
  std::vector<std::pair<int, double>> out;
  out.reserve(q_list.size());
  for (int q : q_list) {
    ClockRegister reg(n_p, q);
    out.emplace_back(q, spectral_norm(clock_commutator(model, reg)));
  }
  return out;
}

Mat block_encode_asymmetric(const HamiltonianModel& model, const ClockRegister& reg) {
  // Shifting every controlled exponential with U∓ makes the circuit product
  // block diagonal in the clock basis; the |0⟩ block steps through the clock
  // ticks j/2^{n_p}, j = 1 .. 2^{n_p}, later times on the left.
  const Eigen::Index steps = Eigen::Index(1) << reg.n_p;
  const double dt = 1.0 / static_cast<double>(steps);
  Mat block = Mat::Identity(model.dim(), model.dim());
  for (Eigen::Index j = 1; j <= steps; ++j)
    block = expm_hermitian_generator(model.evaluate(mirror_time(reg, j)), dt) * block;
  return block;
}

Mat block_encode_symmetric(const HamiltonianModel& model, const ClockRegister& reg) {
  // e^Δ = U₊ exactly, so the symmetric split walks odd clock ticks with
  // doubled steps: midpoints of [2j, 2j+2]/2^{n_p}.
  const Eigen::Index steps = Eigen::Index(1) << reg.n_p;
  const double dt = 2.0 / static_cast<double>(steps);
  Mat block = Mat::Identity(model.dim(), model.dim());
  for (Eigen::Index j = 1; j < steps; j += 2)
    block = expm_hermitian_generator(model.evaluate(mirror_time(reg, j)), dt) * block;
  return block;
}

Mat block_encode_exponential(const HamiltonianModel& model, const ClockRegister& reg) {
  const double steps = static_cast<double>(Eigen::Index(1) << reg.n_p);
  auto pieces = generator_eigen(model, reg, 1.0 / steps, 1.0);
  return project_encoding(pieces, steps, Eigen::Index(1) << reg.n_p);
}

double clock_entanglement(const HamiltonianModel& model, const ClockRegister& reg,
                          const Vec& psi0) {
  if (psi0.size() != model.dim())
    throw std::invalid_argument("clock_entanglement: state dimension mismatch");
  if (std::abs(psi0.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("clock_entanglement: invalid state, input must be normalized");

  const Eigen::Index ns = model.dim(), nc = reg.dim();
  const double steps = static_cast<double>(Eigen::Index(1) << reg.n_p);
  auto pieces = generator_eigen(model, reg, 1.0 / steps, 1.0);

  Vec initial = Vec::Zero(ns * nc);
  for (Eigen::Index i = 0; i < ns; ++i) initial(i * nc) = psi0(i);
  Vec coeffs = pieces.evecs.adjoint() * initial;
  for (Eigen::Index e = 0; e < ns * nc; ++e)
    coeffs(e) *= std::exp(Complex(0.0, -steps * pieces.evals(e)));
  Vec evolved = pieces.evecs * coeffs;

  // clock decrement by 2^{n_p}, then trace out the system
  const Eigen::Index shift = (Eigen::Index(1) << reg.n_p) % nc;
  Mat rho = Mat::Zero(nc, nc);
  for (Eigen::Index i = 0; i < ns; ++i)
    for (Eigen::Index t = 0; t < nc; ++t)
      for (Eigen::Index u = 0; u < nc; ++u)
        rho(t, u) += evolved(i * nc + (t + shift) % nc) * std::conj(evolved(i * nc + (u + shift) % nc));

  RVec probs = hermitian_eigenvalues(rho);
  double entropy = 0.0;
  for (Eigen::Index j = 0; j < probs.size(); ++j)
    if (probs(j) > 1e-15) entropy -= probs(j) * std::log2(probs(j));
  return entropy;
}

}  // namespace mpfsim
