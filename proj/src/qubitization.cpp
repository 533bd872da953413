#include "mpfsim/qubitization.hpp"

#include <cmath>
#include <stdexcept>

#include "mpfsim/pauli.hpp"

namespace mpfsim {

Mat LcuModel::assemble() const {
  Mat h = Mat::Zero(system_dim(), system_dim());
  for (std::size_t j = 0; j < unitaries.size(); ++j) h += alphas[j] * unitaries[j];
  return h;
}

LcuModel make_lcu(std::vector<Mat> unitaries, std::vector<double> alphas) {
  if (unitaries.empty() || unitaries.size() != alphas.size())
    throw std::invalid_argument("make_lcu: need matching nonempty unitary and coefficient lists");
  LcuModel model;
  for (const auto& u : unitaries) {
    if (u.rows() != unitaries.front().rows() || !is_unitary(u, 1e-11))
      throw std::invalid_argument("make_lcu: every term must be unitary with a common dimension");
  }
  for (double a : alphas) {
    if (a < 0.0) throw std::invalid_argument("make_lcu: coefficients must be nonnegative");
    model.alpha_norm1 += a;
  }
  model.unitaries = std::move(unitaries);
  model.alphas = std::move(alphas);
  if (!is_hermitian(model.assemble(), 1e-10))
    throw std::invalid_argument("make_lcu: assembled combination is not Hermitian");
  return model;
}

LcuModel lcu_from_pauli_decomposition(const Mat& h, int n_qubits) {
  if (!is_hermitian(h, 1e-10)) throw std::invalid_argument("lcu_from_pauli_decomposition: input must be Hermitian");
  auto labels = pauli_labels(n_qubits);
  auto coeffs = pauli_decompose(h, n_qubits);
  std::vector<Mat> unitaries;
  std::vector<double> alphas;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (std::abs(coeffs[i]) < 1e-12) continue;
    const double sign = coeffs[i] < 0.0 ? -1.0 : 1.0;
    unitaries.push_back(sign * pauli_string(labels[i]));
    alphas.push_back(std::abs(coeffs[i]));
  }
  if (unitaries.empty()) throw std::invalid_argument("lcu_from_pauli_decomposition: zero Hamiltonian");
  return make_lcu(std::move(unitaries), std::move(alphas));
}

Mat prep_matrix(const LcuModel& model, Eigen::Index anc_dim) {
  const int num = model.term_count();
  if (anc_dim < num) throw std::invalid_argument("prep_matrix: ancilla dimension must be >= term count");
  if (model.alpha_norm1 <= 0.0) throw std::invalid_argument("prep_matrix: degenerate model, all coefficients zero");

  Vec target = Vec::Zero(anc_dim);
  for (int j = 0; j < num; ++j)
    target(j) = std::sqrt(model.alphas[static_cast<std::size_t>(j)] / model.alpha_norm1);

  // Householder reflection taking e0 to the target column; both are real
  // vectors so the reflection stays unitary and deterministic.
  Vec v = target;
  v(0) -= 1.0;
  const double vnorm2 = v.squaredNorm();
  if (vnorm2 < 1e-30) return Mat::Identity(anc_dim, anc_dim);
  return Mat::Identity(anc_dim, anc_dim) - (2.0 / vnorm2) * (v * v.adjoint());
}

Mat walk_operator(const LcuModel& model) {
  const Eigen::Index num = model.term_count();
  const Eigen::Index ns = model.system_dim();
  const Vec chi = prep_matrix(model, num).col(0);

  Mat select = Mat::Zero(num * ns, num * ns);
  for (Eigen::Index j = 0; j < num; ++j)
    select.block(j * ns, j * ns, ns, ns) = model.unitaries[static_cast<std::size_t>(j)];

  // reflection about PREP|0⟩ on the ancilla; the sign convention puts the
  // walk eigenphases at ±arccos(E/‖α‖₁) rather than ±arccos(-E/‖α‖₁)
  Mat reflect = kron(2.0 * (chi * chi.adjoint()) - Mat::Identity(num, num), Mat::Identity(ns, ns));
  return reflect * select;
}

WalkSubspacePhases walk_eigenphases(const LcuModel& model, const Mat& walk,
                                    const Vec& system_eigvec) {
  const Eigen::Index num = model.term_count();
  const Vec chi = prep_matrix(model, num).col(0);
  Vec phi = kron(chi, system_eigvec.normalized());
  phi.normalize();

  const Vec w_phi = walk * phi;
  Vec second = w_phi - (phi.adjoint() * w_phi)(0) * phi;
  const double snorm = second.norm();

  Mat basis;
  if (snorm < 1e-12) {
    basis = phi;
  } else {
    basis.resize(phi.size(), 2);
    basis.col(0) = phi;
    basis.col(1) = second / snorm;
  }
  const Mat reduced = basis.adjoint() * walk * basis;
  const Mat residual = walk * basis - basis * reduced;

  WalkSubspacePhases out;
  out.invariance_residual = spectral_norm(residual.adjoint() * residual);
  out.invariance_residual = std::sqrt(std::max(out.invariance_residual, 0.0));
  if (reduced.rows() == 1) {
    out.plus = out.minus = reduced(0, 0);
  } else {
    Eigen::ComplexEigenSolver<Mat> es(reduced);
    Complex a = es.eigenvalues()(0), b = es.eigenvalues()(1);
    if (std::arg(a) < std::arg(b)) std::swap(a, b);
    out.plus = a;
    out.minus = b;
  }
  return out;
}

Mat clock_extended_hamiltonian(const HamiltonianModel& model, const ClockRegister& reg) {
  const double scale = static_cast<double>(Eigen::Index(1) << reg.n_p);
  return controlled_hamiltonian(model, reg) +
         Complex(0, 1) * scale * lift_clock_operator(delta(reg), model.dim());
}

}  // namespace mpfsim
