#include "mpfsim/pauli.hpp"

#include <stdexcept>

namespace mpfsim {

Mat pauli_i() { return Mat::Identity(2, 2); }

Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Mat pauli_y() {
  Mat m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

namespace {
Mat single(char axis) {
  switch (axis) {
    case 'I': return pauli_i();
    case 'X': return pauli_x();
    case 'Y': return pauli_y();
    case 'Z': return pauli_z();
    default: throw std::invalid_argument("pauli: unknown axis label");
  }
}
}  // namespace

Mat pauli_string(const std::string& label) {
  if (label.empty()) throw std::invalid_argument("pauli_string: empty label");
  Mat out = single(label[0]);
  for (std::size_t i = 1; i < label.size(); ++i) out = kron(out, single(label[i]));
  return out;
}

Mat pauli_site(int n_qubits, int site, char axis) {
  if (site < 0 || site >= n_qubits) throw std::invalid_argument("pauli_site: site out of range");
  std::string label(static_cast<std::size_t>(n_qubits), 'I');
  label[static_cast<std::size_t>(site)] = axis;
  return pauli_string(label);
}

std::vector<std::string> pauli_labels(int n_qubits) {
  static const char axes[] = {'I', 'X', 'Y', 'Z'};
  std::vector<std::string> out;
  out.reserve(std::size_t(1) << (2 * n_qubits));
  std::string cur(static_cast<std::size_t>(n_qubits), 'I');
  std::vector<int> idx(static_cast<std::size_t>(n_qubits), 0);
  while (true) {
    for (int i = 0; i < n_qubits; ++i) cur[static_cast<std::size_t>(i)] = axes[idx[static_cast<std::size_t>(i)]];
    out.push_back(cur);
    int pos = n_qubits - 1;
    while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == 4) idx[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  return out;
}

std::vector<double> pauli_decompose(const Mat& h, int n_qubits) {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  if (h.rows() != dim || h.cols() != dim)
    throw std::invalid_argument("pauli_decompose: dimension does not match qubit count");
  auto labels = pauli_labels(n_qubits);
  std::vector<double> coeffs;
  coeffs.reserve(labels.size());
  for (const auto& label : labels) {
    Complex tr = (pauli_string(label).adjoint() * h).trace();
    coeffs.push_back(tr.real() / static_cast<double>(dim));
  }
  return coeffs;
}

}  // namespace mpfsim
