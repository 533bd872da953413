#pragma once

#include <string>
#include <vector>

#include "mpfsim/matrix.hpp"

namespace mpfsim {

Mat pauli_i();
Mat pauli_x();
Mat pauli_y();
Mat pauli_z();

/// n-qubit Pauli string from a label like "XIZY" (qubit 0 is the leftmost letter).
Mat pauli_string(const std::string& label);

/// Single-axis operator on one site of an n-qubit register, identity elsewhere.
Mat pauli_site(int n_qubits, int site, char axis);

/// All 4^n Pauli-string labels on n qubits, in lexicographic I<X<Y<Z order.
std::vector<std::string> pauli_labels(int n_qubits);

/// Real coefficients c_P with H = Σ_P c_P P for Hermitian H on n qubits.
std::vector<double> pauli_decompose(const Mat& h, int n_qubits);

}  // namespace mpfsim
