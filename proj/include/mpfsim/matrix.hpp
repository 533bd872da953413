#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

namespace mpfsim {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using Complex = std::complex<double>;

inline constexpr double kHermTol = 1e-12;

bool is_finite(const Mat& a);
bool is_hermitian(const Mat& a, double tol = kHermTol);
bool is_unitary(const Mat& a, double tol = 1e-10);

/// Kronecker product, row-major block convention: (A ⊗ B)[i*nB+j, k*nB+l] = A(i,k) B(j,l).
Mat kron(const Mat& a, const Mat& b);

/// Largest singular value, computed from the eigenvalues of A†A.
double spectral_norm(const Mat& a);

/// Eigendecomposition of a Hermitian matrix. Dispatches to LAPACK zheevd for
/// large dimensions, Eigen's solver otherwise. Returns (eigenvalues, eigenvectors).
std::pair<RVec, Mat> hermitian_eigen(const Mat& h);

/// Eigenvalues only (cheaper for spectral norms of large matrices).
RVec hermitian_eigenvalues(const Mat& h);

/// exp(-i θ H) for Hermitian H, via spectral decomposition.
Mat expm_hermitian_generator(const Mat& h, double theta);

/// 2^n x 2^n discrete Fourier matrix with entries ω^{jk}/√(2^n), ω = exp(2πi/2^n).
Mat qft(int n);

}  // namespace mpfsim
