#include "mpfsim/matrix.hpp"

#include <lapacke.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mpfsim {

namespace {
// Below this size Eigen's solver beats the LAPACK call overhead.
constexpr Eigen::Index kLapackThreshold = 128;
}  // namespace

bool is_finite(const Mat& a) { return a.allFinite(); }

bool is_hermitian(const Mat& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return spectral_norm(a - a.adjoint()) <= tol;
}

bool is_unitary(const Mat& a, double tol) {
  if (a.rows() != a.cols()) return false;
  Mat g = a.adjoint() * a;
  g.diagonal().array() -= 1.0;
  return spectral_norm(g) <= tol;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
  return out;
}

double spectral_norm(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("spectral_norm: invalid input, matrix must be square");
  if (!a.allFinite()) throw std::invalid_argument("spectral_norm: invalid input, entries must be finite");
  if (a.rows() == 0) return 0.0;
  Mat gram = a.adjoint() * a;
  RVec evals = hermitian_eigenvalues(gram);
  double top = evals.maxCoeff();
  return std::sqrt(std::max(top, 0.0));
}

std::pair<RVec, Mat> hermitian_eigen(const Mat& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("hermitian_eigen: matrix must be square");
  const auto n = h.rows();
  if (n < kLapackThreshold) {
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    if (es.info() != Eigen::Success) throw std::runtime_error("hermitian_eigen: solver failed");
    return {es.eigenvalues(), es.eigenvectors()};
  }
  Mat v = h;
  RVec w(n);
  int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', static_cast<lapack_int>(n),
                            reinterpret_cast<lapack_complex_double*>(v.data()),
                            static_cast<lapack_int>(n), w.data());
  if (info != 0) throw std::runtime_error("hermitian_eigen: zheevd failed");
  return {std::move(w), std::move(v)};
}

RVec hermitian_eigenvalues(const Mat& h) {
  const auto n = h.rows();
  if (n < kLapackThreshold) {
    Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("hermitian_eigenvalues: solver failed");
    return es.eigenvalues();
  }
  Mat v = h;
  RVec w(n);
  int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', static_cast<lapack_int>(n),
                            reinterpret_cast<lapack_complex_double*>(v.data()),
                            static_cast<lapack_int>(n), w.data());
  if (info != 0) throw std::runtime_error("hermitian_eigenvalues: zheevd failed");
  return w;
}

Mat expm_hermitian_generator(const Mat& h, double theta) {
  if (!is_hermitian(h, kHermTol))
    throw std::invalid_argument("expm_hermitian_generator: invalid input, matrix is not Hermitian");
  auto [evals, evecs] = hermitian_eigen(h);
  Vec phases(evals.size());
  for (Eigen::Index i = 0; i < evals.size(); ++i)
    phases(i) = std::exp(Complex(0.0, -theta * evals(i)));
  return evecs * phases.asDiagonal() * evecs.adjoint();
}

Mat qft(int n) {
  if (n <= 0) throw std::invalid_argument("qft: invalid input, register size must be >= 1");
  const Eigen::Index dim = Eigen::Index(1) << n;
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  const double step = 2.0 * std::numbers::pi / static_cast<double>(dim);
  Mat f(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index k = 0; k < dim; ++k) {
      // reduce j*k mod dim before forming the phase, keeps angles small
      const auto m = (j * k) % dim;
      f(j, k) = norm * std::exp(Complex(0.0, step * static_cast<double>(m)));
    }
  return f;
}

}  // namespace mpfsim
