#include "mpfsim/mpf.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace mpfsim {

namespace mp = boost::multiprecision;

std::vector<int> wellconditioned_k(int m) {
  if (m < 1 || m > 12) throw std::invalid_argument("wellconditioned_k: M must be in [1, 12]");
  // The ceiling formula targets M >= 2; the M = 1 multiproduct formula is the
  // midpoint formula itself, and k = (1) is the only choice below the 3M² cap.
  if (m == 1) return {1};
  std::vector<int> k(static_cast<std::size_t>(m));
  const long double lead = std::sqrt(8.0L) * m / std::numbers::pi_v<long double>;
  for (int j = 1; j <= m; ++j) {
    const long double s = std::abs(std::sin(std::numbers::pi_v<long double> * (2 * j - 1) / (8.0L * m)));
    k[static_cast<std::size_t>(j) - 1] = static_cast<int>(std::ceil(lead / s));
  }
  std::set<int> unique(k.begin(), k.end());
  if (unique.size() != k.size())
    throw std::runtime_error("wellconditioned_k: degenerate scheme, duplicate k entries at M=" + std::to_string(m));
  return k;
}

std::vector<double> solve_vandermonde(const std::vector<int>& k) {
  if (k.empty()) throw std::invalid_argument("solve_vandermonde: empty k-vector");
  for (int v : k)
    if (v < 1) throw std::invalid_argument("solve_vandermonde: k entries must be positive integers");
  std::set<int> unique(k.begin(), k.end());
  if (unique.size() != k.size())
    throw std::invalid_argument("solve_vandermonde: singular system, duplicate k values");

  // Lagrange evaluation at 0 of the nodes x_j = k_j^{-2}, kept rational so the
  // notoriously ill-conditioned system cancels exactly.
  std::vector<double> a(k.size());
  mp::cpp_rational total = 0;
  for (std::size_t j = 0; j < k.size(); ++j) {
    mp::cpp_rational prod = 1;
    const mp::cpp_int kj2 = mp::cpp_int(k[j]) * k[j];
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i == j) continue;
      const mp::cpp_int ki2 = mp::cpp_int(k[i]) * k[i];
      // two-arg rational construction requires a canonical (positive) denominator
      prod *= mp::cpp_rational(kj2) / mp::cpp_rational(kj2 - ki2);
    }
    total += prod;
    a[j] = prod.convert_to<double>();
  }
  if (total != 1) throw std::runtime_error("solve_vandermonde: coefficients do not sum to one exactly");
  return a;
}

namespace {

void validate_scheme(const MpfScheme& scheme) {
  const int m = scheme.order_m;
  if (static_cast<int>(scheme.k.size()) != m || static_cast<int>(scheme.a.size()) != m)
    throw std::invalid_argument("MpfScheme: size mismatch");
  for (std::size_t j = 0; j + 1 < scheme.k.size(); ++j)
    if (scheme.k[j] <= scheme.k[j + 1])
      throw std::invalid_argument("MpfScheme: k must be strictly decreasing");
  for (int kj : scheme.k)
    if (kj >= 3 * m * m && m >= 2)
      throw std::invalid_argument("MpfScheme: k_j >= 3M², scheme is not well conditioned");
  // residuals of the rounded coefficients against the Vandermonde rows
  for (int p = 0; p < m; ++p) {
    double residual = (p == 0) ? -1.0 : 0.0;
    for (int j = 0; j < m; ++j)
      residual += scheme.a[static_cast<std::size_t>(j)] * std::pow(scheme.k[static_cast<std::size_t>(j)], -2.0 * p);
    if (std::abs(residual) > 1e-12)
      throw std::runtime_error("MpfScheme: Vandermonde residual exceeds 1e-12 after rounding");
  }
}

}  // namespace

MpfScheme make_scheme(int m) { return make_scheme_from_k(wellconditioned_k(m)); }

MpfScheme make_scheme_from_k(std::vector<int> k) {
  MpfScheme scheme;
  scheme.order_m = static_cast<int>(k.size());
  scheme.a = solve_vandermonde(k);
  scheme.k = std::move(k);
  scheme.a_norm1 = 0.0;
  for (double v : scheme.a) scheme.a_norm1 += std::abs(v);
  validate_scheme(scheme);
  return scheme;
}

Mat midpoint(const HamiltonianModel& model, double t0, double dt) {
  return expm_hermitian_generator(model.evaluate(t0 + dt / 2.0), dt);
}

Mat product_chain(const HamiltonianModel& model, double t0, double dt, int k) {
  if (k < 1) throw std::invalid_argument("product_chain: invalid input, k must be >= 1");
  const double step = dt / k;
  Mat u = Mat::Identity(model.dim(), model.dim());
  for (int q = 0; q < k; ++q) u = midpoint(model, t0 + q * step, step) * u;
  return u;
}

Mat mpf_apply(const HamiltonianModel& model, const MpfScheme& scheme, double t0, double dt) {
  Mat out = Mat::Zero(model.dim(), model.dim());
  for (std::size_t j = 0; j < scheme.k.size(); ++j)
    out += scheme.a[j] * product_chain(model, t0, dt, scheme.k[j]);
  return out;
}

}  // namespace mpfsim
