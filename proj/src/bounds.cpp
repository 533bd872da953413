#include "mpfsim/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace mpfsim {

namespace mp = boost::multiprecision;

std::uint64_t bell_number(int n) {
  if (n < 0) throw std::invalid_argument("bell_number: n must be nonnegative");
  if (n > 25) throw std::invalid_argument("bell_number: overflow guard, n must be <= 25");
  // Bell triangle: row r starts with the last entry of row r-1; b_n is the
  // first entry of row n.
  std::vector<mp::cpp_int> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<mp::cpp_int> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const auto& above : row) next.push_back(next.back() + above);
    row = std::move(next);
  }
  return row.front().convert_to<std::uint64_t>();
}

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Enumerates multiplicity vectors (c_1..c_n) with sum j*c_j = n.
double complete_bell_rec(int j, int remaining, double partial, const std::vector<double>& x) {
  if (remaining == 0) return partial;
  if (j < 1) return 0.0;
  double total = 0.0;
  double factor = 1.0;
  const double base = x[static_cast<std::size_t>(j) - 1] / factorial(j);
  for (int c = 0; j * c <= remaining; ++c) {
    if (c > 0) factor *= base / c;
    total += complete_bell_rec(j - 1, remaining - j * c, partial * factor, x);
  }
  return total;
}

}  // namespace

double complete_bell(int n, const std::vector<double>& x) {
  if (n < 0 || n > 20) throw std::invalid_argument("complete_bell: n must be in [0, 20]");
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("complete_bell: invalid input, argument vector must have length n");
  if (n == 0) return 1.0;
  return factorial(n) * complete_bell_rec(n, n, 1.0, x);
}

double touchard(int n, double x) {
  return complete_bell(n, std::vector<double>(static_cast<std::size_t>(n), x));
}

double touchard_upper_bound(int n, double x) {
  if (x <= 0.0) throw std::domain_error("touchard_upper_bound: requires x > 0");
  if (n == 0) return 1.0;
  const double d = static_cast<double>(n);
  return std::pow(d / std::log1p(d / x), d);
}

double remainder_exact(int m, double lambda_max, double dt) {
  if (m < 1) throw std::invalid_argument("remainder_exact: M must be >= 1");
  return std::pow(2.0 * lambda_max * dt, 2 * m + 1) / (2.0 * std::sqrt(std::numbers::pi * m));
}

double remainder_mpf(int m, double a_norm1, double lambda_max, double dt) {
  if (m < 1) throw std::invalid_argument("remainder_mpf: M must be >= 1");
  if (a_norm1 < 1.0) throw std::invalid_argument("remainder_mpf: invalid input, coefficient 1-norm is always >= 1");
  return 0.16 * a_norm1 * std::pow(41.0 * lambda_max * dt, 2 * m + 1);
}

double theorem_bound(int m, double a_norm1, double lambda_max, double dt) {
  return 2.0 * remainder_mpf(m, a_norm1, lambda_max, dt);
}

BoundReport theorem_bound_report(int m, double a_norm1, double lambda_max, double dt) {
  BoundReport rep;
  rep.name = "mpf_single_step_error";
  rep.inputs = {{"M", static_cast<double>(m)}, {"a_norm1", a_norm1},
                {"lambda_max", lambda_max}, {"dt", dt}};
  rep.value = theorem_bound(m, a_norm1, lambda_max, dt);
  if (41.0 * lambda_max * dt >= 1.0) rep.valid_domain = "vacuous: 41*Lambda*dt >= 1";
  return rep;
}

namespace {

struct BetaContext {
  int k = 0;
  // y_cache[q-1][s] = Y_s evaluated on the x-vector for segment q.
  std::vector<std::vector<double>> y_cache;

  double y(int q, int s) {
    auto& per_q = y_cache[static_cast<std::size_t>(q) - 1];
    if (s < static_cast<int>(per_q.size())) return per_q[static_cast<std::size_t>(s)];
    std::vector<double> x(static_cast<std::size_t>(s));
    for (int j = 1; j <= s; ++j)
      x[static_cast<std::size_t>(j) - 1] = j / (q - 0.5) + 1.0 / k;
    for (int up = static_cast<int>(per_q.size()); up <= s; ++up)
      per_q.push_back(complete_bell(up, std::vector<double>(x.begin(), x.begin() + up)));
    return per_q[static_cast<std::size_t>(s)];
  }

  double rec(int q, int remaining) {
    if (q > k) return remaining == 0 ? 1.0 : 0.0;
    double total = 0.0;
    for (int s = 0; s <= remaining; ++s) {
      double term = 1.0;
      if (s > 0) term = std::pow((q - 0.5) / k, s) / factorial(s) * y(q, s);
      total += term * rec(q + 1, remaining - s);
    }
    return total;
  }
};

}  // namespace

double beta_coefficient(int k, int n) {
  if (k < 1 || n < 0) throw std::invalid_argument("beta_coefficient: requires k >= 1, n >= 0");
  if (n > 8 || k > 12) throw std::invalid_argument("beta_coefficient: too large, composition sum capped at n <= 8, k <= 12");
  if (n == 0) return 1.0;
  BetaContext ctx;
  ctx.k = k;
  ctx.y_cache.assign(static_cast<std::size_t>(k), {});
  return ctx.rec(1, n);
}

double step_count_bound(int m, double a_norm1, double k_const, double lambda_bar,
                        double dt, double eps) {
  if (m < 1 || a_norm1 < 1.0 || lambda_bar <= 0.0 || dt <= 0.0 || eps <= 0.0 || k_const < 0.0)
    throw std::invalid_argument("step_count_bound: all inputs must be positive (K may be zero)");
  const double horizon = 41.0 * (1.0 + 1.5 * k_const) * lambda_bar * dt;
  return std::pow(horizon, 1.0 + 1.0 / (2.0 * m)) * std::pow(0.32 * a_norm1 / eps, 1.0 / (2.0 * m));
}

std::int64_t query_count_estimate(int num_terms, std::int64_t r, const std::vector<int>& k) {
  if (num_terms < 1 || r < 1 || k.empty())
    throw std::invalid_argument("query_count_estimate: requires L >= 1, r >= 1, nonempty k");
  std::int64_t ksum = std::accumulate(k.begin(), k.end(), std::int64_t{0});
  return r * (6 * std::int64_t{static_cast<std::int64_t>(num_terms)} - 3) * ksum;
}

}  // namespace mpfsim
