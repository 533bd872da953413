#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mpfsim {

struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, double>> inputs;
  double value = 0.0;
  std::string valid_domain;  // empty when unconditionally meaningful
};

/// Exact Bell number b_n via the Bell-triangle recurrence, n <= 25.
std::uint64_t bell_number(int n);

/// Complete exponential Bell polynomial Y_n(x_1..x_n), n <= 20.
double complete_bell(int n, const std::vector<double>& x);

/// Touchard polynomial B_n(x) = Y_n(x,...,x).
double touchard(int n, double x);

/// (n / log(1 + n/x))^n, the Touchard upper bound; requires x > 0.
double touchard_upper_bound(int n, double x);

/// Taylor remainder bound for the exact propagator: (2 Λ Δt)^{2M+1} / (2 √(πM)).
double remainder_exact(int m, double lambda_max, double dt);

/// Taylor remainder bound for the multiproduct formula: 0.16 ‖a‖₁ (41 Λ Δt)^{2M+1}.
double remainder_mpf(int m, double a_norm1, double lambda_max, double dt);

/// Single-step multiproduct error bound: 0.32 ‖a‖₁ (41 Λ Δt)^{2M+1}.
double theorem_bound(int m, double a_norm1, double lambda_max, double dt);

BoundReport theorem_bound_report(int m, double a_norm1, double lambda_max, double dt);

/// β_k^{(n)} coefficient: sum over compositions s_1+..+s_k = n of
/// Π_q (1/s_q!) ((q-1/2)/k)^{s_q} Y_{s_q}(x) with x_j = j/(q-1/2) + 1/k.
double beta_coefficient(int k, int n);

/// Adaptive step-count bound: (41 (1 + 1.5 K) Λ̄ Δt)^{1+1/2M} (0.32 ‖a‖₁ / ε)^{1/2M}.
double step_count_bound(int m, double a_norm1, double k_const, double lambda_bar,
                        double dt, double eps);

/// Midpoint-query estimate r (6L-3) Σ_j k_j for an L-term Hamiltonian.
std::int64_t query_count_estimate(int num_terms, std::int64_t r, const std::vector<int>& k);

}  // namespace mpfsim
