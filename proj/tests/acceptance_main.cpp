// Acceptance suite: one pass/fail line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mpfsim/bounds.hpp"
#include "mpfsim/clockspace.hpp"
#include "mpfsim/experiments.hpp"
#include "mpfsim/mpf.hpp"
#include "mpfsim/pauli.hpp"
#include "mpfsim/qubitization.hpp"
#include "mpfsim/stepper.hpp"

using namespace mpfsim;
namespace ex = mpfsim::experiments;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& note) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + note;
    }
  }
};

std::vector<double> geometric(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// 1. Running-power plateau on the spin-half system. The plateau is read off
// the smallest times whose error is still resolvable above the machine floor.
Outcome criterion_power_plateau() {
  Outcome out;
  auto sys = ex::build_system(ex::SystemSpec{});
  const double t_ref = 0.3;
  auto ts = geometric(0.01, t_ref, 21);
  for (int m : {1, 2, 3}) {
    auto scan = ex::mpf_error_scan(sys, {m}, ts);
    std::vector<std::pair<double, double>> errors;
    for (const auto& p : scan)
      if (p.value >= 1e-13 || p.t == t_ref) errors.emplace_back(p.t, p.value);
    auto powers = ex::running_power(errors, t_ref);
    std::vector<double> head;
    for (const auto& p : powers)
      if (!p.dropped && head.size() < 3) head.push_back(p.power);
    std::sort(head.begin(), head.end());
    const double plateau = head.empty() ? 0.0 : head[head.size() / 2];
    out.require(plateau >= 2 * m + 1 - 0.2,
                "M=" + std::to_string(m) + " plateau " + num(plateau) + " < " + num(2 * m + 1 - 0.2));
    out.detail += "M" + std::to_string(m) + "=" + num(plateau) + " ";
  }
  return out;
}

// 2. Conservation/unitarity order on the XX chain.
Outcome criterion_conservation_order() {
  Outcome out;
  ex::SystemSpec spec;
  spec.name = "xx_chain";
  auto sys = ex::build_system(spec);

  auto m1 = ex::conservation_scan(sys, {1}, geometric(0.05, 0.5, 7));
  double worst = 0.0;
  for (const auto& p : m1) worst = std::max(worst, p.value);
  out.require(worst < 1e-12, "M=1 deviation " + num(worst) + " >= 1e-12");
  out.detail += "M1 dev=" + num(worst) + " ";

  for (int m : {2, 3}) {
    auto scan = ex::conservation_scan(sys, {m}, geometric(0.01, 0.3, 25));
    // fit inside the clean power-law band: far above the floor, far below
    // the regime where higher orders bend the curve
    std::vector<std::pair<double, double>> window;
    for (const auto& p : scan)
      if (p.value > 1e-12 && p.value < 3e-10) window.emplace_back(p.t, p.value);
    if (window.size() < 2) {
      out.require(false, "M=" + std::to_string(m) + " too few points in the fit band");
      continue;
    }
    const double slope = ex::loglog_slope(window);
    out.require(slope >= 2 * m + 2 - 0.2,
                "M=" + std::to_string(m) + " slope " + num(slope) + " < " + num(2 * m + 2 - 0.2));
    out.detail += "M" + std::to_string(m) + " slope=" + num(slope) + " ";
  }
  return out;
}

// 3. MPF beats midpoint Trotter at matched query budget somewhere with ε > 1e-3.
Outcome criterion_trotter_crossover() {
  Outcome out;
  bool found = false;
  std::string where;
  for (auto [b, omega] : {std::pair{1.0, 4.0}, std::pair{1.0, 2.0}, std::pair{2.0, 4.0}, std::pair{4.0, 4.0}}) {
    ex::SystemSpec spec;
    spec.b_field = b;
    spec.omega = omega;
    auto sys = ex::build_system(spec);
    auto rows = ex::trotter_compare(sys, {1, 2, 3, 4}, 10, 5.0);
    for (const auto& row : rows)
      if (row.m <= 4 && row.mpf_error < row.trotter_error && row.trotter_error > 1e-3) {
        found = true;
        where = "B=" + num(b) + " omega=" + num(omega) + " M=" + std::to_string(row.m) +
                " mpf=" + num(row.mpf_error) + " trot=" + num(row.trotter_error);
      }
    if (found) break;
  }
  out.require(found, "no crossover with trotter error > 1e-3 in any of the four settings");
  out.detail = where;
  return out;
}

// 4. Theorem-3 domination at Λ=4 over the property grid.
Outcome criterion_theorem_domination() {
  Outcome out;
  auto sys = ex::build_system(ex::SystemSpec{});
  const double lambda = 4.0;
  double worst_ratio = 0.0;
  for (int m : {1, 2, 3}) {
    const MpfScheme scheme = make_scheme(m);
    for (double x : geometric(0.02, 0.8, 10)) {  // x = 41 Λ dt
      const double dt = x / (41.0 * lambda);
      for (double t0 : {0.0, 0.13, 0.71}) {
        const Mat truth = sys.exact(t0 + dt) * sys.exact(t0).adjoint();
        const double measured = spectral_norm(mpf_apply(sys.model, scheme, t0, dt) - truth);
        const double bound = theorem_bound(m, scheme.a_norm1, lambda, dt);
        worst_ratio = std::max(worst_ratio, measured / bound);
        out.require(measured <= bound, "M=" + std::to_string(m) + " dt=" + num(dt) + " t0=" + num(t0) +
                                           " measured " + num(measured) + " > bound " + num(bound));
      }
    }
  }
  out.detail = "worst measured/bound = " + num(worst_ratio);
  return out;
}

// 5. Adaptive plans meet their budgets within the Lemma-5 step count.
Outcome criterion_adaptive_budget() {
  Outcome out;
  for (const char* name : {"spin_half", "xx_chain"}) {
    ex::SystemSpec spec;
    spec.name = name;
    auto sys = ex::build_system(spec);
    for (int m : {2, 3}) {
      const MpfScheme scheme = make_scheme(m);
      const LambdaBound lam = constant_lambda_bound(sys.model, 0.0, 1.0, 2 * m + 1);
      for (double eps : {1e-4, 1e-6, 1e-8}) {
        const StepPlan plan = adaptive_plan(lam, 0.0, 1.0, eps, scheme);
        const double r_bound = step_count_bound(m, scheme.a_norm1, lam.k_const, lam(0.0), 1.0, eps);
        out.require(plan.r <= static_cast<long>(std::ceil(r_bound)),
                    std::string(name) + " M=" + std::to_string(m) + " eps=" + num(eps) + " r=" +
                        std::to_string(plan.r) + " > bound " + num(r_bound));
        const double err = spectral_norm(simulate_long(sys.model, scheme, plan) - sys.exact(1.0));
        out.require(err <= eps, std::string(name) + " M=" + std::to_string(m) + " eps=" + num(eps) +
                                    " measured " + num(err));
      }
    }
  }
  out.detail = "eps in {1e-4,1e-6,1e-8}, M in {2,3}, both systems";
  return out;
}

// 6. Clock-space operator properties.
Outcome criterion_clock_properties() {
  Outcome out;
  for (int n_t = 1; n_t <= 8; ++n_t) {
    ClockRegister reg(1, n_t - 1);
    const Mat d = delta(reg);
    const double n = static_cast<double>(reg.dim());
    const double norm = spectral_norm(d);
    out.require(std::abs(norm - 2.0 * kPi * (1.0 - 1.0 / n)) <= 1e-12,
                "‖Δ‖ mismatch at n_t=" + std::to_string(n_t));
    const Mat expd = expm_hermitian_generator(Complex(0, 1) * d, 1.0);
    out.require(spectral_norm(expd - incrementer(reg)) <= 1e-9,
                "exp(Δ) != U+ at n_t=" + std::to_string(n_t));
  }

  auto sys = ex::build_system(ex::SystemSpec{});
  auto scan = commutator_scaling_scan(sys.model, 3, {2, 4, 6});
  std::vector<std::pair<double, double>> pts;
  for (const auto& [q, v] : scan) pts.emplace_back(std::pow(2.0, q), v);
  const double slope = ex::loglog_slope(pts);
  out.require(slope >= -0.7 && slope <= -0.3,
              "commutator log2 slope vs q is " + num(slope) + ", outside [-0.7, -0.3]: the spectral "
              "norm of [Delta, H~] is exactly padding-independent for mirror-periodized Hamiltonians "
              "(measured " + num(scan[0].second) + ", " + num(scan[1].second) + ", " +
              num(scan[2].second) + " at q=2,4,6), so the stated 2^{-q/2} decay cannot be met");
  out.detail = "commutator slope " + num(slope) + " (stated target -0.5)";
  return out;
}

// 7. Block-encoding convergence.
Outcome criterion_block_encodings() {
  Outcome out;
  const Mat hconst = 0.7 * pauli_z() + 0.3 * pauli_x();
  HamiltonianModel constant({constant_coefficient(1.0)}, {hconst});
  const Mat want = expm_hermitian_generator(hconst, 1.0);
  for (auto [n_p, q] : {std::pair{1, 0}, std::pair{3, 2}, std::pair{2, 5}}) {
    ClockRegister reg(n_p, q);
    out.require(spectral_norm(block_encode_asymmetric(constant, reg) - want) <= 1e-9,
                "asymmetric time-independent failure at n_p=" + std::to_string(n_p));
    out.require(spectral_norm(block_encode_symmetric(constant, reg) - want) <= 1e-9,
                "symmetric time-independent failure at n_p=" + std::to_string(n_p));
  }

  auto sys = ex::build_system(ex::SystemSpec{});
  const Mat target = sys.exact(1.0);
  std::vector<std::pair<double, double>> errs;
  for (int n_p : {2, 3, 4, 5}) {
    ClockRegister reg(n_p, 6);
    errs.emplace_back(std::pow(2.0, n_p), spectral_norm(block_encode_symmetric(sys.model, reg) - target));
  }
  const double slope = ex::loglog_slope(errs);
  out.require(slope <= -1.6, "symmetric error slope vs n_p " + num(slope) + " > -1.6");
  out.detail = "symmetric slope " + num(slope);
  return out;
}

// 8. Clock-system entanglement decay.
Outcome criterion_entanglement() {
  Outcome out;
  Vec psi0(2);
  psi0 << 0.6, 0.8;

  HamiltonianModel constant({constant_coefficient(1.0)}, {0.7 * pauli_z() + 0.3 * pauli_x()});
  const double s0 = clock_entanglement(constant, ClockRegister(2, 2), psi0);
  out.require(s0 < 1e-10, "time-independent entropy " + num(s0));

  auto sys = ex::build_system(ex::SystemSpec{});
  std::vector<double> entropies;
  for (int q : {2, 4, 6}) entropies.push_back(clock_entanglement(sys.model, ClockRegister(3, q), psi0));
  for (std::size_t i = 0; i + 1 < entropies.size(); ++i)
    out.require(entropies[i + 1] <= entropies[i] * 1.05,
                "entropy rose from q step " + std::to_string(i) + ": " + num(entropies[i]) + " -> " +
                    num(entropies[i + 1]));
  out.detail = "S(q=2,4,6) = " + num(entropies[0]) + ", " + num(entropies[1]) + ", " + num(entropies[2]);
  return out;
}

// 9. Walk-operator eigenphases on 20 random Hamiltonians.
Outcome criterion_qubitization() {
  Outcome out;
  auto rows = ex::qubitization_verify(987654321, 20);
  double worst = 0.0;
  for (const auto& row : rows) {
    worst = std::max({worst, row.max_phase_error, row.max_invariance_residual});
    out.require(row.max_phase_error <= 1e-9,
                "case " + std::to_string(row.case_index) + " phase error " + num(row.max_phase_error));
    out.require(row.max_invariance_residual <= 1e-9,
                "case " + std::to_string(row.case_index) + " invariance " + num(row.max_invariance_residual));
  }
  out.detail = "worst deviation " + num(worst);
  return out;
}

// 10. Exact Vandermonde coefficients.
Outcome criterion_coefficients() {
  Outcome out;
  const auto a2 = solve_vandermonde({2, 1});
  out.require(a2[0] == 4.0 / 3.0 && a2[1] == -1.0 / 3.0, "k=(2,1) coefficients wrong");
  for (int m = 1; m <= 8; ++m) {
    const auto k = wellconditioned_k(m);
    const auto a = solve_vandermonde(k);
    for (int p = 0; p < m; ++p) {
      double residual = (p == 0) ? -1.0 : 0.0;
      for (int j = 0; j < m; ++j)
        residual += a[static_cast<std::size_t>(j)] * std::pow(k[static_cast<std::size_t>(j)], -2.0 * p);
      out.require(std::abs(residual) < 1e-12,
                  "M=" + std::to_string(m) + " row " + std::to_string(p) + " residual " + num(residual));
    }
  }
  out.detail = "rows p=0..M-1 within 1e-12 for M<=8";
  return out;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<Outcome()> fn;
  };
  const std::vector<Entry> criteria{
      {"1 running-power plateau (spin-half, M=1..3)", criterion_power_plateau},
      {"2 conservation/unitarity order (XX chain)", criterion_conservation_order},
      {"3 trotter crossover at matched query budget", criterion_trotter_crossover},
      {"4 theorem-3 domination (41*Lambda*dt <= 0.8)", criterion_theorem_domination},
      {"5 adaptive plans meet eps within step bound", criterion_adaptive_budget},
      {"6 clock-space operator properties", criterion_clock_properties},
      {"7 block-encoding convergence", criterion_block_encodings},
      {"8 clock-system entanglement decay", criterion_entanglement},
      {"9 qubitization eigenphases", criterion_qubitization},
      {"10 exact multiproduct coefficients", criterion_coefficients},
  };

  int failures = 0;
  for (const auto& entry : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = entry.fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s (%.1fs)%s%s\n", out.pass ? "PASS" : "FAIL", entry.name, secs,
                out.detail.empty() ? "" : " -- ", out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  if (failures) std::printf("%d of %zu acceptance criteria FAILED\n", failures, criteria.size());
  else std::printf("all %zu acceptance criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
