#pragma once

#include <vector>

#include "mpfsim/hamiltonian.hpp"
#include "mpfsim/matrix.hpp"
#include "mpfsim/mpf.hpp"

namespace mpfsim {

/// Time mesh with per-step Λ·Δt records and the error budget that produced it.
struct StepPlan {
  std::vector<double> mesh;  // r+1 strictly increasing times
  int r = 0;
  double eps_budget = 0.0;   // zero for uniform plans built without a budget
  std::vector<double> per_step_caps;  // max_τ Λ(τ) · Δt_i per step
};

/// r equal steps over [t0, t1]; caps evaluated from the supplied Λ.
StepPlan uniform_plan(const LambdaBound& lambda, double t0, double t1, int r);

/// Greedy left-to-right mesh: r is fixed up-front from the adaptive step-count
/// bound, then each step is the largest (by bisection) with
/// max_τ Λ(τ)·Δt_i <= (1/41)(ε/(0.32‖a‖₁ r))^{1/(2M+1)}. If the greedy mesh
/// finishes early the reported r shrinks to the actual step count.
StepPlan adaptive_plan(const LambdaBound& lambda, double t0, double t1, double eps,
                       const MpfScheme& scheme);

/// Ordered product of per-step multiproduct formulas, later steps on the left.
Mat simulate_long(const HamiltonianModel& model, const MpfScheme& scheme, const StepPlan& plan);

/// Largest Λ value over [a, b]: 33 uniform samples plus local refinement.
double lambda_interval_max(const LambdaBound& lambda, double a, double b);

/// Time-averaged Λ over [a, b] (composite Simpson).
double lambda_interval_average(const LambdaBound& lambda, double a, double b);

}  // namespace mpfsim
