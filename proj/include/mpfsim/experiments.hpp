#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpfsim/hamiltonian.hpp"
#include "mpfsim/matrix.hpp"
#include "mpfsim/mpf.hpp"

namespace mpfsim::experiments {

enum class ExperimentKind {
  power_scan,
  order_scan,
  trotter_compare,
  conservation,
  unitarity,
  clock_verify,
  bounds_compare,
  qubitization_verify,
};

std::string to_string(ExperimentKind kind);
std::optional<ExperimentKind> experiment_from_string(const std::string& name);

/// Example-system selector with the paper's defaults.
struct SystemSpec {
  std::string name = "spin_half";  // spin_half | xx_chain
  double b_field = 1.0;
  double omega = 4.0;
  double theta = std::numbers::pi / 6.0;
  int n_qubits = 4;
  double coupling = 1.0;
};

/// Built system: model, machine-precision propagator from t=0, and the
/// conserved magnetization when the system has one.
struct BuiltSystem {
  HamiltonianModel model;
  std::function<Mat(double)> exact;
  Mat magnetization;  // size 0 when not applicable
};

BuiltSystem build_system(const SystemSpec& spec);

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::power_scan;
  SystemSpec system;
  std::vector<int> m_list;
  std::vector<double> t_list;
  std::vector<int> np_list;
  std::vector<int> q_list;
  double t_ref = 0.3;
  double t_total = 2.5;
  int r_mp = 10;
  double tol = 1e-12;
  std::uint64_t seed = 987654321;
  int qubit_cases = 20;
  std::string output_path;
};

/// Defaults that reproduce the paper's figures at desk scale.
ExperimentConfig default_config(ExperimentKind kind);

/// Parse a JSON config file; missing fields keep the experiment's defaults.
/// When `expected` is given it selects the defaults and overrides the file's
/// own experiment field (the CLI subcommand is authoritative).
ExperimentConfig load_config(const std::string& path,
                             std::optional<ExperimentKind> expected = std::nullopt);
void validate_config(const ExperimentConfig& config);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const Table& table, std::ostream& out);

struct RunResult {
  Table table;
  std::vector<std::string> summary;
  bool checks_passed = true;
};

RunResult run_experiment(const ExperimentConfig& config);

/// Errors below this are reported as the floor value with a flag.
inline constexpr double kErrorFloor = 1e-14;

struct PowerPoint {
  double t = 0.0;
  double power = 0.0;
  bool dropped = false;  // error under the 1e-15 machine floor
};

/// Running power p(t, t_ref) = log(ε_t/ε_ref) / log(t/t_ref) per point.
std::vector<PowerPoint> running_power(const std::vector<std::pair<double, double>>& errors,
                                      double t_ref);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<std::pair<double, double>>& points);

/// Deterministic worker pool; fn(i) must only touch slot i of its outputs.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

// Typed sweep drivers shared by the CLI tables and the acceptance suite.

struct ErrorScanPoint {
  int m = 0;
  double t = 0.0;
  double value = 0.0;
};

/// ‖U_k(t,0) - U(t,0)‖ over the (M, t) grid.
std::vector<ErrorScanPoint> mpf_error_scan(const BuiltSystem& system,
                                           const std::vector<int>& m_list,
                                           const std::vector<double>& t_list);

/// ‖μ - U_k† μ U_k‖ over the grid; requires a system with a magnetization.
std::vector<ErrorScanPoint> conservation_scan(const BuiltSystem& system,
                                              const std::vector<int>& m_list,
                                              const std::vector<double>& t_list);

/// ‖U_k† U_k - 1‖ over the grid.
std::vector<ErrorScanPoint> unitarity_scan(const BuiltSystem& system,
                                           const std::vector<int>& m_list,
                                           const std::vector<double>& t_list);

struct TrotterRow {
  int m = 0;
  int r_mp = 0;
  int r_trot = 0;
  double mpf_error = 0.0;
  double trotter_error = 0.0;
};

/// Equal-midpoint-query comparison r_trot = r_mp · max_j k_j.
std::vector<TrotterRow> trotter_compare(const BuiltSystem& system,
                                        const std::vector<int>& m_list, int r_mp,
                                        double t_total);

struct ClockVerifyRow {
  int n_p = 0;
  int q = 0;
  double comm_norm = 0.0;
  double asym_err = 0.0;
  double sym_err = 0.0;
  double entropy = 0.0;
};

std::vector<ClockVerifyRow> clock_verify(const BuiltSystem& system,
                                         const std::vector<int>& np_list,
                                         const std::vector<int>& q_list);

struct BoundsRow {
  int m = 0;
  double dt = 0.0;
  double lambda = 0.0;
  double measured = 0.0;
  double bound = 0.0;
  bool dominated = false;
};

std::vector<BoundsRow> bounds_compare(const BuiltSystem& system,
                                      const std::vector<int>& m_list,
                                      const std::vector<double>& dt_list);

struct QubitizationRow {
  int case_index = 0;
  int n_qubits = 0;
  int terms = 0;
  double alpha_norm1 = 0.0;
  double max_phase_error = 0.0;
  double max_invariance_residual = 0.0;
};

std::vector<QubitizationRow> qubitization_verify(std::uint64_t seed, int cases);

}  // namespace mpfsim::experiments
