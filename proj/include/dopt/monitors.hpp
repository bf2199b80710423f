#pragma once

#include <string>
#include <vector>

#include "dopt/graph.hpp"
#include "dopt/oracle.hpp"
#include "dopt/problem.hpp"
#include "dopt/simulator.hpp"

namespace dopt {

// Storage function evaluated along a recorded trajectory. Residuals are
// filled by check_dissipation: (forward difference of values) minus the
// permitted supply, one entry per sample gap.
struct StorageReport {
  std::string name;
  std::vector<double> values;
  std::vector<double> dissipation_residuals;
};

struct DissipationCheck {
  std::string name;
  bool pass = false;
  double max_violation = 0.0;
  double at_time = 0.0;
  double tol = 0.0;
};

struct ConvergenceMetrics {
  std::vector<double> consensus_error;  // max_i |x_i - mean(x)|
  std::vector<double> optimality_gap;   // max_i |x_i - z*|
  std::vector<double> kkt_max;          // KKT residual at (mean x, rho)
};

// Everything the monitors need. The oracle may be null for storages that do
// not reference equilibrium quantities (S_P, S).
struct MonitorContext {
  const ProblemInstance* p = nullptr;
  const NetworkGraph* g = nullptr;
  const Telemetry* tel = nullptr;
  const OracleSolution* oracle = nullptr;
};

// Largest stacked state norm over the recorded samples.
double peak_state_norm(const Telemetry& tel);

// Scale-aware dissipation tolerance: 50 * max(h, sample spacing) * (1 + peak).
double default_tol(const MonitorContext& ctx);

// Storage evaluators (values only; residuals are left empty).
StorageReport eval_storage_sp(const MonitorContext& ctx);        // 1/2 |x|^2
StorageReport eval_storage_s(const MonitorContext& ctx);         // + 1/2 |xi|^2
StorageReport eval_storage_s_tilde(const MonitorContext& ctx);   // shifted
StorageReport eval_storage_s_bar(const MonitorContext& ctx, int agent);
StorageReport eval_storage_u(const MonitorContext& ctx, int agent);
StorageReport eval_storage_v(const MonitorContext& ctx, int edge);
StorageReport eval_storage_w_i(const MonitorContext& ctx, int agent);
StorageReport eval_storage_w(const MonitorContext& ctx);

// Permitted supply-rate series, one entry per sample.
std::vector<double> supply_xu(const MonitorContext& ctx);             // x' u
std::vector<double> supply_xtilde_utilde(const MonitorContext& ctx);  // shifted
std::vector<double> supply_port(const MonitorContext& ctx, int agent);
std::vector<double> supply_u(const MonitorContext& ctx, int agent);
std::vector<double> supply_wave(const MonitorContext& ctx, int edge);
std::vector<double> supply_constrained_shifted(const MonitorContext& ctx);

// Forward-difference Dini estimate of the storage derivative compared with
// the supply; fills report.dissipation_residuals.
DissipationCheck check_dissipation(StorageReport& report,
                                   const std::vector<double>& supply,
                                   const std::vector<double>& times, double tol);

// Reports plus their verdicts, as selected for the run's algorithm and
// channel. Integrated (cumulative) checks contribute a verdict only.
struct MonitorBundle {
  std::vector<StorageReport> reports;
  std::vector<DissipationCheck> checks;
};

MonitorBundle run_standard_monitors(const MonitorContext& ctx);

// The dissipation checks appropriate for the run's algorithm and channel.
std::vector<DissipationCheck> run_standard_checks(const MonitorContext& ctx);

ConvergenceMetrics convergence_metrics(const MonitorContext& ctx);

}  // namespace dopt
