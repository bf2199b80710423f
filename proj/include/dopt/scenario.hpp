#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "dopt/graph.hpp"
#include "dopt/monitors.hpp"
#include "dopt/oracle.hpp"
#include "dopt/problem.hpp"
#include "dopt/simulator.hpp"

namespace dopt {

// Declarative run description, loadable from JSON. Everything is validated
// up front; materialize() turns it into live objects.

struct GraphSpec {
  std::string topology = "ring";  // ring | path | complete | custom
  int nodes = 0;
  double a = 1.0;  // uniform proportional weight for the generators
  double b = 1.0;  // uniform integral weight
  std::vector<Edge> edges;  // custom topology only (0-based after parsing)
};

struct ConstraintBlock {
  Eigen::MatrixXd A;  // m_i x N
  Eigen::VectorXd b;  // m_i
};

struct ProblemSpec {
  std::string family;  // quadratic | partial_quadratic | constrained_quadratic | localization2d
  int dimension = 0;
  Eigen::MatrixXd targets;              // quadratic families: one row per agent
  std::vector<int> coords;              // partial family (0-based after parsing)
  Eigen::VectorXd scalar_targets;       // partial family
  std::vector<ConstraintBlock> constraints;  // constrained family, one per agent
  Eigen::VectorXd slater;               // constrained family (empty = absent)
  std::vector<Segment2d> segments;      // localization family, one per agent
  std::vector<std::vector<Halfplane2d>> halfplanes;
  double loc_weight = 1.0;
};

struct DelaySpec {
  std::string kind = "none";  // none | uniform | per_edge | random
  double value = 0.0;
  std::vector<EdgeDelays> per_edge;
  double low = 0.0;
  double high = 0.0;
};

struct InitSpec {
  std::string x_mode = "random01";  // random01 | zeros | explicit
  Eigen::MatrixXd x;                // explicit: one row per agent
  std::string xi_mode = "zeros";    // zeros | explicit
  Eigen::MatrixXd xi;
  std::string rho_mode = "zeros";   // zeros | random01 | explicit
  std::vector<Eigen::VectorXd> rho;
};

struct OutputSpec {
  std::string dir;  // default: out/<name>
  double gap_tol = 1e-3;
  double kkt_tol = 1e-3;
};

struct Scenario {
  std::string name;
  GraphSpec graph;
  ProblemSpec problem;
  std::string algorithm = "pi_consensus";  // gradient_consensus | pi_consensus | constrained
  double h = 1e-3;
  double t_end = 10.0;
  double alpha = 1.0;
  std::uint64_t seed = 0;
  int record_stride = 1;
  double blowup_threshold = 1e9;
  double q_mineig_floor = 1e-6;
  DelaySpec delays;
  bool scattering_enabled = false;
  double eta = 1.0;
  std::vector<double> eta_per_edge;  // empty = uniform eta on every edge
  InitSpec init;
  OutputSpec output;
};

// Live objects built from a scenario; draws happen here, in a fixed order,
// from a generator seeded by the scenario seed.
struct Materialized {
  ProblemInstance problem;
  NetworkGraph graph;
  SimConfig cfg;
  SwarmState init;
};

Scenario parse_scenario(const std::string& path);
Scenario parse_scenario_text(const std::string& text, const std::string& origin);
std::string serialize_scenario(const Scenario& s);

Materialized materialize(const Scenario& s);

// Part of a finished run that callers (CLI, sweeps, tests) care about.
struct RunOutcome {
  int exit_code = 1;  // 0 converged, 2 diverged, 3 finished unconverged
  bool diverged = false;
  bool converged = false;
  double terminal_gap = 0.0;
  double terminal_kkt = 0.0;
  std::string summary_path;
  std::string telemetry_path;
};

RunOutcome run_scenario(const Scenario& s, bool quiet);

// Parameter sweep. Grid syntax: "key=v1,v2;key2=v3,v4" over numeric keys
// alpha, eta, h, t_end, seed, delay_low, delay_high. Cells run in parallel,
// each into its own subdirectory of the scenario output dir.
struct SweepRow {
  std::string cell;
  std::string params;
  int exit_code = 1;
  bool diverged = false;
  double terminal_gap = 0.0;
  double terminal_kkt = 0.0;
};

std::vector<SweepRow> sweep(const Scenario& base, const std::string& grid, bool quiet);

// Bundled experiment presets (with aliases); throws FileNotFound for an
// unknown name.
std::vector<std::string> preset_names();
Scenario preset_scenario(const std::string& name);
bool is_preset(const std::string& name);

}  // namespace dopt
