#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "dopt/errors.hpp"

namespace dopt {

// Per-agent convex cost f_i with gradient phi_i, plus m_i inequality
// constraints g_i(z) <= 0 with Jacobian Gamma_i (columns are the gradients
// of the individual g_il). Evaluators must be pure functions.
struct AgentCost {
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
  int constraint_count = 0;  // m_i, 0 = unconstrained
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> constraints;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> constraint_jacobian;
  std::vector<int> strict_coords;  // Z_i, 0-based coordinate indices
};

// A problem instance shared by all agents: min_z sum_i f_i(z) subject to
// every agent's g_i(z) <= 0. The decision dimension N is common.
struct ProblemInstance {
  int dimension = 0;  // N
  std::vector<AgentCost> agents;
  std::optional<Eigen::VectorXd> slater_point;
  // When set, coordinates [spd2_offset, spd2_offset+2] pack a symmetric
  // 2x2 matrix (m11, m12, m22) that the simulator must keep positive
  // definite (localization demo).
  std::optional<int> spd2_offset;

  int agent_count() const { return static_cast<int>(agents.size()); }
  int total_constraints() const {
    int m = 0;
    for (const auto& a : agents) m += a.constraint_count;
    return m;
  }
};

struct KktResidual {
  double stationarity = 0.0;      // ||grad f(z) + sum_i Gamma_i(z) lambda_i||
  double primal_violation = 0.0;  // ||max(g(z), 0)||
  double dual_negativity = 0.0;   // ||max(-lambda, 0)||
  double complementarity = 0.0;   // ||lambda .* g(z)||
  double max_component() const;
};

// f_i(z) = 1/2 (z - c_i)' W_i (z - c_i); strictly convex, unconstrained.
ProblemInstance quadratic_problem(int n, int N,
                                  const std::vector<Eigen::VectorXd>& targets,
                                  const std::vector<Eigen::MatrixXd>& weights);

// Identity weights.
ProblemInstance quadratic_problem(int n, int N,
                                  const std::vector<Eigen::VectorXd>& targets);

// f_i(z) = (z_{l_i} - c_i)^2, flat in every other coordinate. Coordinates
// are 0-based here; the union of assigned coordinates must cover 0..N-1.
ProblemInstance partial_quadratic_problem(int n, int N,
                                          const std::vector<int>& coords,
                                          const std::vector<double>& targets);

// Per-agent linear constraints A_i z <= b_i on top of the quadratic family.
// The caller supplies a strictly feasible Slater point, validated here.
struct LinearConstraints {
  Eigen::MatrixXd A;  // m_i x N (0 x N allowed)
  Eigen::VectorXd b;  // m_i
};
ProblemInstance constrained_quadratic_problem(
    int n, int N, const std::vector<Eigen::VectorXd>& targets,
    const std::vector<Eigen::MatrixXd>& weights,
    const std::vector<LinearConstraints>& constraints,
    const Eigen::VectorXd& slater_point);

// 2-D ellipse localization demo. Decision z = (q1, q2, Q11, Q12, Q22), N=5:
// center q and symmetric shape matrix Q of the ellipse
// Omega(q, Q) = { q + Qy : ||y|| <= 1 }.
//   f_i(z) = -log det Q + w * dist(q, C_i)^2 + 1e-5 ||q||^2
// where C_i is a 2-D segment observed by agent i. Each halfplane
// (normal nu, offset d) yields the containment constraint
//   nu'q + ||Q nu|| - d <= 0.
struct Segment2d {
  Eigen::Vector2d p1;
  Eigen::Vector2d p2;
};
struct Halfplane2d {
  Eigen::Vector2d normal;
  double offset = 0.0;  // points with normal'p <= offset are inside
};
ProblemInstance localization2d_problem(
    const std::vector<Segment2d>& segments,
    const std::vector<std::vector<Halfplane2d>>& halfplanes, double w);

// sum_i phi_i(z)
Eigen::VectorXd global_gradient(const ProblemInstance& p, const Eigen::VectorXd& z);

// sum_i f_i(z)
double global_value(const ProblemInstance& p, const Eigen::VectorXd& z);

// Stacked constraint values (g_1(z)', ..., g_n(z)')' at a common point.
Eigen::VectorXd stacked_constraints(const ProblemInstance& p, const Eigen::VectorXd& z);

// KKT residual at (z, lambda); lambda stacks the per-agent multipliers.
KktResidual kkt_residual(const ProblemInstance& p, const Eigen::VectorXd& z,
                         const Eigen::VectorXd& lambda);

// Closest point on a segment to q (used by the localization cost).
Eigen::Vector2d project_to_segment(const Segment2d& seg, const Eigen::Vector2d& q);

}  // namespace dopt
