#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "dopt/graph.hpp"
#include "dopt/problem.hpp"

namespace dopt {

// State of one agent: estimate x_i, PI integrator xi_i, multipliers rho_i.
struct AgentState {
  Eigen::VectorXd x;
  Eigen::VectorXd xi;
  Eigen::VectorXd rho;  // length m_i, elementwise >= 0
};

struct SwarmState {
  std::vector<AgentState> agents;
  double t = 0.0;
};

// Stacking helpers (agent-major order).
Eigen::VectorXd stack_x(const SwarmState& s);
Eigen::VectorXd stack_xi(const SwarmState& s);
Eigen::VectorXd stack_rho(const SwarmState& s);

// Pure diffusive coupling plus local gradient descent:
//   dx = -alpha*phi(x) - (L_P (x) I_N) x
// Known to settle with a consensus bias when the c_i differ; kept as the
// baseline the PI variant improves on.
Eigen::VectorXd consensus_gradient_rhs(const ProblemInstance& p, const NetworkGraph& g,
                                       double alpha, const Eigen::VectorXd& x);

// PI consensus closed loop:
//   dx  = -(L_P (x) I_N) x + (L_I (x) I_N) xi - alpha*phi(x)
//   dxi = -(L_I (x) I_N) x
std::pair<Eigen::VectorXd, Eigen::VectorXd> pi_consensus_rhs(
    const ProblemInstance& p, const NetworkGraph& g, double alpha,
    const Eigen::VectorXd& x, const Eigen::VectorXd& xi);

// Projected multiplier law: drho_il = 0 when rho_il = 0 and g_il < 0,
// otherwise g_il. The zero test uses rho_tol since exact zeros do not
// survive floating point.
double psi(double rho_il, double g_il, double rho_tol = 1e-12);
Eigen::VectorXd psi(const Eigen::VectorXd& rho, const Eigen::VectorXd& g,
                    double rho_tol = 1e-12);

struct ConstrainedRhs {
  Eigen::VectorXd dx;
  Eigen::VectorXd dxi;
  Eigen::VectorXd drho;  // stacked, length total_constraints
};

// Primal-dual extension: dx gains -alpha*Gamma(x)rho, and rho follows psi.
// With no constraints anywhere this reduces exactly (bitwise) to
// pi_consensus_rhs.
ConstrainedRhs constrained_rhs(const ProblemInstance& p, const NetworkGraph& g,
                               double alpha, const Eigen::VectorXd& x,
                               const Eigen::VectorXd& xi, const Eigen::VectorXd& rho);

// Coupling map E of one edge applied to a stacked pair [p; q]:
//   E [p; q] = [a*p - b*q; b*p]
Eigen::VectorXd apply_coupling(double a, double b, const Eigen::VectorXd& pq);

// Controller output v_ij = E (r_ij - [x_i; xi_i]).
Eigen::VectorXd controller_output(double a, double b, const Eigen::VectorXd& x_i,
                                  const Eigen::VectorXd& xi_i,
                                  const Eigen::VectorXd& r_ij);

// Substitute signal an agent holds for neighbor j: r = [r^x; r^xi],
// either the decoded scattering output or a delayed raw state.
struct NeighborSignal {
  int neighbor = -1;
  Eigen::VectorXd r;  // length 2N
};

struct AgentDeriv {
  Eigen::VectorXd dx;
  Eigen::VectorXd dxi;
  Eigen::VectorXd drho;
};

// Per-agent delayed form:
//   dx_i  = sum_j a_ij (r^x_ij - x_i) - sum_j b_ij (r^xi_ij - xi_i)
//           - alpha (phi_i(x_i) + Gamma_i(x_i) rho_i)
//   dxi_i = sum_j b_ij (r^x_ij - x_i)
//   drho_i = psi(rho_i, g_i(x_i))
// Signals must cover every neighbor of agent i.
AgentDeriv delayed_agent_rhs(const ProblemInstance& p, const NetworkGraph& g,
                             double alpha, int i, const AgentState& state_i,
                             const std::vector<NeighborSignal>& signals);

}  // namespace dopt
