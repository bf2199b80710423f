#pragma once

#include <Eigen/Dense>
#include <string>

#include "dopt/graph.hpp"
#include "dopt/problem.hpp"

namespace dopt {

// Centralized reference solution used to grade distributed runs.
struct OracleSolution {
  Eigen::VectorXd z_star;       // common minimizer, length N
  Eigen::VectorXd lambda_star;  // stacked multipliers (empty when unconstrained)
  Eigen::VectorXd xi_star;      // stacked integrator equilibrium, length n*N
  double achieved_residual = 0.0;
  std::string method;
};

// Damped Newton on the summed gradient; finite-difference Hessian.
// Residual target is the norm of the summed gradient.
OracleSolution solve_unconstrained(const ProblemInstance& p, double tol = 1e-10,
                                   int max_iter = 200);

// Centralized primal-dual flow to locate the active set, then a Newton
// polish of the KKT system on that set. Final KKT residual must reach tol.
OracleSolution solve_constrained(const ProblemInstance& p, double tol = 1e-8);

// Minimal-norm solution xi of  (L_I kron I) xi = alpha * (phi + Gamma lambda)
// evaluated at the optimum, computed blockwise through the eigendecomposition
// of the integral Laplacian. Throws NotInImage when the right-hand side has a
// component in the kernel beyond tolerance.
Eigen::VectorXd compute_equilibrium_xi(const ProblemInstance& p, const NetworkGraph& g,
                                       double alpha, const Eigen::VectorXd& z_star,
                                       const Eigen::VectorXd& lambda_star);

// Dispatcher: solves the problem and fills in the integrator equilibrium.
OracleSolution solve(const ProblemInstance& p, const NetworkGraph& g, double alpha);

}  // namespace dopt
