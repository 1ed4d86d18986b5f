#pragma once

#include <Eigen/Dense>
#include <functional>

namespace nilsol {

/// Residual function: x -> r(x); the objective is |r(x)|^2.
using ResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

struct LeastSquaresOptions {
  int max_iterations = 200;
  double target_residual = 1e-12;  // stop when |r| drops below this
  double initial_lambda = 1e-3;
};

struct LeastSquaresResult {
  Eigen::VectorXd x;
  double residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;  // residual target reached
};

/// Damped least squares (Levenberg-Marquardt) with a numerically
/// differentiated Jacobian (central differences, step 1e-6 * max(1,|x_k|)).
/// The objective is polynomial and smooth for every caller in this project,
/// so no analytic derivatives are needed.
LeastSquaresResult levenberg_marquardt(const ResidualFn& residual, const Eigen::VectorXd& x0,
                                       const LeastSquaresOptions& opts = {});

}  // namespace nilsol
