#include "nilsol/least_squares.hpp"

#include <cmath>

namespace nilsol {

namespace {

Eigen::MatrixXd numeric_jacobian(const ResidualFn& residual, const Eigen::VectorXd& x, int residual_size) {
  const int n = static_cast<int>(x.size());
  Eigen::MatrixXd J(residual_size, n);
  Eigen::VectorXd xp = x, xm = x;
  for (int k = 0; k < n; ++k) {
    const double h = 1e-6 * std::max(1.0, std::abs(x[k]));
    xp[k] = x[k] + h;
    xm[k] = x[k] - h;
    J.col(k) = (residual(xp) - residual(xm)) / (2.0 * h);
    xp[k] = x[k];
    xm[k] = x[k];
  }
  return J;
}

}  // namespace

LeastSquaresResult levenberg_marquardt(const ResidualFn& residual, const Eigen::VectorXd& x0,
                                       const LeastSquaresOptions& opts) {
  LeastSquaresResult res;
  res.x = x0;
  Eigen::VectorXd r = residual(res.x);
  double f = r.squaredNorm();
  double lambda = opts.initial_lambda;

  for (int it = 0; it < opts.max_iterations; ++it) {
    res.iterations = it;
    if (std::sqrt(f) <= opts.target_residual) {
      res.converged = true;
      break;
    }
    const Eigen::MatrixXd J = numeric_jacobian(residual, res.x, static_cast<int>(r.size()));
    const Eigen::VectorXd g = J.transpose() * r;
    const Eigen::MatrixXd H = J.transpose() * J;

    bool improved = false;
    for (int attempt = 0; attempt < 25 && lambda <= 1e14; ++attempt) {
      Eigen::MatrixXd Hl = H;
      Hl.diagonal().array() += lambda;
      const Eigen::VectorXd dx = Hl.ldlt().solve(-g);
      const Eigen::VectorXd rn = residual(res.x + dx);
      const double fn = rn.squaredNorm();
      if (std::isfinite(fn) && fn < f) {
        res.x += dx;
        r = rn;
        f = fn;
        lambda = std::max(lambda * 0.3, 1e-14);
        improved = true;
        break;
      }
      lambda *= 10.0;
    }
    if (!improved) break;  // stuck in a local minimum
  }
  res.residual_norm = std::sqrt(f);
  res.converged = res.converged || res.residual_norm <= opts.target_residual;
  return res;
}

}  // namespace nilsol
