#include "nilsol/curvature.hpp"

#include <string>

#include "nilsol/algebra_analysis.hpp"

namespace nilsol {

ConnectionCoefficients connection_coefficients(const StructureConstants& sc) {
  const int n = sc.dim();
  ConnectionCoefficients gamma(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        gamma(i, j, k) = 0.5 * (sc(i, j, k) - sc(j, k, i) + sc(k, i, j));
      }
    }
  }
  return gamma;
}

RicciData ricci_tensor(const StructureConstants& sc, double jacobi_tol) {
  const double jd = jacobi_defect(sc);
  if (jd > jacobi_tol) {
    throw NotALieAlgebraError("Jacobi identity fails: defect " + std::to_string(jd));
  }
  const int n = sc.dim();
  const ConnectionCoefficients g = connection_coefficients(sc);

  RicciData out;
  out.ric = Eigen::MatrixXd::Zero(n, n);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      double acc = 0.0;
      // <R(E_i,E_p)E_q, E_i> summed over i, with all nabla coefficients constant
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
          acc += g(p, q, k) * g(i, k, i) - g(i, q, k) * g(p, k, i) - sc(i, p, k) * g(k, q, i);
        }
      }
      out.ric(p, q) = acc;
    }
  }
  // kill the last ulps of asymmetry from summation order
  out.ric = 0.5 * (out.ric + out.ric.transpose()).eval();
  out.operator_ = out.ric;
  out.scalar = out.ric.trace();
  return out;
}

RicciData ricci_nilpotent_oracle(const StructureConstants& sc, double unimodular_tol) {
  const Eigen::VectorXd t = unimodularity(sc);
  if (t.cwiseAbs().maxCoeff() > unimodular_tol) {
    throw NotUnimodularError("algebra is not unimodular: max |trace(ad E_r)| = " +
                             std::to_string(t.cwiseAbs().maxCoeff()));
  }
  const int n = sc.dim();
  RicciData out;
  out.ric = Eigen::MatrixXd::Zero(n, n);
  for (int p = 0; p < n; ++p) {
    for (int q = p; q < n; ++q) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          acc += -0.5 * sc(p, i, j) * sc(q, i, j) + 0.25 * sc(i, j, p) * sc(i, j, q);
        }
      }
      out.ric(p, q) = acc;
      out.ric(q, p) = acc;
    }
  }
  out.operator_ = out.ric;
  out.scalar = out.ric.trace();
  return out;
}

double scalar_curvature(const StructureConstants& sc, double jacobi_tol) {
  return ricci_tensor(sc, jacobi_tol).scalar;
}

}  // namespace nilsol
