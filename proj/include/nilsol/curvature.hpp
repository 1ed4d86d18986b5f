#pragma once

#include <Eigen/Dense>
#include <vector>

#include "nilsol/structure_constants.hpp"

namespace nilsol {

/// Default tolerance below which a Jacobi defect is accepted as "is a Lie
/// algebra" by the curvature operations.
inline constexpr double kJacobiTolerance = 1e-9;

/// Levi-Civita connection coefficients in the orthonormal frame,
/// gamma[i][j][k] = <nabla_{E_i} E_j, E_k>.
class ConnectionCoefficients {
 public:
  explicit ConnectionCoefficients(int dim)
      : dim_(dim), g_(static_cast<size_t>(dim) * dim * dim, 0.0) {}

  int dim() const { return dim_; }
  double operator()(int i, int j, int k) const { return g_[(i * dim_ + j) * dim_ + k]; }
  double& operator()(int i, int j, int k) { return g_[(i * dim_ + j) * dim_ + k]; }

 private:
  int dim_;
  std::vector<double> g_;
};

/// Ricci data of the left-invariant metric: the (0,2) tensor, the (1,1)
/// operator (equal entrywise in an orthonormal basis) and the scalar curvature.
struct RicciData {
  Eigen::MatrixXd ric;       // symmetric n x n
  Eigen::MatrixXd operator_; // equals ric entrywise
  double scalar = 0.0;       // trace(ric)
};

/// Koszul formula for the orthonormal frame:
/// gamma_{ijk} = (alpha_{ijk} - alpha_{jki} + alpha_{kij}) / 2.
ConnectionCoefficients connection_coefficients(const StructureConstants& sc);

/// Ricci tensor from first principles: curvature tensor
/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z
/// contracted as ric(X,Y) = sum_i <R(E_i,X)Y, E_i>.
/// Throws NotALieAlgebraError when jacobi_defect(sc) > jacobi_tol.
RicciData ricci_tensor(const StructureConstants& sc, double jacobi_tol = kJacobiTolerance);

/// Independent quadratic formula, valid for nilpotent algebras:
/// ric_{pq} = -1/2 sum_{ij} alpha_{pij} alpha_{qij} + 1/4 sum_{ij} alpha_{ijp} alpha_{ijq}.
/// Throws NotUnimodularError when unimodularity(sc) is nonzero.
RicciData ricci_nilpotent_oracle(const StructureConstants& sc, double unimodular_tol = 1e-9);

/// trace(ric); for nilpotent algebras equals -1/4 sum alpha_{ijk}^2.
double scalar_curvature(const StructureConstants& sc, double jacobi_tol = kJacobiTolerance);

}  // namespace nilsol
