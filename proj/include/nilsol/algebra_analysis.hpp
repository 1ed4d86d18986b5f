#pragma once

#include <Eigen/Dense>
#include <vector>

#include "nilsol/structure_constants.hpp"

namespace nilsol {

/// Relative singular-value threshold used for every rank decision (lower
/// central series, center, derivation space): a singular value counts as
/// nonzero when it exceeds rank_tolerance * sigma_max.
inline constexpr double kRankTolerance = 1e-9;

/// Dimensions of the lower central series g >= [g,g] >= [g,[g,g]] >= ...,
/// ending at 0.  nilpotency_class counts the nonzero terms of the chain
/// (abelian algebras get class 1).
struct SubspaceChain {
  std::vector<int> dims;
  int nilpotency_class = 0;
};

/// Max over basis triples i<j<k of |[E_i,[E_j,E_k]] + [E_j,[E_k,E_i]] + [E_k,[E_i,E_j]]|.
/// Zero (to machine precision) iff the constants define a Lie algebra.
double jacobi_defect(const StructureConstants& sc);

/// Lower central series via rank of stacked bracket images.  Throws
/// NotNilpotentError if the dimensions stabilize above zero.
SubspaceChain lower_central_series(const StructureConstants& sc, double rank_tol = kRankTolerance);

/// Center of the algebra: nullspace of x -> ad(x) as an n^2 x n system.
/// Returns its dimension and an orthonormal basis (columns).
struct CenterResult {
  int dimension = 0;
  Eigen::MatrixXd basis;  // n x dimension, orthonormal columns
};
CenterResult center(const StructureConstants& sc, double rank_tol = kRankTolerance);

/// t_r = sum_j alpha_{rjj} = trace(ad E_r); the zero vector iff unimodular.
Eigen::VectorXd unimodularity(const StructureConstants& sc);

/// Defect tensor of a linear map as a derivation candidate, one n-vector per
/// pair i<j:  Delta(i,j) = D[E_i,E_j] - [DE_i,E_j] - [E_i,DE_j].
/// Returns the Frobenius-style norm sqrt(sum_{i<j} |Delta(i,j)|^2); zero iff
/// D is a derivation.
double derivation_defect(const StructureConstants& sc, const Eigen::MatrixXd& D);

/// Der(g): nullspace of D -> Delta(D).  Basis orthonormal in the Frobenius
/// inner product.
struct DerivationSpace {
  int dimension = 0;
  std::vector<Eigen::MatrixXd> basis;
};
DerivationSpace derivation_space(const StructureConstants& sc, double rank_tol = kRankTolerance);

}  // namespace nilsol
