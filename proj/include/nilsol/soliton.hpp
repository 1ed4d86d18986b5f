#pragma once

#include <Eigen/Dense>
#include <vector>

#include "nilsol/curvature.hpp"
#include "nilsol/structure_constants.hpp"

namespace nilsol {

/// Default residual tolerance for soliton verdicts.
inline constexpr double kSolitonTolerance = 1e-10;

enum class SolitonType { shrinking, steady, expanding };

const char* to_string(SolitonType type);

/// Rank-3 residual of the algebraic soliton equation in structure-constant
/// form, together with its Euclidean norm over all (t,p,q).
struct SolitonResidual {
  int dim = 0;
  std::vector<double> tensor;  // flattened [t][p][q]
  double norm = 0.0;

  double operator()(int t, int p, int q) const { return tensor[(t * dim + p) * dim + q]; }
};

/// Evaluates, for every (t,p,q), the expression
///   c*alpha_{qpt} + 1/4 * sum_{i,j,r} { ... }
/// with the braced sum carrying the seven product groups of the
/// structure-constant soliton equation (including the trace(ad) groups that
/// vanish on unimodular algebras).  Defined for any antisymmetric alpha.
SolitonResidual soliton_residual(const StructureConstants& sc, double c);

/// Closed form of the derivation: D(E_i) = -c E_i + 1/4 sum_l {...} E_l.
/// Returns the matrix whose i-th column is D(E_i); it equals the Ricci
/// operator minus c*Id for every Lie algebra input.
Eigen::MatrixXd soliton_derivation(const StructureConstants& sc, double c);

/// Derivation-defect tensor of a candidate map D over all ordered pairs
/// (p,q), flattened [t][p][q]; used by best_c's normal equation and by the
/// residual-calibration tests.
std::vector<double> derivation_defect_tensor(const StructureConstants& sc, const Eigen::MatrixXd& D);

/// The defect tensor of Ric - c*Id is affine in c; this solves the 1-variable
/// least-squares problem for the minimizing c.  If the defect does not depend
/// on c (abelian direction), returns c = 0 and the (then c-independent)
/// defect value.
struct BestC {
  double c = 0.0;
  double defect = 0.0;  // derivation_defect(sc, Ric - c*Id) at the minimizer
};
BestC best_c(const StructureConstants& sc, double jacobi_tol = kJacobiTolerance);

struct SolitonCertificate {
  bool is_soliton = false;
  double c = 0.0;
  Eigen::MatrixXd derivation;        // D = Ric - c*Id
  double soliton_residual_norm = 0.0;
  double derivation_defect = 0.0;
  std::vector<double> ricci_eigenvalues;  // ascending
  SolitonType soliton_type = SolitonType::steady;
};

/// Decides algebraic-Ricci-soliton structure: computes Ric, the optimal c,
/// and D = Ric - c*Id; a soliton requires both the derivation defect and the
/// soliton-equation residual at c to be <= tol.  The two criteria agree on
/// every valid input; disagreement throws OracleDisagreementError.
SolitonCertificate detect_soliton(const StructureConstants& sc, double tol = kSolitonTolerance);

}  // namespace nilsol
