#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "nilsol/catalog.hpp"

namespace nilsol {

struct SolveOptions {
  int multistarts = 64;
  std::uint64_t seed = 0;
  int max_iterations = 200;
  double residual_tol = 1e-10;
  double domain_margin = 1e-4;  // strict-inequality membership margin
  std::string gauge;            // parameter pinned to 1; empty = family default
};

/// One cluster of converged multistart points.
struct FamilySolution {
  ParamMap parameters;     // best point found in the cluster (gauge and pinned values included)
  ParamMap canonical;      // sign-canonicalized representative (an isometric point)
  double c = 0.0;
  Eigen::MatrixXd derivation;  // Ric - c*Id at the found point
  double residual = 0.0;       // soliton-equation residual norm
  bool interior = false;       // canonical point satisfies the domain (margin eps)
  int hits = 0;                // starts that converged into this cluster
};

struct SolveReport {
  FamilyId id;
  std::string gauge;
  SolveOptions options;
  std::vector<FamilySolution> clusters;  // in order of first discovery (start-index order)
  double best_residual = 0.0;            // best residual over all starts
  bool no_convergence = false;           // no start reached 1e2 * residual_tol
};

/// Minimizes the squared soliton-equation residual over the family's free
/// parameters and the constant c, from opts.multistarts deterministic random
/// starts.  The gauge parameter is pinned to 1 (quadratic covariance
/// (alpha,c,D) -> (lambda*alpha, lambda^2 c, lambda^2 D) makes this lossless),
/// domain equalities are pinned structurally, and c starts from best_c at the
/// sampled point.  Converged points are clustered at distance 1e-6 and each
/// cluster is classified interior/boundary via its canonical-sign
/// representative.
SolveReport solve_family(const FamilyEntry& entry, const SolveOptions& opts);

}  // namespace nilsol
