#pragma once

#include <Eigen/Dense>
#include <vector>

#include "nilsol/errors.hpp"

namespace nilsol {

/// One non-vanishing bracket [E_i, E_j] = value * E_k, 1-based indices with
/// i < j.  The antisymmetric partner (j, i, k, -value) is implied.
struct BracketEntry {
  int i = 0;
  int j = 0;
  int k = 0;
  double value = 0.0;
};

/// Structure constants alpha_{ijk} of a metric Lie algebra with respect to an
/// orthonormal basis {E_1, ..., E_n}: [E_i, E_j] = sum_k alpha_{ijk} E_k.
///
/// Storage is a dense rank-3 array; antisymmetry alpha_{ijk} = -alpha_{jik}
/// holds exactly by construction.  Indices are 0-based here; every external
/// interface (files, CLI, printed output) is 1-based.
class StructureConstants {
 public:
  /// The abelian algebra of the given dimension (all constants zero).
  static StructureConstants zero(int dim);

  /// Builds the tensor from a list of upper-triangular bracket entries and
  /// completes it antisymmetrically.
  static StructureConstants from_brackets(int dim, const std::vector<BracketEntry>& entries);

  int dim() const { return dim_; }

  double operator()(int i, int j, int k) const { return a_[(i * dim_ + j) * dim_ + k]; }

  /// Sets alpha_{ijk} = value and alpha_{jik} = -value (requires i != j).
  void antisymmetric_set(int i, int j, int k, double value);

  /// Lie bracket of two coordinate vectors: z_k = sum_{i,j} x_i y_j alpha_{ijk}.
  Eigen::VectorXd bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  /// All constants multiplied by lambda (lambda != 0).  Curvature scales as
  /// lambda^2, so this is the gauge action used by the family solver.
  StructureConstants scaled(double lambda) const;

  /// 1-based list of the stored upper-triangular entries (i < j, value != 0).
  std::vector<BracketEntry> nonzero_entries() const;

  const std::vector<double>& raw() const { return a_; }

  bool operator==(const StructureConstants& other) const = default;

 private:
  explicit StructureConstants(int dim);

  int dim_;
  std::vector<double> a_;
};

}  // namespace nilsol
