#include "nilsol/structure_constants.hpp"

#include <cmath>
#include <set>
#include <string>

namespace nilsol {

StructureConstants::StructureConstants(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim * dim, 0.0) {}

StructureConstants StructureConstants::zero(int dim) {
  if (dim < 1) {
    throw NonPositiveDimError("dimension must be >= 1, got " + std::to_string(dim));
  }
  return StructureConstants(dim);
}

StructureConstants StructureConstants::from_brackets(int dim, const std::vector<BracketEntry>& entries) {
  StructureConstants sc = zero(dim);
  std::set<std::tuple<int, int, int>> seen;
  for (const BracketEntry& e : entries) {
    if (e.i < 1 || e.j < 1 || e.k < 1 || e.i > dim || e.j > dim || e.k > dim || e.i >= e.j) {
      throw IndexOutOfRangeError("bracket entry (" + std::to_string(e.i) + "," + std::to_string(e.j) + "," +
                                 std::to_string(e.k) + ") out of range for dim " + std::to_string(dim) +
                                 " (need 1 <= i < j <= dim, 1 <= k <= dim)");
    }
    if (!seen.insert({e.i, e.j, e.k}).second) {
      throw DuplicateEntryError("duplicate bracket entry (" + std::to_string(e.i) + "," + std::to_string(e.j) + "," +
                                std::to_string(e.k) + ")");
    }
    sc.antisymmetric_set(e.i - 1, e.j - 1, e.k - 1, e.value);
  }
  return sc;
}

void StructureConstants::antisymmetric_set(int i, int j, int k, double value) {
  if (i == j) {
    throw IndexOutOfRangeError("antisymmetric_set requires i != j");
  }
  a_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k] = value;
  a_[(static_cast<size_t>(j) * dim_ + i) * dim_ + k] = -value;
}

Eigen::VectorXd StructureConstants::bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  if (x.size() != dim_ || y.size() != dim_) {
    throw DimensionMismatchError("bracket arguments must have length " + std::to_string(dim_));
  }
  Eigen::VectorXd z = Eigen::VectorXd::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0.0) continue;
      const double xy = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) {
        z[k] += xy * (*this)(i, j, k);
      }
    }
  }
  return z;
}

StructureConstants StructureConstants::scaled(double lambda) const {
  if (lambda == 0.0) {
    throw ZeroScaleError("scale factor must be nonzero");
  }
  StructureConstants out = *this;
  for (double& v : out.a_) v *= lambda;
  return out;
}

std::vector<BracketEntry> StructureConstants::nonzero_entries() const {
  std::vector<BracketEntry> out;
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      for (int k = 0; k < dim_; ++k) {
        const double v = (*this)(i, j, k);
        if (v != 0.0) out.push_back({i + 1, j + 1, k + 1, v});
      }
    }
  }
  return out;
}

}  // namespace nilsol
