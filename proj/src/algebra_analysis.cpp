#include "nilsol/algebra_analysis.hpp"

#include <cmath>
#include <string>

namespace nilsol {

namespace {

/// Orthonormal basis of the column span of M, with rank decided by SVD
/// thresholding at rank_tol * sigma_max.
Eigen::MatrixXd column_span(const Eigen::MatrixXd& M, double rank_tol) {
  if (M.cols() == 0) return Eigen::MatrixXd(M.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  int rank = 0;
  if (sv.size() > 0 && sv[0] > 0.0) {
    while (rank < sv.size() && sv[rank] > rank_tol * sv[0]) ++rank;
  }
  return svd.matrixU().leftCols(rank);
}

/// Orthonormal nullspace basis of M (columns), same thresholding rule.
Eigen::MatrixXd nullspace(const Eigen::MatrixXd& M, double rank_tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int rank = 0;
  if (sv.size() > 0 && sv[0] > 0.0) {
    while (rank < sv.size() && sv[rank] > rank_tol * sv[0]) ++rank;
  }
  return svd.matrixV().rightCols(M.cols() - rank);
}

}  // namespace

double jacobi_defect(const StructureConstants& sc) {
  const int n = sc.dim();
  double worst = 0.0;
  Eigen::VectorXd cycle(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        cycle.setZero();
        // [E_i,[E_j,E_k]] + [E_j,[E_k,E_i]] + [E_k,[E_i,E_j]]
        for (int m = 0; m < n; ++m) {
          for (int t = 0; t < n; ++t) {
            cycle[t] += sc(j, k, m) * sc(i, m, t) + sc(k, i, m) * sc(j, m, t) + sc(i, j, m) * sc(k, m, t);
          }
        }
        worst = std::max(worst, cycle.norm());
      }
    }
  }
  return worst;
}

SubspaceChain lower_central_series(const StructureConstants& sc, double rank_tol) {
  const int n = sc.dim();
  SubspaceChain chain;
  chain.dims.push_back(n);

  // current term g_k as orthonormal columns; g_0 = g
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  while (true) {
    // images [E_i, b] for all basis vectors of g and all columns b of g_k
    Eigen::MatrixXd images(n, n * term.cols());
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd ei = Eigen::VectorXd::Unit(n, i);
      for (int c = 0; c < term.cols(); ++c) {
        images.col(i * term.cols() + c) = sc.bracket(ei, term.col(c));
      }
    }
    Eigen::MatrixXd next = column_span(images, rank_tol);
    const int d = static_cast<int>(next.cols());
    chain.dims.push_back(d);
    if (d == 0) break;
    if (d >= chain.dims[chain.dims.size() - 2]) {
      throw NotNilpotentError("lower central series stabilized at dimension " + std::to_string(d));
    }
    term = next;
  }
  for (int d : chain.dims) {
    if (d > 0) ++chain.nilpotency_class;
  }
  return chain;
}

CenterResult center(const StructureConstants& sc, double rank_tol) {
  const int n = sc.dim();
  // rows indexed by (j,k): sum_i x_i alpha_{ijk} = 0
  Eigen::MatrixXd M(n * n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        M(j * n + k, i) = sc(i, j, k);
      }
    }
  }
  CenterResult out;
  out.basis = nullspace(M, rank_tol);
  out.dimension = static_cast<int>(out.basis.cols());
  return out;
}

Eigen::VectorXd unimodularity(const StructureConstants& sc) {
  const int n = sc.dim();
  Eigen::VectorXd t = Eigen::VectorXd::Zero(n);
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < n; ++j) {
      t[r] += sc(r, j, j);
    }
  }
  return t;
}

double derivation_defect(const StructureConstants& sc, const Eigen::MatrixXd& D) {
  const int n = sc.dim();
  if (D.rows() != n || D.cols() != n) {
    throw DimensionMismatchError("derivation candidate must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  double sq = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int t = 0; t < n; ++t) {
        double d = 0.0;
        for (int m = 0; m < n; ++m) {
          d += sc(i, j, m) * D(t, m) - D(m, i) * sc(m, j, t) - D(m, j) * sc(i, m, t);
        }
        sq += d * d;
      }
    }
  }
  return std::sqrt(sq);
}

DerivationSpace derivation_space(const StructureConstants& sc, double rank_tol) {
  const int n = sc.dim();
  // unknowns D(t,m) flattened as t*n+m; one equation per (i<j, t)
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n * n * (n - 1) / 2, n * n);
  int row = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int t = 0; t < n; ++t, ++row) {
        for (int m = 0; m < n; ++m) {
          M(row, t * n + m) += sc(i, j, m);
          M(row, m * n + i) -= sc(m, j, t);
          M(row, m * n + j) -= sc(i, m, t);
        }
      }
    }
  }
  Eigen::MatrixXd null = nullspace(M, rank_tol);
  DerivationSpace out;
  out.dimension = static_cast<int>(null.cols());
  out.basis.reserve(out.dimension);
  for (int c = 0; c < null.cols(); ++c) {
    Eigen::MatrixXd B(n, n);
    for (int t = 0; t < n; ++t) {
      for (int m = 0; m < n; ++m) {
        B(t, m) = null(t * n + m, c);
      }
    }
    out.basis.push_back(std::move(B));
  }
  return out;
}

}  // namespace nilsol
