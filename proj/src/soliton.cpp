#include "nilsol/soliton.hpp"

#include <cmath>

#include "nilsol/algebra_analysis.hpp"

namespace nilsol {

const char* to_string(SolitonType type) {
  switch (type) {
    case SolitonType::shrinking: return "shrinking";
    case SolitonType::steady: return "steady";
    case SolitonType::expanding: return "expanding";
  }
  return "?";
}

namespace {

// Small dense rank-2/rank-3 scratch with [i][j](...) layout.
struct Scratch {
  int n;
  std::vector<double> m1, m2, m3, vt2, m5, m6;

  explicit Scratch(int dim)
      : n(dim), m1(dim * dim), m2(dim * dim), m3(dim * dim), vt2(dim * dim), m5(dim * dim), m6(dim * dim) {}
};

// Precomputes the pair contractions of the seven groups so the main loop is
// O(n^4) instead of O(n^6).  Each M is validated against the literal
// six-index transcription in the unit tests.
Scratch stage_groups(const StructureConstants& a) {
  const int n = a.dim();
  Scratch s(n);

  std::vector<double> tr(n, 0.0);
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < n; ++j) tr[r] += a(r, j, j);
  }

  for (int p = 0; p < n; ++p) {
    for (int i = 0; i < n; ++i) {
      double m1 = 0.0, m2 = 0.0, m3 = 0.0;
      for (int r = 0; r < n; ++r) {
        // group 1 factor: alpha_{pri} + alpha_{ipr} - alpha_{rip}
        m1 += tr[r] * (a(p, r, i) + a(i, p, r) - a(r, i, p));
      }
      for (int j = 0; j < n; ++j) {
        for (int r = 0; r < n; ++r) {
          // group 2: (alpha_{rji} + alpha_{irj} - alpha_{jir}) * alpha_{pjr}
          m2 += (a(r, j, i) + a(i, r, j) - a(j, i, r)) * a(p, j, r);
          // group 3: (alpha_{jri} + alpha_{ijr} - alpha_{rij}) *
          //          (alpha_{pjr} + alpha_{rpj} - alpha_{jrp})
          m3 += (a(j, r, i) + a(i, j, r) - a(r, i, j)) * (a(p, j, r) + a(r, p, j) - a(j, r, p));
        }
      }
      s.m1[p * n + i] = m1;
      s.m2[p * n + i] = m2;
      s.m3[p * n + i] = m3;
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < n; ++t) {
      double vt2 = 0.0, m5 = 0.0, m6 = 0.0;
      for (int r = 0; r < n; ++r) {
        // group 4 factor: alpha_{irt} + alpha_{tir} - alpha_{rti}
        vt2 += tr[r] * (a(i, r, t) + a(t, i, r) - a(r, t, i));
      }
      for (int j = 0; j < n; ++j) {
        for (int r = 0; r < n; ++r) {
          // group 5: alpha_{ijr} * (alpha_{rjt} + alpha_{trj} - alpha_{jtr})
          m5 += a(i, j, r) * (a(r, j, t) + a(t, r, j) - a(j, t, r));
          // group 6: (alpha_{ijr} + alpha_{rij} - alpha_{jri}) *
          //          (alpha_{jrt} + alpha_{tjr} - alpha_{rtj})
          m6 += (a(i, j, r) + a(r, i, j) - a(j, r, i)) * (a(j, r, t) + a(t, j, r) - a(r, t, j));
        }
      }
      s.vt2[i * n + t] = vt2;
      s.m5[i * n + t] = m5;
      s.m6[i * n + t] = m6;
    }
  }
  return s;
}

}  // namespace

SolitonResidual soliton_residual(const StructureConstants& a, double c) {
  const int n = a.dim();
  const Scratch s = stage_groups(a);

  SolitonResidual out;
  out.dim = n;
  out.tensor.assign(static_cast<size_t>(n) * n * n, 0.0);
  double sq = 0.0;
  for (int t = 0; t < n; ++t) {
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
          acc += 2.0 * (a(i, q, t) * s.m1[p * n + i] - a(i, p, t) * s.m1[q * n + i]);
          acc += 2.0 * (a(i, p, t) * s.m2[q * n + i] - a(i, q, t) * s.m2[p * n + i]);
          acc += a(i, p, t) * s.m3[q * n + i] - a(i, q, t) * s.m3[p * n + i];
          acc += a(p, q, i) * (-2.0 * s.vt2[i * n + t] + 2.0 * s.m5[i * n + t] + s.m6[i * n + t]);
        }
        const double val = c * a(q, p, t) + 0.25 * acc;
        out.tensor[(t * n + p) * n + q] = val;
        sq += val * val;
      }
    }
  }
  out.norm = std::sqrt(sq);
  return out;
}

Eigen::MatrixXd soliton_derivation(const StructureConstants& a, double c) {
  const int n = a.dim();
  std::vector<double> tr(n, 0.0);
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < n; ++j) tr[r] += a(r, j, j);
  }
  Eigen::MatrixXd D(n, n);
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) {
      double acc = 0.0;
      for (int r = 0; r < n; ++r) {
        acc += 2.0 * tr[r] * (a(i, r, l) + a(l, i, r) - a(r, l, i));
      }
      for (int j = 0; j < n; ++j) {
        for (int r = 0; r < n; ++r) {
          acc += -2.0 * a(i, j, r) * (a(r, j, l) + a(l, r, j) - a(j, l, r));
          acc += -(a(i, j, r) + a(r, i, j) - a(j, r, i)) * (a(j, r, l) + a(l, j, r) - a(r, l, j));
        }
      }
      D(l, i) = 0.25 * acc - (l == i ? c : 0.0);
    }
  }
  return D;
}

std::vector<double> derivation_defect_tensor(const StructureConstants& a, const Eigen::MatrixXd& D) {
  const int n = a.dim();
  std::vector<double> out(static_cast<size_t>(n) * n * n, 0.0);
  for (int t = 0; t < n; ++t) {
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
          acc += a(p, q, i) * D(t, i) - D(i, p) * a(i, q, t) - D(i, q) * a(p, i, t);
        }
        out[(t * n + p) * n + q] = acc;
      }
    }
  }
  return out;
}

BestC best_c(const StructureConstants& sc, double jacobi_tol) {
  const RicciData ric = ricci_tensor(sc, jacobi_tol);
  const int n = sc.dim();

  // defect(Ric - c*Id) = defect(Ric) + c*A with A[t][p][q] = alpha_{pqt}
  const std::vector<double> d0 = derivation_defect_tensor(sc, ric.operator_);
  double num = 0.0, den = 0.0;
  for (int t = 0; t < n; ++t) {
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        const double apqt = sc(p, q, t);
        num += d0[(t * n + p) * n + q] * apqt;
        den += apqt * apqt;
      }
    }
  }
  BestC out;
  out.c = (den > 0.0) ? -num / den : 0.0;
  Eigen::MatrixXd D = ric.operator_ - out.c * Eigen::MatrixXd::Identity(n, n);
  out.defect = derivation_defect(sc, D);
  return out;
}

SolitonCertificate detect_soliton(const StructureConstants& sc, double tol) {
  const RicciData ric = ricci_tensor(sc, tol);
  const BestC bc = best_c(sc, tol);
  const int n = sc.dim();

  SolitonCertificate cert;
  cert.c = bc.c;
  cert.derivation = ric.operator_ - bc.c * Eigen::MatrixXd::Identity(n, n);
  cert.derivation_defect = bc.defect;
  cert.soliton_residual_norm = soliton_residual(sc, bc.c).norm;

  const bool by_defect = cert.derivation_defect <= tol;
  const bool by_soliton_eq = cert.soliton_residual_norm <= tol;
  if (by_defect != by_soliton_eq) {
    throw OracleDisagreementError("soliton criteria disagree: derivation defect " +
                                  std::to_string(cert.derivation_defect) + " vs residual " +
                                  std::to_string(cert.soliton_residual_norm) + " at tol " + std::to_string(tol));
  }
  cert.is_soliton = by_defect;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ric.operator_);
  cert.ricci_eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);

  if (cert.c < -tol) {
    cert.soliton_type = SolitonType::expanding;
  } else if (cert.c > tol) {
    cert.soliton_type = SolitonType::shrinking;
  } else {
    cert.soliton_type = SolitonType::steady;
  }
  return cert;
}

}  // namespace nilsol
