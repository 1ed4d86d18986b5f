// Acceptance suite: runs every classification-level criterion at its stated
// tolerance and prints one pass/fail line per criterion.  Exit code is the
// number of failed criteria.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "nilsol/algebra_analysis.hpp"
#include "nilsol/curvature.hpp"
#include "nilsol/soliton.hpp"
#include "nilsol/solve.hpp"
#include "nilsol/table.hpp"
#include "test_util.hpp"

using namespace nilsol;
using namespace nilsol::testing;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail) {
  std::printf("%s criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion, what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// ---- criterion 1: full table reproduction with the default budget ----
TableReport criterion_table() {
  SolveOptions opts;  // defaults: 64 starts, seed 0, residual_tol 1e-10
  const TableReport table = reproduce_table(opts, 1e-8);
  int passed = 0;
  std::string bad;
  for (const TableRow& row : table.rows) {
    if (row.pass) {
      ++passed;
    } else {
      bad += " " + to_string(row.id);
    }
  }
  report(1, "classification table reproduced 10/10", table.all_pass,
         std::to_string(passed) + "/10 rows" + (bad.empty() ? "" : "; failing:" + bad));
  return table;
}

// ---- criterion 2: spot values at gauge 1 ----
void criterion_spot_values(const TableReport& table) {
  const double tol = 1e-8;
  double worst = 0.0;
  auto row_of = [&](FamilyId id) -> const TableRow& {
    for (const TableRow& row : table.rows) {
      if (row.id == id) return row;
    }
    throw Error("missing row");
  };
  auto track = [&](double got, double want) { worst = std::max(worst, std::abs(got - want)); };

  const TableRow& r21 = row_of(FamilyId::f2_1);
  track(r21.c_found, -2.0);
  const std::array<double, 5> d21 = {1.5, 1.5, 1.5, 1.5, 3.0};
  for (size_t i = 0; i < 5; ++i) track(r21.d_found[i], d21[i]);

  const TableRow& r24 = row_of(FamilyId::f2_4);
  track(r24.c_found, -2.0);
  track(r24.canonical_theta.at("v"), 2.0 / std::sqrt(3.0));

  const TableRow& r26 = row_of(FamilyId::f2_6);
  track(r26.c_found, -2.75);
  track(std::abs(r26.canonical_theta.at("m")), std::sqrt(1.5));
  track(std::abs(r26.canonical_theta.at("v")), std::sqrt(1.5));
  track(std::abs(r26.canonical_theta.at("y")), 1.0);

  const TableRow& r28 = row_of(FamilyId::f2_8);
  track(r28.c_found, -1.75);
  track(r28.canonical_theta.at("w"), std::sqrt(2.0) / 2.0);

  const TableRow& r210 = row_of(FamilyId::f2_10);
  track(r210.c_found, -1.5);
  track(r210.canonical_theta.at("v"), std::sqrt(3.0) / 2.0);

  report(2, "spot values for 2.1/2.4/2.6/2.8/2.10 at gauge 1", worst <= tol, "max abs error " + fmt(worst));
}

// ---- criterion 3: dual-oracle Ricci on 1000 in-domain draws ----
void criterion_dual_ricci() {
  std::mt19937_64 rng = start_rng(1001, 0);
  const auto ids = all_family_ids();
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const FamilyEntry& fam = family(ids[static_cast<size_t>(trial) % ids.size()]);
    const StructureConstants sc = fam.build(fam.sample(rng));
    const Eigen::MatrixXd a = ricci_tensor(sc).operator_;
    const Eigen::MatrixXd b = ricci_nilpotent_oracle(sc).operator_;
    worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
  }
  report(3, "Koszul Ricci vs nilpotent quadratic formula, 1000 draws", worst <= 1e-12,
         "max abs difference " + fmt(worst));
}

// ---- criterion 4: derivation formula identity on 1000 (alpha, c) pairs ----
void criterion_derivation_identity() {
  std::mt19937_64 rng = start_rng(1002, 0);
  const auto ids = all_family_ids();
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const FamilyEntry& fam = family(ids[static_cast<size_t>(trial) % ids.size()]);
    const StructureConstants sc = fam.build(fam.sample(rng));
    const double c = uniform(rng, -4.0, 2.0);
    const Eigen::MatrixXd lhs = soliton_derivation(sc, c);
    const Eigen::MatrixXd rhs = ricci_tensor(sc).operator_ - c * Eigen::MatrixXd::Identity(5, 5);
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  report(4, "derivation formula equals Ric - c*Id, 1000 pairs", worst <= 1e-10, "max abs difference " + fmt(worst));
}

// ---- criterion 5: criterion equivalence, zero disagreements ----
void criterion_equivalence() {
  std::mt19937_64 rng = start_rng(1003, 0);
  const auto ids = all_family_ids();
  int mismatches = 0;
  int disagreements = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const FamilyEntry& fam = family(ids[static_cast<size_t>(trial) % ids.size()]);
    const StructureConstants sc = fam.build(fam.sample(rng));
    const BestC bc = best_c(sc);
    const double soliton_eq = soliton_residual(sc, bc.c).norm;
    if ((soliton_eq <= 1e-9) != (bc.defect <= 1e-9)) ++mismatches;
    try {
      detect_soliton(sc);
    } catch (const OracleDisagreementError&) {
      ++disagreements;
    }
  }
  report(5, "residual and derivation-defect verdicts agree, 1000 trials", mismatches == 0 && disagreements == 0,
         std::to_string(mismatches) + " verdict mismatches, " + std::to_string(disagreements) + " disagreements");
}

// ---- criterion 6: derivation property of the seven soliton certificates ----
void criterion_derivation_property() {
  double worst_defect = 0.0;
  double worst_diag = 0.0;
  for (FamilyId id : soliton_family_ids()) {
    const StructureConstants sc = soliton_instance(id);
    const SolitonCertificate cert = detect_soliton(sc);
    worst_defect = std::max(worst_defect, derivation_defect(sc, cert.derivation));
    for (const BracketEntry& e : sc.nonzero_entries()) {
      const double lhs = cert.derivation(e.i - 1, e.i - 1) + cert.derivation(e.j - 1, e.j - 1);
      const double rhs = cert.derivation(e.k - 1, e.k - 1);
      worst_diag = std::max(worst_diag, std::abs(lhs - rhs));
    }
  }
  report(6, "certified D is a derivation and d_i + d_j = d_k on brackets",
         worst_defect <= 1e-10 && worst_diag <= 1e-10,
         "max defect " + fmt(worst_defect) + ", max diag violation " + fmt(worst_diag));
}

// ---- criterion 7: structural audit ----
void criterion_structural_audit() {
  const std::map<FamilyId, int> expected_class = {
      {FamilyId::f2_1, 2}, {FamilyId::f2_2, 2}, {FamilyId::f2_3, 2}, {FamilyId::f2_4, 4},
      {FamilyId::f2_5, 4}, {FamilyId::f2_6, 4}, {FamilyId::f2_7, 4}, {FamilyId::f2_8, 3},
      {FamilyId::f2_9, 3}, {FamilyId::f2_10, 3}};
  const std::map<FamilyId, int> expected_center = {
      {FamilyId::f2_1, 1}, {FamilyId::f2_2, 2}, {FamilyId::f2_3, 3}};
  std::mt19937_64 rng = start_rng(1004, 0);
  int bad = 0;
  for (const auto& [id, cls] : expected_class) {
    const FamilyEntry& fam = family(id);
    for (int trial = 0; trial < 20; ++trial) {
      if (lower_central_series(fam.build(fam.sample(rng))).nilpotency_class != cls) ++bad;
    }
  }
  for (const auto& [id, dim] : expected_center) {
    const FamilyEntry& fam = family(id);
    for (int trial = 0; trial < 20; ++trial) {
      if (center(fam.build(fam.sample(rng))).dimension != dim) ++bad;
    }
  }
  report(7, "nilpotency classes 2/2/2/4/4/4/4/3/3/3 and centers 1/2/3", bad == 0,
         std::to_string(bad) + " structural mismatches");
}

// ---- criterion 8: scaling covariance ----
void criterion_scaling() {
  double worst = 0.0;
  bool verdicts_ok = true;
  for (FamilyId id : soliton_family_ids()) {
    const StructureConstants sc = soliton_instance(id);
    const SolitonCertificate base = detect_soliton(sc);
    for (double lambda : {0.5, 2.0, 3.0}) {
      const SolitonCertificate scaled = detect_soliton(sc.scaled(lambda));
      verdicts_ok = verdicts_ok && scaled.is_soliton == base.is_soliton;
      const double l2 = lambda * lambda;
      worst = std::max(worst, std::abs(scaled.c - l2 * base.c) / std::abs(l2 * base.c));
      worst = std::max(worst, (scaled.derivation - l2 * base.derivation).cwiseAbs().maxCoeff() /
                                  (l2 * base.derivation.cwiseAbs().maxCoeff()));
    }
  }
  report(8, "certificates scale as c' = l^2 c, D' = l^2 D for l in {1/2,2,3}", worst <= 1e-8 && verdicts_ok,
         "max relative error " + fmt(worst));
}

// ---- criterion 9: sign/type and trace identity ----
void criterion_sign_type() {
  bool ok = true;
  double worst_trace = 0.0;
  for (FamilyId id : soliton_family_ids()) {
    const StructureConstants sc = soliton_instance(id);
    const SolitonCertificate cert = detect_soliton(sc);
    ok = ok && cert.is_soliton && cert.c < 0.0 && cert.soliton_type == SolitonType::expanding;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cert.derivation);
    ok = ok && es.eigenvalues().minCoeff() > 0.0;
    worst_trace = std::max(
        worst_trace, std::abs(ricci_tensor(sc).scalar - (5.0 * cert.c + cert.derivation.trace())));
  }
  report(9, "every soliton is expanding with positive D; trace identity", ok && worst_trace <= 1e-10,
         "max trace error " + fmt(worst_trace));
}

// ---- criterion 10: byte-identical machine output across reruns ----
std::string capture(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return "<spawn failure>";
  std::string out;
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

void criterion_determinism() {
  const std::string cli = NILSOL_CLI_PATH;
  const std::string solve_cmd = cli + " solve 2.6 --seed 11 --multistarts 32 --format json";
  const std::string table_cmd = cli + " table --seed 5 --multistarts 48 --format json";
  const std::string solve_a = capture(solve_cmd);
  const std::string solve_b = capture(solve_cmd);
  const std::string table_a = capture(table_cmd);
  const std::string table_b = capture(table_cmd);
  const bool ok = !solve_a.empty() && solve_a == solve_b && !table_a.empty() && table_a == table_b;
  report(10, "solve/table machine output is byte-identical across reruns", ok,
         "solve " + std::to_string(solve_a.size()) + " bytes, table " + std::to_string(table_a.size()) + " bytes");
}

}  // namespace

int main() {
  std::printf("acceptance suite (n = 5 catalog, default solver budget)\n");
  const TableReport table = criterion_table();
  criterion_spot_values(table);
  criterion_dual_ricci();
  criterion_derivation_identity();
  criterion_equivalence();
  criterion_derivation_property();
  criterion_structural_audit();
  criterion_scaling();
  criterion_sign_type();
  criterion_determinism();
  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures;
}
