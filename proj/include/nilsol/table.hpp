#pragma once

#include <array>
#include <string>
#include <vector>

#include "nilsol/solve.hpp"

namespace nilsol {

/// Comparison of one family's solve against its expected classification row.
struct TableRow {
  FamilyId id;
  std::string name;
  bool expected_soliton = false;
  bool found_soliton = false;  // an interior cluster reached residual_tol
  bool pass = false;
  std::string condition;     // expected parameter relations
  std::string lauret_class;  // metadata label (empty if none)
  double best_residual = 0.0;
  int interior_count = 0;
  int cluster_count = 0;
  bool no_convergence = false;

  // populated for expected-soliton rows that were found:
  ParamMap canonical_theta;
  double c_found = 0.0;
  double c_expected = 0.0;
  std::array<double, 5> d_found{};
  std::array<double, 5> d_expected{};
  double max_abs_error = 0.0;  // over theta, c and diag(D) comparisons
  std::string note;
};

struct TableReport {
  std::vector<TableRow> rows;
  bool all_pass = false;
};

/// Solves every catalog family and compares against the expected
/// classification under the gauge normalization: the canonical-sign
/// representative's parameters, c, and diag(D) must match the expected row at
/// the gauge point to compare_tol; no-soliton rows pass iff no interior
/// cluster reaches residual_tol.  Failures are reported, never thrown.
TableReport reproduce_table(const SolveOptions& opts, double compare_tol = 1e-8);

/// Single-family variant used by the solve command's comparison mode.
TableRow compare_family(FamilyId id, const SolveReport& report, double compare_tol = 1e-8);

}  // namespace nilsol
