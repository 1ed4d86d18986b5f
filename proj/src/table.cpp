#include "nilsol/table.hpp"

#include <algorithm>
#include <cmath>

#include "nilsol/curvature.hpp"

namespace nilsol {

TableRow compare_family(FamilyId id, const SolveReport& report, double compare_tol) {
  const FamilyEntry& fam = family(id);
  const ExpectedResult& exp = expected(id);

  TableRow row;
  row.id = id;
  row.name = fam.name;
  row.expected_soliton = exp.admits_soliton;
  row.condition = exp.condition;
  row.lauret_class = exp.lauret_class;
  row.cluster_count = static_cast<int>(report.clusters.size());
  row.no_convergence = report.no_convergence;
  row.best_residual = report.best_residual;

  std::vector<const FamilySolution*> interior;
  for (const FamilySolution& sol : report.clusters) {
    if (sol.interior && sol.residual <= report.options.residual_tol) interior.push_back(&sol);
  }
  row.interior_count = static_cast<int>(interior.size());
  row.found_soliton = !interior.empty();

  if (!exp.admits_soliton) {
    row.pass = interior.empty();
    row.note = row.pass ? "no interior solution found (numerical evidence)"
                        : "unexpected interior solution";
    return row;
  }

  if (interior.empty()) {
    row.pass = false;
    row.note = report.no_convergence ? "no convergence" : "soliton not found";
    return row;
  }

  // canonical representative: maximal number of positive parameters, then
  // lexicographically largest, then best residual
  auto key = [&](const FamilySolution* s) {
    int npos = 0;
    std::vector<double> lex;
    for (const std::string& p : fam.param_names) {
      if (s->canonical.at(p) > 1e-12) ++npos;
      lex.push_back(s->canonical.at(p));
    }
    return std::tuple<int, std::vector<double>, double>(npos, lex, -s->residual);
  };
  const FamilySolution* rep =
      *std::max_element(interior.begin(), interior.end(),
                        [&](const FamilySolution* a, const FamilySolution* b) { return key(a) < key(b); });

  row.canonical_theta = rep->canonical;
  row.c_found = rep->c;
  row.c_expected = exp.c_of(1.0);
  row.d_expected = exp.derivation_diag_of(1.0);

  const RicciData ric = ricci_tensor(fam.build(rep->canonical));
  for (int i = 0; i < 5; ++i) row.d_found[static_cast<size_t>(i)] = ric.operator_(i, i) - rep->c;

  double err = std::abs(row.c_found - row.c_expected);
  for (const auto& [p, v] : exp.solution_at_gauge1) {
    err = std::max(err, std::abs(rep->canonical.at(p) - v));
  }
  for (size_t i = 0; i < 5; ++i) {
    err = std::max(err, std::abs(row.d_found[i] - row.d_expected[i]));
  }
  row.max_abs_error = err;
  row.pass = err <= compare_tol;
  row.note = row.pass ? "matches expected solution" : "solution differs from expected";
  return row;
}

TableReport reproduce_table(const SolveOptions& opts, double compare_tol) {
  TableReport report;
  report.all_pass = true;
  for (FamilyId id : all_family_ids()) {
    const SolveReport solved = solve_family(family(id), opts);
    TableRow row = compare_family(id, solved, compare_tol);
    report.all_pass = report.all_pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace nilsol
