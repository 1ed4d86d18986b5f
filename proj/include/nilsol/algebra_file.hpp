#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilsol/soliton.hpp"
#include "nilsol/structure_constants.hpp"

namespace nilsol {

/// Serialized algebra: a JSON document with "dim", a "brackets" array of
/// {i, j, k, value} records (1-based, i < j) and an optional "name".
struct AlgebraFile {
  int dim = 0;
  std::vector<BracketEntry> brackets;
  std::string name;

  static AlgebraFile load(const std::string& path);  // throws ParseError
  static AlgebraFile parse(const std::string& text, const std::string& origin = "<input>");

  StructureConstants to_constants() const;
  std::string to_json(int indent = 2) const;
};

/// Everything the check command reports about one algebra.
struct CertificateOutput {
  AlgebraFile input;
  SolitonCertificate certificate;
  double jacobi_defect = 0.0;
  std::optional<int> nilpotency_class;  // empty when the algebra is not nilpotent
  int center_dim = 0;
  double scalar_curvature = 0.0;
  std::string tool_version;

  std::string to_json(int indent = 2) const;
  std::string to_text() const;  // human-readable, 6 significant digits
};

/// Runs the full validation + soliton detection pipeline on a parsed file.
CertificateOutput check_algebra(const AlgebraFile& file, double tol);

}  // namespace nilsol
