#include "nilsol/algebra_file.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nilsol/algebra_analysis.hpp"
#include "nilsol/curvature.hpp"
#include "nilsol/version.hpp"

namespace nilsol {

using nlohmann::json;

namespace {

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

AlgebraFile AlgebraFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path + ": cannot open file");
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

AlgebraFile AlgebraFile::parse(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError(origin + ": top level must be an object");
  }
  AlgebraFile file;
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw ParseError(origin + ": missing integer field 'dim'");
  }
  file.dim = doc["dim"].get<int>();
  if (file.dim < 1) {
    throw ParseError(origin + ": 'dim' must be >= 1, got " + std::to_string(file.dim));
  }
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError(origin + ": 'name' must be a string");
    file.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("brackets") || !doc["brackets"].is_array()) {
    throw ParseError(origin + ": missing array field 'brackets'");
  }
  std::set<std::tuple<int, int, int>> seen;
  int idx = 0;
  for (const json& rec : doc["brackets"]) {
    const std::string where = origin + ": brackets[" + std::to_string(idx) + "]";
    if (!rec.is_object()) throw ParseError(where + ": must be an object");
    for (const char* key : {"i", "j", "k"}) {
      if (!rec.contains(key) || !rec[key].is_number_integer()) {
        throw ParseError(where + ": missing integer field '" + key + "'");
      }
    }
    if (!rec.contains("value") || !rec["value"].is_number()) {
      throw ParseError(where + ": missing numeric field 'value'");
    }
    BracketEntry e{rec["i"].get<int>(), rec["j"].get<int>(), rec["k"].get<int>(), rec["value"].get<double>()};
    if (e.i < 1 || e.j < 1 || e.k < 1 || e.i > file.dim || e.j > file.dim || e.k > file.dim) {
      throw ParseError(where + ": indices out of range for dim " + std::to_string(file.dim));
    }
    if (e.i >= e.j) {
      throw ParseError(where + ": need i < j (only upper-triangular pairs; the antisymmetric partner is implied)");
    }
    if (!seen.insert({e.i, e.j, e.k}).second) {
      throw ParseError(where + ": duplicate (i,j,k) triple");
    }
    file.brackets.push_back(e);
    ++idx;
  }
  return file;
}

StructureConstants AlgebraFile::to_constants() const {
  return StructureConstants::from_brackets(dim, brackets);
}

namespace {

json brackets_to_json(const std::vector<BracketEntry>& brackets) {
  json arr = json::array();
  for (const BracketEntry& e : brackets) {
    arr.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"value", e.value}});
  }
  return arr;
}

json algebra_to_json(const AlgebraFile& file) {
  json doc;
  if (!file.name.empty()) doc["name"] = file.name;
  doc["dim"] = file.dim;
  doc["brackets"] = brackets_to_json(file.brackets);
  return doc;
}

}  // namespace

std::string AlgebraFile::to_json(int indent) const {
  return algebra_to_json(*this).dump(indent);
}

CertificateOutput check_algebra(const AlgebraFile& file, double tol) {
  const StructureConstants sc = file.to_constants();

  CertificateOutput out;
  out.input = file;
  out.tool_version = std::string(kToolName) + " " + kVersion;
  out.jacobi_defect = jacobi_defect(sc);
  if (out.jacobi_defect > tol) {
    throw NotALieAlgebraError("Jacobi identity fails: defect " + std::to_string(out.jacobi_defect) +
                              " exceeds tolerance " + std::to_string(tol));
  }
  try {
    out.nilpotency_class = lower_central_series(sc).nilpotency_class;
  } catch (const NotNilpotentError&) {
    out.nilpotency_class = std::nullopt;
  }
  out.center_dim = center(sc).dimension;
  out.certificate = detect_soliton(sc, tol);
  out.scalar_curvature = ricci_tensor(sc).scalar;
  return out;
}

std::string CertificateOutput::to_json(int indent) const {
  json doc;
  doc["tool_version"] = tool_version;
  doc["input"] = algebra_to_json(input);
  doc["jacobi_defect"] = jacobi_defect;
  if (nilpotency_class) {
    doc["nilpotency_class"] = *nilpotency_class;
  } else {
    doc["nilpotency_class"] = nullptr;
  }
  doc["center_dim"] = center_dim;
  doc["scalar_curvature"] = scalar_curvature;
  doc["is_soliton"] = certificate.is_soliton;
  doc["soliton_type"] = to_string(certificate.soliton_type);
  doc["c"] = certificate.c;
  json rows = json::array();
  for (int i = 0; i < certificate.derivation.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < certificate.derivation.cols(); ++j) row.push_back(certificate.derivation(i, j));
    rows.push_back(row);
  }
  doc["derivation"] = rows;
  doc["soliton_residual_norm"] = certificate.soliton_residual_norm;
  doc["derivation_defect"] = certificate.derivation_defect;
  doc["ricci_eigenvalues"] = certificate.ricci_eigenvalues;
  return doc.dump(indent);
}

std::string CertificateOutput::to_text() const {
  std::ostringstream os;
  if (!input.name.empty()) os << "algebra:            " << input.name << "\n";
  os << "dimension:          " << input.dim << "\n";
  os << "jacobi defect:      " << fmt6(jacobi_defect) << "\n";
  os << "nilpotency class:   ";
  if (nilpotency_class) {
    os << *nilpotency_class << "\n";
  } else {
    os << "not nilpotent\n";
  }
  os << "center dimension:   " << center_dim << "\n";
  os << "scalar curvature:   " << fmt6(scalar_curvature) << "\n";
  os << "soliton:            " << (certificate.is_soliton ? "yes" : "no") << "\n";
  if (certificate.is_soliton) {
    os << "type:               " << to_string(certificate.soliton_type) << "\n";
  }
  os << "c:                  " << fmt6(certificate.c) << "\n";
  os << "soliton residual:   " << fmt6(certificate.soliton_residual_norm) << "\n";
  os << "derivation defect:  " << fmt6(certificate.derivation_defect) << "\n";
  os << "ricci eigenvalues: ";
  for (double ev : certificate.ricci_eigenvalues) os << " " << fmt6(ev);
  os << "\n";
  os << "derivation D = Ric - c*Id:\n";
  for (int i = 0; i < certificate.derivation.rows(); ++i) {
    os << "   ";
    for (int j = 0; j < certificate.derivation.cols(); ++j) {
      os << " " << fmt6(certificate.derivation(i, j));
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace nilsol
