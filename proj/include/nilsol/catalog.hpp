#pragma once

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "nilsol/structure_constants.hpp"

namespace nilsol {

/// The ten five-dimensional nilpotent families.
enum class FamilyId { f2_1, f2_2, f2_3, f2_4, f2_5, f2_6, f2_7, f2_8, f2_9, f2_10 };

std::vector<FamilyId> all_family_ids();
std::string to_string(FamilyId id);                 // "2.1" ... "2.10"
FamilyId parse_family_id(const std::string& text);  // throws UnknownFamilyError

using ParamMap = std::map<std::string, double>;

/// One non-vanishing template bracket [E_i,E_j] = param * E_k (1-based).
struct TemplateBracket {
  int i;
  int j;
  int k;
  std::string param;
};

enum class ConstraintKind {
  positive,       // p > 0
  nonnegative,    // p >= 0
  nonzero,        // p != 0
  zero,           // p == 0
  equals_param,   // p == other
  at_least_param, // p >= other
  exceeds_param,  // p > other
};

struct DomainConstraint {
  ConstraintKind kind;
  std::string param;
  std::string other;  // used by the *_param kinds
};

/// A parametrized family: bracket template, parameter domain, gauge choice.
struct FamilyEntry {
  FamilyId id;
  std::string name;
  std::vector<std::string> param_names;  // classification order
  std::vector<TemplateBracket> brackets;
  std::vector<DomainConstraint> domain;
  std::string default_gauge;

  /// Structure constants at a parameter point.
  StructureConstants build(const ParamMap& theta) const;

  /// Domain membership.  Strict constraints (>, !=) need margin eps;
  /// non-strict ones (>=, ==) tolerate |violation| <= slack.
  bool in_domain(const ParamMap& theta, double eps, double slack = 1e-8) const;

  /// Random in-domain parameter point (generic: strict values bounded away
  /// from the boundary).  Used by property tests and the acceptance audits.
  ParamMap sample(std::mt19937_64& rng) const;

  /// True when the domain forces theta[p] >= 0 (directly or through a
  /// p >= q / p > q chain); such parameters are start-sampled as |u|.
  bool requires_nonnegative(const std::string& param) const;

  /// Parameters fixed to zero by the domain.
  std::vector<std::string> zero_pinned() const;
  /// Parameters tied to another one by an equality (p -> q with p == q).
  std::map<std::string, std::string> tied() const;

  /// Sign maps induced by the basis flips E_i -> -E_i that preserve the
  /// template, the given gauge parameter and all tied pairs.  Each map sends
  /// a parameter to +-1.
  std::vector<std::map<std::string, int>> sign_maps(const std::string& gauge) const;

  /// Representative of theta's sign orbit with the maximal number of positive
  /// parameters (ties broken lexicographically in param_names order).  Basis
  /// sign flips are isometries, so this does not change the metric.
  ParamMap canonical_signs(const ParamMap& theta, const std::string& gauge) const;
};

/// Expected classification outcome for one family (Table 1 row).
struct ExpectedResult {
  FamilyId id;
  bool admits_soliton = false;
  std::string condition;        // parameter relations, e.g. "s = m"
  ParamMap solution_at_gauge1;  // the known solution point with gauge = 1
  double c_unit = 0.0;          // c = c_unit * g^2 for gauge value g
  std::array<double, 5> derivation_diag_unit{};  // D = diag * g^2
  std::string lauret_class;     // opaque metadata label, empty if none

  double c_of(double gauge_value) const { return c_unit * gauge_value * gauge_value; }
  std::array<double, 5> derivation_diag_of(double gauge_value) const;
};

/// Family data exactly as printed in the source classification (with the two
/// typo corrections noted in the project notes).
const FamilyEntry& family(FamilyId id);

/// Expected Table-1 outcome for the family.
const ExpectedResult& expected(FamilyId id);

}  // namespace nilsol
