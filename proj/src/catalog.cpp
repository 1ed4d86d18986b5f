#include "nilsol/catalog.hpp"

#include <algorithm>
#include <cmath>

#include "nilsol/random.hpp"

namespace nilsol {

std::vector<FamilyId> all_family_ids() {
  return {FamilyId::f2_1, FamilyId::f2_2, FamilyId::f2_3, FamilyId::f2_4, FamilyId::f2_5,
          FamilyId::f2_6, FamilyId::f2_7, FamilyId::f2_8, FamilyId::f2_9, FamilyId::f2_10};
}

std::string to_string(FamilyId id) {
  switch (id) {
    case FamilyId::f2_1: return "2.1";
    case FamilyId::f2_2: return "2.2";
    case FamilyId::f2_3: return "2.3";
    case FamilyId::f2_4: return "2.4";
    case FamilyId::f2_5: return "2.5";
    case FamilyId::f2_6: return "2.6";
    case FamilyId::f2_7: return "2.7";
    case FamilyId::f2_8: return "2.8";
    case FamilyId::f2_9: return "2.9";
    case FamilyId::f2_10: return "2.10";
  }
  return "?";
}

FamilyId parse_family_id(const std::string& text) {
  for (FamilyId id : all_family_ids()) {
    if (to_string(id) == text) return id;
  }
  throw UnknownFamilyError("unknown family '" + text + "' (expected 2.1 ... 2.10)");
}

namespace {

using CK = ConstraintKind;

// bracket templates shared by A/B case pairs
const std::vector<TemplateBracket> kL57 = {
    {1, 2, 3, "m"}, {1, 2, 4, "s"}, {1, 2, 5, "u"}, {1, 3, 4, "v"}, {1, 3, 5, "w"}, {1, 4, 5, "x"}};
const std::vector<TemplateBracket> kL56 = {
    {1, 2, 3, "m"}, {1, 2, 4, "s"}, {1, 2, 5, "u"}, {1, 3, 4, "v"},
    {1, 3, 5, "w"}, {1, 4, 5, "x"}, {2, 3, 5, "y"}};
const std::vector<TemplateBracket> kL55 = {
    {1, 2, 4, "m"}, {1, 2, 5, "s"}, {1, 3, 5, "u"}, {1, 4, 5, "v"}, {2, 3, 5, "w"}};
const std::vector<TemplateBracket> kL59 = {
    {1, 2, 3, "m"}, {1, 2, 4, "s"}, {1, 2, 5, "u"}, {1, 3, 4, "v"}, {2, 3, 5, "w"}};

std::vector<FamilyEntry> make_families() {
  std::vector<FamilyEntry> f;
  f.push_back({FamilyId::f2_1,
               "two-step, one-dimensional center",
               {"s", "m"},
               {{1, 2, 5, "s"}, {3, 4, 5, "m"}},
               {{CK::at_least_param, "s", "m"}, {CK::positive, "m", ""}},
               "m"});
  f.push_back({FamilyId::f2_2,
               "two-step, two-dimensional center",
               {"m", "s"},
               {{1, 2, 4, "m"}, {1, 3, 5, "s"}},
               {{CK::at_least_param, "m", "s"}, {CK::positive, "s", ""}},
               "m"});
  f.push_back({FamilyId::f2_3,
               "two-step, three-dimensional center",
               {"m"},
               {{1, 2, 3, "m"}},
               {{CK::positive, "m", ""}},
               "m"});
  f.push_back({FamilyId::f2_4,
               "l5,7 (case A)",
               {"m", "s", "u", "v", "w", "x"},
               kL57,
               {{CK::positive, "m", ""},
                {CK::positive, "v", ""},
                {CK::positive, "x", ""},
                {CK::zero, "s", ""},
                {CK::nonnegative, "w", ""}},
               "m"});
  f.push_back({FamilyId::f2_5,
               "l5,7 (case B)",
               {"m", "s", "u", "v", "w", "x"},
               kL57,
               {{CK::positive, "m", ""},
                {CK::positive, "v", ""},
                {CK::positive, "x", ""},
                {CK::nonnegative, "w", ""},
                {CK::positive, "s", ""}},
               "m"});
  f.push_back({FamilyId::f2_6,
               "l5,6 (case A)",
               {"m", "s", "u", "v", "w", "x", "y"},
               kL56,
               {{CK::nonzero, "m", ""},
                {CK::nonzero, "v", ""},
                {CK::nonzero, "x", ""},
                {CK::nonzero, "y", ""},
                {CK::zero, "s", ""},
                {CK::nonnegative, "w", ""}},
               "x"});
  f.push_back({FamilyId::f2_7,
               "l5,6 (case B)",
               {"m", "s", "u", "v", "w", "x", "y"},
               kL56,
               {{CK::nonzero, "m", ""},
                {CK::nonzero, "v", ""},
                {CK::nonzero, "x", ""},
                {CK::nonzero, "y", ""},
                {CK::positive, "s", ""},
                {CK::nonnegative, "w", ""}},
               "x"});
  f.push_back({FamilyId::f2_8,
               "l5,5",
               {"m", "s", "u", "v", "w"},
               kL55,
               {{CK::nonnegative, "s", ""},
                {CK::nonnegative, "u", ""},
                {CK::positive, "m", ""},
                {CK::positive, "v", ""},
                {CK::positive, "w", ""}},
               "m"});
  f.push_back({FamilyId::f2_9,
               "l5,9 (case A)",
               {"m", "s", "u", "v", "w"},
               kL59,
               {{CK::positive, "m", ""},
                {CK::exceeds_param, "w", "v"},
                {CK::positive, "v", ""},
                {CK::nonnegative, "s", ""},
                {CK::nonnegative, "u", ""}},
               "m"});
  f.push_back({FamilyId::f2_10,
               "l5,9 (case B)",
               {"m", "s", "u", "v", "w"},
               kL59,
               {{CK::positive, "m", ""},
                {CK::positive, "v", ""},
                {CK::equals_param, "w", "v"},
                {CK::zero, "u", ""},
                {CK::nonnegative, "s", ""}},
               "m"});
  return f;
}

std::vector<ExpectedResult> make_expected() {
  const double s3 = std::sqrt(3.0);
  const double s2 = std::sqrt(2.0);
  const double s32 = std::sqrt(1.5);
  std::vector<ExpectedResult> e;
  e.push_back({FamilyId::f2_1, true, "s = m",
               {{"s", 1.0}, {"m", 1.0}},
               -2.0, {1.5, 1.5, 1.5, 1.5, 3.0}, "mu_4'"});
  e.push_back({FamilyId::f2_2, true, "s = m",
               {{"m", 1.0}, {"s", 1.0}},
               -2.0, {1.0, 1.5, 1.5, 2.5, 2.5}, "mu_6'"});
  e.push_back({FamilyId::f2_3, true, "m > 0 (always)",
               {{"m", 1.0}},
               -1.5, {1.0, 1.0, 2.0, 1.5, 1.5}, "mu_7'"});
  e.push_back({FamilyId::f2_4, true, "x=m, u=w=s=0, v=(2/sqrt(3))m",
               {{"m", 1.0}, {"s", 0.0}, {"u", 0.0}, {"v", 2.0 / s3}, {"w", 0.0}, {"x", 1.0}},
               -2.0, {1.0 / 3.0, 1.5, 11.0 / 6.0, 13.0 / 6.0, 2.5}, "mu_1'"});
  e.push_back({FamilyId::f2_5, false, "no soliton", {}, 0.0, {}, ""});
  e.push_back({FamilyId::f2_6, true, "u=w=s=0, m=+-sqrt(3/2)x, y=+-x, v=+-sqrt(3/2)x",
               {{"m", s32}, {"s", 0.0}, {"u", 0.0}, {"v", s32}, {"w", 0.0}, {"x", 1.0}, {"y", 1.0}},
               -2.75, {0.75, 1.5, 2.25, 3.0, 3.75}, "mu_2'"});
  e.push_back({FamilyId::f2_7, false, "no soliton", {}, 0.0, {}, ""});
  e.push_back({FamilyId::f2_8, true, "s=u=0, v=m, w=(sqrt(2)/2)m",
               {{"m", 1.0}, {"s", 0.0}, {"u", 0.0}, {"v", 1.0}, {"w", s2 / 2.0}},
               -1.75, {0.75, 1.0, 1.5, 1.75, 2.5}, "mu_3'"});
  e.push_back({FamilyId::f2_9, false, "no soliton", {}, 0.0, {}, ""});
  e.push_back({FamilyId::f2_10, true, "s=0, v=w=(sqrt(3)/2)m",
               {{"m", 1.0}, {"s", 0.0}, {"u", 0.0}, {"v", s3 / 2.0}, {"w", s3 / 2.0}},
               -1.5, {0.625, 0.625, 1.25, 1.875, 1.875}, "mu_5'"});
  return e;
}

}  // namespace

const FamilyEntry& family(FamilyId id) {
  static const std::vector<FamilyEntry> families = make_families();
  for (const FamilyEntry& f : families) {
    if (f.id == id) return f;
  }
  throw UnknownFamilyError("unknown family id");
}

const ExpectedResult& expected(FamilyId id) {
  static const std::vector<ExpectedResult> rows = make_expected();
  for (const ExpectedResult& e : rows) {
    if (e.id == id) return e;
  }
  throw UnknownFamilyError("unknown family id");
}

std::array<double, 5> ExpectedResult::derivation_diag_of(double gauge_value) const {
  std::array<double, 5> d = derivation_diag_unit;
  for (double& v : d) v *= gauge_value * gauge_value;
  return d;
}

StructureConstants FamilyEntry::build(const ParamMap& theta) const {
  std::vector<BracketEntry> entries;
  entries.reserve(brackets.size());
  for (const TemplateBracket& b : brackets) {
    entries.push_back({b.i, b.j, b.k, theta.at(b.param)});
  }
  return StructureConstants::from_brackets(5, entries);
}

bool FamilyEntry::in_domain(const ParamMap& theta, double eps, double slack) const {
  for (const DomainConstraint& c : domain) {
    const double p = theta.at(c.param);
    switch (c.kind) {
      case CK::positive:
        if (!(p >= eps)) return false;
        break;
      case CK::nonnegative:
        if (!(p >= -slack)) return false;
        break;
      case CK::nonzero:
        if (!(std::abs(p) >= eps)) return false;
        break;
      case CK::zero:
        if (!(std::abs(p) <= slack)) return false;
        break;
      case CK::equals_param:
        if (!(std::abs(p - theta.at(c.other)) <= slack)) return false;
        break;
      case CK::at_least_param:
        if (!(p - theta.at(c.other) >= -slack)) return false;
        break;
      case CK::exceeds_param:
        if (!(p - theta.at(c.other) >= eps)) return false;
        break;
    }
  }
  return true;
}

ParamMap FamilyEntry::sample(std::mt19937_64& rng) const {
  ParamMap theta;
  // unconstrained parameters first
  for (const std::string& p : param_names) theta[p] = uniform(rng, -2.2, 2.2);
  for (const DomainConstraint& c : domain) {
    switch (c.kind) {
      case CK::positive: theta[c.param] = uniform(rng, 0.2, 2.2); break;
      case CK::nonnegative: theta[c.param] = uniform(rng, 0.0, 2.2); break;
      case CK::nonzero: theta[c.param] = (uniform01(rng) < 0.5 ? -1.0 : 1.0) * uniform(rng, 0.2, 2.2); break;
      case CK::zero: theta[c.param] = 0.0; break;
      default: break;
    }
  }
  // relational constraints after the endpoints exist
  for (const DomainConstraint& c : domain) {
    switch (c.kind) {
      case CK::equals_param: theta[c.param] = theta.at(c.other); break;
      case CK::at_least_param: theta[c.param] = theta.at(c.other) + uniform(rng, 0.0, 1.5); break;
      case CK::exceeds_param: theta[c.param] = theta.at(c.other) + uniform(rng, 0.2, 1.5); break;
      default: break;
    }
  }
  return theta;
}

bool FamilyEntry::requires_nonnegative(const std::string& param) const {
  for (const DomainConstraint& c : domain) {
    if (c.param != param) continue;
    if (c.kind == CK::positive || c.kind == CK::nonnegative) return true;
    if (c.kind == CK::at_least_param || c.kind == CK::exceeds_param) return requires_nonnegative(c.other);
  }
  return false;
}

std::vector<std::string> FamilyEntry::zero_pinned() const {
  std::vector<std::string> out;
  for (const DomainConstraint& c : domain) {
    if (c.kind == CK::zero) out.push_back(c.param);
  }
  return out;
}

std::map<std::string, std::string> FamilyEntry::tied() const {
  std::map<std::string, std::string> out;
  for (const DomainConstraint& c : domain) {
    if (c.kind == CK::equals_param) out[c.param] = c.other;
  }
  return out;
}

std::vector<std::map<std::string, int>> FamilyEntry::sign_maps(const std::string& gauge) const {
  std::vector<std::map<std::string, int>> maps;
  const auto ties = tied();
  for (int bits = 0; bits < 32; ++bits) {
    int eps[5];
    for (int b = 0; b < 5; ++b) eps[b] = ((bits >> b) & 1) ? -1 : 1;
    std::map<std::string, int> sig;
    for (const TemplateBracket& b : brackets) {
      sig[b.param] = eps[b.i - 1] * eps[b.j - 1] * eps[b.k - 1];
    }
    if (sig.at(gauge) != 1) continue;
    bool tie_ok = true;
    for (const auto& [p, q] : ties) {
      if (sig.at(p) != sig.at(q)) tie_ok = false;
    }
    if (!tie_ok) continue;
    if (std::find(maps.begin(), maps.end(), sig) == maps.end()) maps.push_back(sig);
  }
  return maps;
}

ParamMap FamilyEntry::canonical_signs(const ParamMap& theta, const std::string& gauge) const {
  ParamMap best = theta;
  auto key = [&](const ParamMap& th) {
    int npos = 0;
    std::vector<double> lex;
    for (const std::string& p : param_names) {
      if (th.at(p) > 1e-12) ++npos;
      lex.push_back(th.at(p));
    }
    return std::pair<int, std::vector<double>>(npos, lex);
  };
  auto best_key = key(best);
  for (const auto& sig : sign_maps(gauge)) {
    ParamMap cand = theta;
    for (auto& [p, v] : cand) v = v * sig.at(p) + 0.0;  // +0.0 normalizes -0
    auto cand_key = key(cand);
    if (cand_key > best_key) {
      best = cand;
      best_key = cand_key;
    }
  }
  return best;
}

}  // namespace nilsol
