#include "mckay/orbifold/sheet.hpp"

#include <set>

#include "mckay/errors.hpp"

namespace mckay::orbifold {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::paper: return "paper";
    case Provenance::derived: return "derived";
    case Provenance::trivial: return "trivial";
  }
  return "derived";
}

Provenance parse_provenance(const std::string& s) {
  if (s == "paper") return Provenance::paper;
  if (s == "derived") return Provenance::derived;
  if (s == "trivial") return Provenance::trivial;
  throw ParseError("unknown provenance '" + s + "'");
}

void validate(const GSpaceSheet& sheet) {
  if (sheet.group_order <= 0) throw InconsistentSheet("group order must be positive");
  Int total = 0;
  std::set<std::string> labels;
  for (const auto& c : sheet.classes) {
    if (!labels.insert(c.label).second) throw InconsistentSheet("duplicate class label '" + c.label + "'");
    if (c.size * c.centralizer_order != sheet.group_order)
      throw InconsistentSheet("class '" + c.label + "': size × centralizer order ≠ |G|");
    total += c.size;
  }
  if (total != sheet.group_order) throw InconsistentSheet("class sizes do not sum to |G|");
  for (const auto& s : sheet.strata) {
    if (s.order <= 0 || sheet.group_order % s.order != 0)
      throw InconsistentSheet("stratum '" + s.label + "': |S| does not divide |G|");
    if (s.con_h < 0 || s.con_h > s.class_count)
      throw InconsistentSheet("stratum '" + s.label + "': con(h,S) exceeds the class count of S");
  }
  for (const auto& p : sheet.commuting_pairs)
    if (!labels.count(p.g_class) || !labels.count(p.h_class))
      throw InconsistentSheet("commuting pair refers to an unknown class");
}

std::optional<Rat> euler_double_count(const GSpaceSheet& sheet) {
  if (sheet.commuting_pairs.empty()) return std::nullopt;
  Int sum = 0;
  for (const auto& p : sheet.commuting_pairs) sum += p.pairs * p.euler;
  return exact::make_rat(sum, sheet.group_order);
}

Int euler_orbifold(const GSpaceSheet& sheet) {
  validate(sheet);
  Int sum = 0;
  for (const auto& c : sheet.classes) {
    if (!c.euler_quotient) throw MissingValue("class '" + c.label + "' has no euler_quotient");
    sum += c.euler_quotient->value;
  }
  if (auto dc = euler_double_count(sheet); dc && *dc != Rat(sum))
    throw InconsistentSheet("class sum " + sum.get_str() + " differs from the commuting-pair count " +
                            exact::to_string(*dc));
  return sum;
}

Int lefschetz_theorem1(const GSpaceSheet& sheet) {
  validate(sheet);
  Int sum = 0;
  for (const auto& c : sheet.classes) {
    if (!c.in_ch) continue;
    if (!c.lefschetz_quotient) throw MissingValue("class '" + c.label + "' has no lefschetz_quotient");
    sum += c.lefschetz_quotient->value;
  }
  return sum;
}

std::map<int, DecompositionEntry> lefschetz_decomposition(const GSpaceSheet& sheet) {
  std::map<int, DecompositionEntry> out;
  for (const auto& c : sheet.classes) {
    if (!c.in_ch) continue;
    if (!c.lefschetz_quotient) throw MissingValue("class '" + c.label + "' has no lefschetz_quotient");
    const int key = c.identity ? identity_key : c.fixed_dim.value_or(-2);
    auto& e = out[key];
    ++e.count;
    e.total += c.lefschetz_quotient->value;
  }
  return out;
}

ChainReport chain_check(const GSpaceSheet& sheet) {
  ChainReport r;
  r.class_stage = lefschetz_theorem1(sheet);
  r.has_strata = !sheet.strata.empty();
  if (!r.has_strata) {
    r.mismatch = "sheet has no strata";
    return r;
  }
  for (const auto& s : sheet.strata) {
    Rat term = 0;
    if (s.h_invariant) {
      if (!s.lefschetz_stratum) throw MissingValue("stratum '" + s.label + "' has no lefschetz_stratum");
      term = Rat(s.lefschetz_stratum->value) * exact::make_rat(s.order, sheet.group_order) * Rat(s.con_h);
    }
    r.stratum_terms.push_back(term);
    r.strata_stage += term;
  }
  r.ok = r.strata_stage == Rat(r.class_stage);
  if (!r.ok)
    r.mismatch = "strata stage " + exact::to_string(r.strata_stage) + " ≠ class stage " + r.class_stage.get_str();
  return r;
}

}  // namespace mckay::orbifold
