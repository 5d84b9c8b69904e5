#include "mckay/groups/classes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mckay/errors.hpp"

namespace mckay::groups {

ConjClassSet conjugacy_classes(const FiniteMatrixGroup& g) {
  const std::size_t n = g.order();
  ConjClassSet out;
  out.class_of.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (out.class_of[x] != n) continue;
    const std::size_t c = out.classes.size();
    std::set<std::size_t> cls;
    for (std::size_t y = 0; y < n; ++y) cls.insert(g.mul(g.mul(y, x), g.inv(y)));
    for (auto m : cls) out.class_of[m] = c;
    out.classes.emplace_back(cls.begin(), cls.end());
    out.representatives.push_back(x);
  }
  return out;
}

bool Subgroup::contains(std::size_t i) const { return std::binary_search(members.begin(), members.end(), i); }

Subgroup whole_group(const FiniteMatrixGroup& g) {
  Subgroup s;
  s.members.resize(g.order());
  std::iota(s.members.begin(), s.members.end(), 0);
  return s;
}

Subgroup generated_subgroup(const FiniteMatrixGroup& g, const std::vector<std::size_t>& gens) {
  std::set<std::size_t> seen{g.identity_index()};
  std::vector<std::size_t> frontier{g.identity_index()};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto x : frontier)
      for (auto s : gens) {
        auto y = g.mul(x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return Subgroup{{seen.begin(), seen.end()}};
}

bool is_subgroup(const FiniteMatrixGroup& g, const Subgroup& s) {
  if (!std::is_sorted(s.members.begin(), s.members.end())) return false;
  if (!s.contains(g.identity_index())) return false;
  for (auto a : s.members) {
    if (a >= g.order()) return false;
    for (auto b : s.members)
      if (!s.contains(g.mul(a, b))) return false;
  }
  return true;
}

FiniteMatrixGroup as_group(const FiniteMatrixGroup& g, const Subgroup& s) {
  std::vector<GroupElement> gens;
  for (auto i : s.members) gens.push_back(g.element(i));
  ClosureOptions opts;
  opts.normalization = g.normalization();
  opts.exec = Exec::serial;
  return FiniteMatrixGroup::close(gens, opts);
}

Subgroup centralizer(const FiniteMatrixGroup& g, std::size_t x) {
  Subgroup s;
  for (std::size_t c = 0; c < g.order(); ++c)
    if (g.mul(c, x) == g.mul(x, c)) s.members.push_back(c);
  return s;
}

Subgroup centralizer(const FiniteMatrixGroup& g, const GroupElement& x) {
  auto i = g.find(x);
  if (!i) throw ElementNotInGroup("centralizer: element " + x.to_string() + " is not in the group");
  return centralizer(g, *i);
}

OuterAction outer_action(const FiniteMatrixGroup& g, const ConjClassSet& classes, const GroupElement& h) {
  if (h.dim() != g.dim()) throw NotNormalizing("outer action: dimension mismatch");
  const unsigned M = std::lcm(g.conductor(), h.conductor());
  auto canon = [&](const GroupElement& x) { return g.normalize(x).key(M); };
  // h·x·h⁻¹ = y  ⇔  y·h = h·x, which avoids inverting h.
  std::map<Key, std::size_t> right;
  for (std::size_t y = 0; y < g.order(); ++y) right.emplace(canon(g.element(y) * h), y);
  OuterAction a;
  a.h = h;
  a.element_perm.resize(g.order());
  std::vector<bool> hit(g.order(), false);
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto it = right.find(canon(h * g.element(x)));
    if (it == right.end())
      throw NotNormalizing("h does not normalize the group: conjugate of " + g.element(x).to_string() + " is outside");
    a.element_perm[x] = it->second;
    if (hit[it->second]) throw NotNormalizing("conjugation by h is not injective");
    hit[it->second] = true;
  }
  a.class_perm.resize(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::size_t target = classes.class_of[a.element_perm[classes.representatives[c]]];
    for (auto m : classes.classes[c])
      if (classes.class_of[a.element_perm[m]] != target) throw NotNormalizing("class permutation is not well defined");
    a.class_perm[c] = target;
  }
  return a;
}

std::size_t invariant_class_count(const OuterAction& a) {
  std::size_t k = 0;
  for (std::size_t c = 0; c < a.class_perm.size(); ++c)
    if (a.class_perm[c] == c) ++k;
  return k;
}

bool is_invariant(const OuterAction& a, const Subgroup& s) {
  for (auto m : s.members)
    if (!s.contains(a.element_perm[m])) return false;
  return true;
}

namespace {

bool conjugate_in(const FiniteMatrixGroup& g, const Subgroup& s, std::size_t x, std::size_t y) {
  for (auto c : s.members)
    if (g.mul(g.mul(c, x), g.inv(c)) == y) return true;
  return false;
}

}  // namespace

std::size_t con(const FiniteMatrixGroup& g, const OuterAction& a, const Subgroup& s) {
  if (!is_invariant(a, s)) throw StabilizerNotSubgroup("con: subgroup is not h-invariant");
  std::vector<bool> done(g.order(), false);
  std::size_t count = 0;
  for (auto x : s.members) {
    if (done[x]) continue;
    for (auto c : s.members) done[g.mul(g.mul(c, x), g.inv(c))] = true;
    if (conjugate_in(g, s, x, a.element_perm[x])) ++count;
  }
  return count;
}

std::vector<std::size_t> ch_filter(const FiniteMatrixGroup& g, const ConjClassSet& classes, const OuterAction& a,
                                   const std::vector<Subgroup>& stabilizers) {
  std::vector<const Subgroup*> inv;
  for (const auto& s : stabilizers) {
    if (!is_subgroup(g, s)) throw StabilizerNotSubgroup("ch_filter: supplied stabilizer is not a subgroup");
    if (is_invariant(a, s)) inv.push_back(&s);
  }
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    bool ok = true;
    for (auto x : classes.classes[c]) {
      for (const Subgroup* s : inv) {
        if (!s->contains(x)) continue;
        if (!conjugate_in(g, *s, x, a.element_perm[x])) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) out.push_back(c);
  }
  return out;
}

std::vector<Subgroup> coordinate_stabilizers(const FiniteMatrixGroup& g) {
  const bool projective = g.normalization() == Normalization::projective;
  std::vector<Subgroup> out;
  if (!projective) out.push_back(whole_group(g));
  for (const auto& e : g.elements())
    if (!e.is_diagonal()) return out;
  const std::size_t n = g.dim();
  std::set<std::vector<std::size_t>> distinct;
  for (const auto& s : out) distinct.insert(s.members);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Subgroup s;
    for (std::size_t i = 0; i < g.order(); ++i) {
      const auto& e = g.element(i);
      bool fixes = true;
      const CycloInt* ref = nullptr;
      for (std::size_t k = 0; k < n && fixes; ++k) {
        if (!(mask >> k & 1u)) continue;
        if (projective) {
          if (!ref) ref = &e(k, k);
          else fixes = e(k, k) == *ref;
        } else {
          fixes = e(k, k).is_one();
        }
      }
      if (fixes) s.members.push_back(i);
    }
    if (distinct.insert(s.members).second) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace mckay::groups
