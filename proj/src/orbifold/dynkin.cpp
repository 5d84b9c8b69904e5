#include "mckay/orbifold/dynkin.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mckay/errors.hpp"

namespace mckay::orbifold {

namespace {

std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::pair<std::size_t, std::size_t> sorted(std::size_t a, std::size_t b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

void check_automorphism(const DynkinGraph& g) {
  if (g.automorphism.size() != g.nodes) throw NotInvariant(g.name + ": automorphism has the wrong size");
  std::vector<std::size_t> p = g.automorphism;
  std::sort(p.begin(), p.end());
  if (p != identity_perm(g.nodes)) throw NotInvariant(g.name + ": automorphism is not a permutation");
  std::set<std::pair<std::size_t, std::size_t>> e;
  for (auto [a, b] : g.edges) e.insert(sorted(a, b));
  for (auto [a, b] : g.edges)
    if (!e.count(sorted(g.automorphism[a], g.automorphism[b])))
      throw NotInvariant(g.name + ": automorphism does not preserve edges");
}

DynkinGraph a_chain(std::size_t k, bool reversal) {
  DynkinGraph g{"A_" + std::to_string(k), k, {}, identity_perm(k)};
  for (std::size_t i = 0; i + 1 < k; ++i) g.edges.push_back({i, i + 1});
  if (reversal)
    for (std::size_t i = 0; i < k; ++i) g.automorphism[i] = k - 1 - i;
  return g;
}

// nodes 0..r-3 form the chain, r-2 and r-1 hang off node r-3
DynkinGraph d_diagram(std::size_t r, bool swap_legs) {
  if (r < 4) throw std::invalid_argument("D_r needs r ≥ 4");
  DynkinGraph g{"D_" + std::to_string(r), r, {}, identity_perm(r)};
  for (std::size_t i = 0; i + 3 < r; ++i) g.edges.push_back({i, i + 1});
  g.edges.push_back({r - 3, r - 2});
  g.edges.push_back({r - 3, r - 1});
  if (swap_legs) std::swap(g.automorphism[r - 2], g.automorphism[r - 1]);
  return g;
}

DynkinGraph d4_triality() {
  DynkinGraph g{"D_4", 4, {{0, 1}, {0, 2}, {0, 3}}, {0, 2, 3, 1}};
  return g;
}

// arms 0-1-2 and 4-3-2, node 5 attached to the center 2
DynkinGraph e6(bool flip) {
  DynkinGraph g{"E_6", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}, identity_perm(6)};
  if (flip) g.automorphism = {4, 3, 2, 1, 0, 5};
  return g;
}

long dynkin_lefschetz(const DynkinGraph& g) {
  check_automorphism(g);
  long fixed = 0;
  for (std::size_t i = 0; i < g.nodes; ++i)
    if (g.automorphism[i] == i) ++fixed;
  return 1 + fixed;
}

McKayReport mckay_check(const groups::FiniteMatrixGroup& g, const groups::GroupElement& h, const DynkinGraph& graph) {
  McKayReport r;
  const auto cls = groups::conjugacy_classes(g);
  r.group_order = g.order();
  r.classes = cls.size();
  r.invariant_classes = groups::invariant_class_count(groups::outer_action(g, cls, h));
  r.dynkin = dynkin_lefschetz(graph);
  return r;
}

}  // namespace mckay::orbifold
