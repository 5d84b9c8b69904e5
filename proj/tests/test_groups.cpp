#include <gtest/gtest.h>

#include <algorithm>

#include "mckay/errors.hpp"
#include "mckay/groups/classes.hpp"
#include "mckay/groups/fixtures.hpp"

using namespace mckay;
using namespace mckay::groups;
namespace fx = mckay::groups::fixtures;

namespace {

FiniteMatrixGroup projective(const std::vector<GroupElement>& gens) {
  ClosureOptions o;
  o.normalization = Normalization::projective;
  return FiniteMatrixGroup::close(gens, o);
}

std::size_t invariant(const FiniteMatrixGroup& g, const GroupElement& h) {
  auto cls = conjugacy_classes(g);
  return invariant_class_count(outer_action(g, cls, h));
}

}  // namespace

TEST(Closure, Trivial) {
  auto g = FiniteMatrixGroup::close({GroupElement::identity(2)});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(conjugacy_classes(g).size(), 1u);
}

TEST(Closure, QuinticGroupHasOrder125) {
  auto g = projective(fx::quintic_generators());
  EXPECT_EQ(g.order(), 125u);
  EXPECT_TRUE(g.is_abelian());
}

TEST(Closure, BinaryDihedralOrders) {
  for (unsigned r = 3; r <= 8; ++r) {
    auto g = FiniteMatrixGroup::close(fx::binary_dihedral_generators(r));
    EXPECT_EQ(g.order(), 4 * (r - 2)) << "r = " << r;
    EXPECT_EQ(conjugacy_classes(g).size(), r + 1) << "r = " << r;
  }
}

TEST(Closure, CapExceeded) {
  ClosureOptions o;
  o.cap = 5;
  EXPECT_THROW(FiniteMatrixGroup::close(fx::cyclic_generators(7), o), CapExceeded);
}

TEST(Closure, GeneratorOrderIndependent) {
  auto gens = fx::binary_tetrahedral_generators();
  auto a = FiniteMatrixGroup::close(gens);
  std::reverse(gens.begin(), gens.end());
  auto b = FiniteMatrixGroup::close(gens);
  EXPECT_EQ(a.elements(), b.elements());
  std::rotate(gens.begin(), gens.begin() + 1, gens.end());
  EXPECT_EQ(a.elements(), FiniteMatrixGroup::close(gens).elements());
}

TEST(Closure, DeterminantOne) {
  for (auto gens : {fx::cyclic_generators(6), fx::binary_dihedral_generators(5), fx::binary_tetrahedral_generators()}) {
    const auto g = FiniteMatrixGroup::close(gens);
    for (const auto& e : g.elements()) EXPECT_TRUE(e.determinant().is_one());
  }
}

TEST(Classes, ClassEquation) {
  for (auto gens : {fx::binary_tetrahedral_generators(), fx::binary_dihedral_generators(6), fx::quaternion_generators()}) {
    auto g = FiniteMatrixGroup::close(gens);
    auto cls = conjugacy_classes(g);
    std::size_t total = 0;
    for (std::size_t c = 0; c < cls.size(); ++c) {
      EXPECT_EQ(cls.classes[c].size() * centralizer(g, cls.representatives[c]).order(), g.order());
      total += cls.classes[c].size();
    }
    EXPECT_EQ(total, g.order());
  }
}

TEST(Classes, BinaryTetrahedral) {
  auto g = FiniteMatrixGroup::close(fx::binary_tetrahedral_generators());
  EXPECT_EQ(g.order(), 24u);
  EXPECT_EQ(conjugacy_classes(g).size(), 7u);
  EXPECT_EQ(invariant(g, fx::binary_tetrahedral_action()), 3u);
}

TEST(Centralizer, AbelianAndCentral) {
  auto c = FiniteMatrixGroup::close(fx::cyclic_generators(5));
  for (std::size_t i = 0; i < c.order(); ++i) EXPECT_EQ(centralizer(c, i).order(), c.order());
  auto q = FiniteMatrixGroup::close(fx::quaternion_generators());
  auto minus = GroupElement::identity(2).scaled(exact::CycloInt(-1));
  EXPECT_EQ(centralizer(q, minus).order(), 8u);
  // an element of order 4
  for (std::size_t i = 0; i < q.order(); ++i) {
    std::size_t sq = q.mul(i, i);
    if (sq != q.identity_index() && q.mul(sq, sq) == q.identity_index()) EXPECT_EQ(centralizer(q, i).order(), 4u);
  }
  EXPECT_THROW(centralizer(q, GroupElement::diagonal(3, {1, 2})), ElementNotInGroup);
}

TEST(OuterAction, IdentityAction) {
  auto g = FiniteMatrixGroup::close(fx::binary_dihedral_generators(5));
  auto cls = conjugacy_classes(g);
  auto a = outer_action(g, cls, GroupElement::identity(2));
  for (std::size_t i = 0; i < g.order(); ++i) EXPECT_EQ(a.element_perm[i], i);
  EXPECT_EQ(invariant_class_count(a), cls.size());
}

TEST(OuterAction, AdeCounts) {
  for (unsigned n : {2u, 4u, 6u, 8u, 10u})
    EXPECT_EQ(invariant(FiniteMatrixGroup::close(fx::cyclic_generators(n)), fx::action_swap()), 2u) << n;
  for (unsigned r = 3; r <= 8; ++r)
    EXPECT_EQ(invariant(FiniteMatrixGroup::close(fx::binary_dihedral_generators(r)), fx::binary_dihedral_action(r)),
              r - 1)
        << r;
  EXPECT_EQ(invariant(FiniteMatrixGroup::close(fx::quaternion_generators()), fx::triality_action()), 2u);
}

TEST(OuterAction, NotNormalizing) {
  auto g = FiniteMatrixGroup::close(fx::cyclic_generators(4));
  auto cls = conjugacy_classes(g);
  auto bad = GroupElement(CycloMat{{exact::CycloInt(1), exact::CycloInt(1)}, {exact::CycloInt(0), exact::CycloInt(1)}});
  EXPECT_THROW(outer_action(g, cls, bad), NotNormalizing);
}

TEST(OuterAction, CentralTwistKeepsCount) {
  // replacing h by h·z for central z leaves the count unchanged
  auto g = FiniteMatrixGroup::close(fx::binary_dihedral_generators(6));
  auto h = fx::binary_dihedral_action(6);
  auto z = GroupElement::identity(2).scaled(exact::CycloInt(-1));
  EXPECT_EQ(invariant(g, h), invariant(g, h * z));
}

TEST(ChFilter, IdentityKeepsEverything) {
  auto g = projective(fx::quintic_generators());
  auto cls = conjugacy_classes(g);
  auto a = outer_action(g, cls, GroupElement::identity(5));
  EXPECT_EQ(ch_filter(g, cls, a, coordinate_stabilizers(g)).size(), 125u);
}

TEST(ChFilter, QuinticSwap) {
  auto g = projective(fx::quintic_generators());
  auto cls = conjugacy_classes(g);
  auto a = outer_action(g, cls, fx::quintic_swap());
  auto in = ch_filter(g, cls, a, coordinate_stabilizers(g));
  EXPECT_EQ(in.size(), 25u);
  for (auto c : in) {
    const auto& m = g.element(cls.representatives[c]).matrix();
    EXPECT_EQ(m(0, 0), m(1, 1));
  }
  auto b = outer_action(g, cls, fx::quintic_swap_two_pairs());
  EXPECT_EQ(ch_filter(g, cls, b, coordinate_stabilizers(g)).size(), 5u);
}

TEST(ChFilter, LT) {
  auto g = projective(fx::lt_generators());
  EXPECT_EQ(g.order(), 81u);
  auto cls = conjugacy_classes(g);
  auto a = outer_action(g, cls, fx::lt_involution());
  EXPECT_EQ(ch_filter(g, cls, a, coordinate_stabilizers(g)).size(), 9u);
}

TEST(ChFilter, RejectsNonSubgroup) {
  auto g = FiniteMatrixGroup::close(fx::cyclic_generators(4));
  auto cls = conjugacy_classes(g);
  auto a = outer_action(g, cls, fx::action_swap());
  Subgroup bad;
  bad.members = {0, 1};
  if (is_subgroup(g, bad)) bad.members = {1};
  EXPECT_THROW(ch_filter(g, cls, a, {bad}), StabilizerNotSubgroup);
}

TEST(Con, SameForConjugateStabilizers) {
  auto g = FiniteMatrixGroup::close(fx::binary_dihedral_generators(6));
  auto cls = conjugacy_classes(g);
  auto a = outer_action(g, cls, fx::binary_dihedral_action(6));
  // cyclic subgroups generated by single elements, and their conjugates
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto s = generated_subgroup(g, {x});
    if (!is_invariant(a, s)) continue;
    for (std::size_t k = 0; k < g.order(); ++k) {
      auto t = generated_subgroup(g, {g.mul(g.mul(k, x), g.inv(k))});
      if (is_invariant(a, t)) {
        EXPECT_EQ(con(g, a, s), con(g, a, t));
      }
    }
  }
}

TEST(Parse, Elements) {
  auto e = parse_element("[[z4^1,0],[0,z4^3]]");
  EXPECT_EQ(e, GroupElement::diagonal(4, {1, 3}));
  EXPECT_THROW(parse_element("[[1,0],[0]]"), ParseError);
  EXPECT_THROW(parse_generators("[[z4^1]];[[q]]"), ParseError);
}
