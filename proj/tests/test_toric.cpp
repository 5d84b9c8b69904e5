#include <gtest/gtest.h>

#include <random>

#include "mckay/errors.hpp"
#include "mckay/groups/classes.hpp"
#include "mckay/groups/fixtures.hpp"
#include "mckay/exact/linalg.hpp"
#include "mckay/toric/construct.hpp"
#include "mckay/toric/geometry.hpp"
#include "mckay/toric/io.hpp"
#include "mckay/toric/lefschetz.hpp"
#include "mckay/toric/random.hpp"
#include "mckay/toric/standard.hpp"

using namespace mckay;
using namespace mckay::toric;

namespace {

LatticePair pair(std::size_t n, const char* gens) { return build_lattice_pair(n, parse_h_generators(gens, n)); }

LatticePair z5sq() { return pair(3, "1,4,0@5;0,1,4@5"); }

}  // namespace

TEST(LatticePair, Orders) {
  EXPECT_EQ(pair(2, "1,1@2").order, 2);
  EXPECT_EQ(z5sq().order, 25);
  EXPECT_EQ(pair(3, "").order, 1);
  EXPECT_EQ(pair(3, "1,2,2@5;1,1,3@5").order, 25);
  EXPECT_THROW(pair(2, "1,0@2"), NotSpecialLinear);
  EXPECT_THROW(parse_h_generators("1,2@", 2), ParseError);
  EXPECT_THROW(parse_h_generators("1,2,3@4", 2), ParseError);
}

TEST(LatticePair, CosetsAndBasePoints) {
  auto lp = z5sq();
  EXPECT_EQ(lp.coset_representatives().size(), 25u);
  // vertices e_i plus the 22 nontrivial cosets whose representative sums to 1 ... counted directly
  auto pts = lp.base_points();
  for (const auto& p : pts) {
    Rat s = 0;
    for (const auto& x : p) s += x;
    EXPECT_EQ(s, 1);
    EXPECT_TRUE(lp.contains(p));
  }
}

TEST(Perm, CyclesAndFixedSpace) {
  auto s = parse_perm("(1 2 3)", 3);
  EXPECT_EQ(s.order(), 3u);
  EXPECT_EQ(s.cycle_type(), (std::vector<std::size_t>{3}));
  EXPECT_EQ(fixed_subspace(s).rows(), 1u);
  EXPECT_EQ(fixed_subspace(PermSymmetry::identity(3)).rows(), 3u);
  auto sw = parse_perm("(1 2)", 2);
  EXPECT_EQ(fixed_subspace(sw).row_vector(0), (std::vector<Rat>{1, 1}));
  EXPECT_EQ(parse_perm("(1 2)(3 4 5)", 5).to_string(), "(1 2)(3 4 5)");
  EXPECT_THROW(parse_perm("(1 1)", 2), ParseError);
  EXPECT_THROW(parse_perm("(1 4)", 3), ParseError);
}

TEST(Construct, Z5SquaredThreeCycle) {
  auto lp = z5sq();
  auto s = parse_perm("(1 2 3)", 3);
  auto t = adjusted_triangulation(lp, s);
  auto rep = verify_crepant(t, lp);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(t.simplices.size(), 25u);
  EXPECT_TRUE(is_invariant(t, s));
  std::size_t inv = 0;
  for (const auto& m : t.simplices) {
    auto img = apply(t, s, m);
    if (img && *img == m) {
      ++inv;
      EXPECT_TRUE(in_closed_simplex(Point{Rat(1, 3), Rat(1, 3), Rat(1, 3)}, t.simplex_points(m)));
    }
  }
  EXPECT_EQ(inv, 1u);
  EXPECT_TRUE(is_h_adjusted(t, s));
  EXPECT_EQ(toric_lefschetz(t, lp, s), 1);
  EXPECT_EQ(count_fixed_elements(lp, s), 1);
}

TEST(Construct, Dimension2Segments) {
  for (unsigned n = 1; n <= 20; ++n) {
    const std::string g = n == 1 ? "" : "1," + std::to_string(n - 1) + "@" + std::to_string(n);
    auto lp = build_lattice_pair(2, parse_h_generators(g, 2));
    auto s = parse_perm("(1 2)", 2);
    auto t = adjusted_triangulation(lp, s);
    EXPECT_TRUE(verify_crepant(t, lp).ok);
    EXPECT_EQ(t.simplices.size(), n);
    EXPECT_TRUE(is_h_adjusted(t, s));
  }
}

TEST(Construct, Errors) {
  EXPECT_THROW(adjusted_triangulation(pair(4, ""), PermSymmetry::identity(4)), UnsupportedDimension);
  EXPECT_THROW(adjusted_triangulation(pair(3, "1,2,3@6"), parse_perm("(1 2)", 3)), NotInvariant);
}

TEST(Construct, OrderTwoStraddlingTriangle) {
  // Z_3 with the swap: the midpoint of the opposite side is not in N
  auto lp = pair(3, "1,1,1@3");
  auto s = parse_perm("(1 2)", 3);
  auto t = adjusted_triangulation(lp, s);
  EXPECT_TRUE(verify_crepant(t, lp).ok);
  EXPECT_TRUE(is_h_adjusted(t, s));
  // some unimodular triangle is mapped to itself while straddling the fixed line
  std::size_t straddling = 0;
  for (const auto& m : t.simplices) {
    auto img = apply(t, s, m);
    if (img && *img == m) ++straddling;
  }
  EXPECT_GE(straddling, 1u);
  auto r = theorem2_check(t, lp, s);
  EXPECT_TRUE(r.ok());
}

TEST(Crepant, RejectsBadTriangulations) {
  auto lp = pair(2, "1,1@2");
  Triangulation t;
  t.n = 2;
  t.vertices = {{0, 1}, {1, 0}};
  t.simplices = {{0, 1}};
  auto rep = verify_crepant(t, lp);
  EXPECT_FALSE(rep.ok);
  EXPECT_FALSE(rep.unimodular);

  auto lp1 = pair(3, "");
  Triangulation base;
  base.n = 3;
  base.vertices = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  base.simplices = {{0, 1, 2}};
  EXPECT_TRUE(verify_crepant(base, lp1).ok);
}

TEST(Lefschetz, TrivialGroupGivesOne) {
  for (const char* p : {"(1 2)", "(1 2 3)", ""}) {
    auto lp = pair(3, "");
    auto s = parse_perm(p, 3);
    EXPECT_EQ(toric_lefschetz(adjusted_triangulation(lp, s), lp, s), 1) << p;
  }
  auto lp2 = pair(2, "");
  auto sw = parse_perm("(1 2)", 2);
  EXPECT_EQ(toric_lefschetz(adjusted_triangulation(lp2, sw), lp2, sw), 1);
}

TEST(Lefschetz, SwapOnZ2) {
  auto lp = pair(2, "1,1@2");
  auto s = parse_perm("(1 2)", 2);
  EXPECT_EQ(toric_lefschetz(adjusted_triangulation(lp, s), lp, s), 2);
  EXPECT_EQ(count_fixed_elements(lp, s), 2);
}

TEST(Lefschetz, IdentityGivesGroupOrder) {
  auto lp = z5sq();
  auto id = PermSymmetry::identity(3);
  EXPECT_EQ(count_fixed_elements(lp, id), 25);
  EXPECT_EQ(toric_lefschetz(adjusted_triangulation(lp, id), lp, id), 25);
}

TEST(Lefschetz, NotInvariantTriangulation) {
  auto lp = pair(3, "1,1,0@2;0,1,1@2");
  const Rat h(1, 2);
  Triangulation t;
  t.n = 3;
  t.vertices = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {h, h, 0}, {0, h, h}};
  t.simplices = {{0, 2, 3}, {1, 3, 4}, {2, 3, 4}};
  auto sw = parse_perm("(1 2)", 3);
  ASSERT_TRUE(preserves(lp, sw));
  ASSERT_FALSE(is_invariant(t, sw));
  EXPECT_THROW(toric_lefschetz(t, lp, sw), NotInvariantTriangulation);
}

TEST(Lefschetz, RemarkAndDenseOrbit) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 15; ++i) {
    auto in = random_instance(rng);
    auto t = adjusted_triangulation(in.lp, in.s);
    auto recs = orbit_records_serial(t, in.lp, in.s);
    EXPECT_TRUE(fixed_ray_violations(recs, t, in.s).empty());
    ASSERT_TRUE(recs.front().face.empty());
    EXPECT_EQ(recs.front().contribution, 0);
    for (const auto& r : recs) EXPECT_EQ(r.action.rows(), 3 - r.face.size());
  }
}

TEST(BlockDet, Values) {
  EXPECT_EQ(block_det(1), 0);
  EXPECT_EQ(block_det(2), 3);
  EXPECT_EQ(block_det(4), 5);
  for (unsigned s = 2; s <= 12; ++s) EXPECT_EQ(block_det(s), s + 1);
}

TEST(BlockDet, PermutationCycleFactorIsZero) {
  // det(I − P) = 0 for any permutation matrix
  for (const char* p : {"(1 2)", "(1 2 3)", "(1 2)(3 4)", "(1 2 3 4 5)"}) {
    auto s = parse_perm(p, 5);
    auto m = exact::IntMat::identity(5) - s.matrix();
    EXPECT_EQ(exact::determinant(m), 0) << p;
  }
}

TEST(LefschetzEquality, TrivialGroup) {
  auto r = theorem2_check(pair(3, ""), parse_perm("(1 2 3)", 3));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.lefschetz, 1);
  EXPECT_EQ(r.fixed_elements, 1);
  EXPECT_EQ(r.lattice_index, 1);
}

TEST(LefschetzEquality, RandomInstances) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 60; ++i) {
    auto in = random_instance(rng);
    ASSERT_LE(in.lp.order, 49);
    auto r = theorem2_check(in.lp, in.s);
    EXPECT_TRUE(r.ok()) << format_h_generators(in.lp.gens) << " " << in.s.to_string();
    EXPECT_EQ(r.simplex_count, static_cast<std::size_t>(in.lp.order.get_ui()));
    EXPECT_EQ(r.fixed_elements, r.lattice_index);
  }
}

TEST(LefschetzEquality, ChoiceIndependence) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20; ++i) {
    auto in = random_instance(rng);
    auto a = adjusted_triangulation(in.lp, in.s, InsertionOrder::lex);
    auto b = adjusted_triangulation(in.lp, in.s, InsertionOrder::reverse_lex);
    EXPECT_EQ(toric_lefschetz(a, in.lp, in.s), toric_lefschetz(b, in.lp, in.s));
  }
}

TEST(LefschetzEquality, FlippedOrbit) {
  auto lp = z5sq();
  auto s = parse_perm("(1 2 3)", 3);
  auto t = adjusted_triangulation(lp, s);
  auto f = flip_orbit(t, s);
  ASSERT_TRUE(f.has_value());
  EXPECT_NE(f->simplices, t.simplices);
  EXPECT_TRUE(verify_crepant(*f, lp).ok);
  EXPECT_TRUE(is_h_adjusted(*f, s));
  EXPECT_EQ(toric_lefschetz(*f, lp, s), 1);
  EXPECT_FALSE(flip_orbit(adjusted_triangulation(pair(2, "1,1@2"), parse_perm("(1 2)", 2)), parse_perm("(1 2)", 2)));

  std::mt19937_64 rng(31);
  std::size_t flipped = 0;
  for (int i = 0; i < 20; ++i) {
    auto in = random_instance(rng);
    auto g = flip_orbit(adjusted_triangulation(in.lp, in.s), in.s);
    if (!g) continue;
    ++flipped;
    auto r = theorem2_check(*g, in.lp, in.s);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.lefschetz, r.fixed_elements);
  }
  EXPECT_GT(flipped, 0u);
}

TEST(McKay, AbelianClassesMatch) {
  // H abelian: classes are elements, so the invariant-class count is |H^h|
  for (unsigned n = 2; n <= 12; ++n) {
    auto g = groups::FiniteMatrixGroup::close(groups::fixtures::cyclic_generators(n));
    auto cls = groups::conjugacy_classes(g);
    auto inv = groups::invariant_class_count(groups::outer_action(g, cls, groups::fixtures::action_swap()));
    auto lp = build_lattice_pair(2, parse_h_generators("1," + std::to_string(n - 1) + "@" + std::to_string(n), 2));
    EXPECT_EQ(count_fixed_elements(lp, parse_perm("(1 2)", 2)), inv);
  }
}

TEST(Standard, Pairs) {
  auto p1 = standard_pair({1});
  EXPECT_EQ(p1.pieces.size(), 1u);
  auto p2 = standard_pair({2});
  EXPECT_EQ(p2.fixed_volume, Rat(1, 2));
  auto p3 = standard_pair({3});
  EXPECT_EQ(p3.pieces.size(), 3u);
  EXPECT_EQ(p3.piece_image, (std::vector<std::size_t>{1, 2, 0}));
  auto p = standard_pair({3, 2}, {1});
  EXPECT_EQ(p.fixed_volume, p.expected_volume);
  EXPECT_EQ(p.expected_volume, Rat(1, 36));
}

TEST(Standard, GStandardExamples) {
  // segment split at its midpoint under the swap
  auto lp = pair(2, "1,1@2");
  auto sw = parse_perm("(1 2)", 2);
  auto t = adjusted_triangulation(lp, sw);
  EXPECT_TRUE(is_g_standard({{1, 0}, {0, 1}}, t, sw).standard);

  // triangle fanned from its center under the 3-cycle
  auto lp3 = pair(3, "1,1,1@3");
  auto c3 = parse_perm("(1 2 3)", 3);
  auto t3 = adjusted_triangulation(lp3, c3);
  EXPECT_TRUE(is_g_standard({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, t3, c3).standard);

  // a σ-fixed vertex off the fixed locus violates (a)
  auto sw3 = parse_perm("(1 2)", 3);
  auto t0 = adjusted_triangulation(pair(3, ""), sw3);
  auto rep = is_g_standard({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, t0, sw3);
  EXPECT_TRUE(rep.a);

  EXPECT_THROW(is_g_standard({{1, 0, 0}, {0, 1, 0}}, t0, parse_perm("(1 3)", 3)), NotInvariant);
}

TEST(Io, RoundTripIsBitExact) {
  auto lp = z5sq();
  auto t = adjusted_triangulation(lp, parse_perm("(1 2 3)", 3));
  auto text = write_triangulation(lp, t);
  auto doc = read_triangulation(text);
  EXPECT_EQ(write_triangulation(doc.lp, doc.t), text);
  EXPECT_EQ(doc.t.simplices, t.simplices);
  EXPECT_EQ(doc.t.coarse, t.coarse);
}

TEST(Io, Diagnostics) {
  EXPECT_THROW(read_triangulation("{"), ParseError);
  try {
    read_triangulation(R"({"n":2,"generators":"","vertices":[["1","0"]],"simplices":[[0,4]]})");
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.where(), "$.simplices[0][1]");
  }
}
