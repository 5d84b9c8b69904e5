#include <gtest/gtest.h>

#include "mckay/errors.hpp"
#include "mckay/groups/classes.hpp"
#include "mckay/groups/fixtures.hpp"
#include "mckay/orbifold/dynkin.hpp"
#include "mckay/orbifold/quintic.hpp"
#include "mckay/orbifold/sheet_io.hpp"
#include "mckay/orbifold/sheets.hpp"

using namespace mckay;
using namespace mckay::orbifold;
namespace fx = mckay::groups::fixtures;

namespace {

const GSpaceSheet& swap_sheet() {
  static const GSpaceSheet s = quintic_sheet(QuinticVariant::swap);
  return s;
}

}  // namespace

TEST(Quintic, FermatEuler) {
  const long expected[] = {0, 0, 5, -10, 55, -200};
  for (unsigned k = 0; k <= 5; ++k) EXPECT_EQ(quintic::fermat_euler(k), expected[k]) << k;
}

TEST(Quintic, GroupAndFixedDimensions) {
  auto grp = quintic::group_exponents();
  ASSERT_EQ(grp.size(), 125u);
  EXPECT_EQ(quintic::fixed_dimension(grp.front()), 3);
  std::map<int, int> dims;
  for (const auto& a : grp) ++dims[quintic::fixed_dimension(a)];
  EXPECT_EQ(dims[3], 1);
  // every nonidentity element fixes a curve or points: dimension 1 needs three equal exponents
  EXPECT_EQ(dims[1] + dims[0] + dims[-1], 124);
  EXPECT_EQ(dims[2], 0);
}

TEST(Quintic, OpenStrataSumToEuler) {
  long total = 0;
  for (quintic::Mask j = 1; j <= quintic::all_coordinates; ++j) total += quintic::open_euler(j);
  EXPECT_EQ(total, -200);
}

TEST(Quintic, TwistedIdentity) {
  auto id = quintic::identity_involution();
  auto grp = quintic::group_exponents();
  EXPECT_EQ(quintic::twisted_euler(id, grp[0], grp[0]), -200);
  for (std::size_t i = 0; i < grp.size(); i += 7)
    EXPECT_EQ(quintic::twisted_euler(id, grp[i], grp[0]), quintic::twisted_euler(id, grp[0], grp[i]));
}

TEST(Sheets, QuinticValues) {
  const auto& s = swap_sheet();
  EXPECT_NO_THROW(validate(s));
  EXPECT_EQ(s.group_order, 125);
  EXPECT_EQ(euler_orbifold(s), 200);
  EXPECT_EQ(*euler_double_count(s), 200);
  EXPECT_EQ(lefschetz_theorem1(s), 56);
  for (const auto& c : s.stated_checks) EXPECT_TRUE(c.agrees()) << c.quantity;

  auto two = quintic_sheet(QuinticVariant::swap_two_pairs);
  EXPECT_EQ(lefschetz_theorem1(two), 8);
  for (const auto& c : two.stated_checks) EXPECT_TRUE(c.agrees()) << c.quantity;
}

TEST(Sheets, Decomposition) {
  auto d = lefschetz_decomposition(swap_sheet());
  EXPECT_EQ(d[identity_key].total, 8);
  EXPECT_EQ(d[1].count, 12u);
  EXPECT_EQ(d[1].total, 24);
  EXPECT_EQ(d[0].count, 12u);
  EXPECT_EQ(d[0].total, 24);

  auto two = lefschetz_decomposition(quintic_sheet(QuinticVariant::swap_two_pairs));
  EXPECT_EQ(two[identity_key].total, 0);
  std::size_t others = 0;
  Int rest = 0;
  for (const auto& [k, e] : two)
    if (k != identity_key) others += e.count, rest += e.total;
  EXPECT_EQ(others, 4u);
  EXPECT_EQ(rest, 8);
}

TEST(Sheets, IdentityReducesToEuler) {
  auto s = quintic_sheet(QuinticVariant::identity);
  EXPECT_EQ(lefschetz_theorem1(s), euler_orbifold(s));
  EXPECT_EQ(lefschetz_theorem1(s), 200);
  for (const auto& c : s.classes) EXPECT_TRUE(c.in_ch);
}

TEST(Sheets, ChainAgrees) {
  for (auto v : {QuinticVariant::identity, QuinticVariant::swap, QuinticVariant::swap_two_pairs}) {
    auto rep = chain_check(quintic_sheet(v));
    EXPECT_TRUE(rep.has_strata);
    EXPECT_TRUE(rep.ok) << rep.mismatch;
    EXPECT_EQ(rep.strata_stage, Rat(rep.class_stage));
  }
}

TEST(Sheets, ChainIsAdditiveOverStrata) {
  auto s = swap_sheet();
  const auto before = chain_check(s);
  // split the first stratum with a Lefschetz value into two pieces of the same type
  for (std::size_t i = 0; i < s.strata.size(); ++i) {
    auto& st = s.strata[i];
    if (!st.lefschetz_stratum || !st.h_invariant || st.con_h == 0) continue;
    StratumRecord piece = st;
    piece.label += "'";
    piece.lefschetz_stratum->value = 3;
    st.lefschetz_stratum->value -= 3;
    s.strata.push_back(piece);
    break;
  }
  const auto after = chain_check(s);
  EXPECT_EQ(after.strata_stage, before.strata_stage);
  EXPECT_TRUE(after.ok);
}

TEST(Sheets, ChainDetectsMismatch) {
  auto s = swap_sheet();
  for (auto& st : s.strata)
    if (st.lefschetz_stratum && st.h_invariant && st.con_h > 0) {
      st.lefschetz_stratum->value += 1;
      break;
    }
  auto rep = chain_check(s);
  EXPECT_FALSE(rep.ok);
  EXPECT_FALSE(rep.mismatch.empty());
}

TEST(Sheets, LtValues) {
  auto s = lt_sheet();
  EXPECT_NO_THROW(validate(s));
  EXPECT_EQ(s.group_order, 81);
  EXPECT_EQ(lefschetz_theorem1(s), 16);
  std::size_t in_ch = 0;
  for (const auto& c : s.classes) in_ch += c.in_ch;
  EXPECT_EQ(in_ch, 9u);
  EXPECT_THROW(euler_orbifold(s), MissingValue);
  EXPECT_FALSE(chain_check(s).has_strata);
}

TEST(Sheets, PointGivesInvariantClassCount) {
  for (auto gens : {fx::binary_tetrahedral_generators(), fx::quaternion_generators(), fx::cyclic_generators(7)}) {
    auto g = groups::FiniteMatrixGroup::close(gens);
    auto s = point_sheet(g);
    EXPECT_NO_THROW(validate(s));
    EXPECT_EQ(lefschetz_theorem1(s), static_cast<long>(groups::conjugacy_classes(g).size()));
    EXPECT_EQ(euler_orbifold(s), lefschetz_theorem1(s));
  }
  EXPECT_EQ(lefschetz_theorem1(point_sheet()), 1);
}

TEST(Sheets, ValidationRejects) {
  auto s = point_sheet();
  s.classes[0].size = 2;
  EXPECT_THROW(validate(s), InconsistentSheet);

  auto q = swap_sheet();
  q.commuting_pairs[0].euler += 125;
  EXPECT_THROW(euler_orbifold(q), InconsistentSheet);

  auto m = point_sheet();
  m.classes[0].lefschetz_quotient.reset();
  EXPECT_THROW(lefschetz_theorem1(m), MissingValue);
}

TEST(Dynkin, Values) {
  EXPECT_EQ(dynkin_lefschetz(a_chain(3, true)), 2);
  EXPECT_EQ(dynkin_lefschetz(a_chain(4, true)), 1);
  EXPECT_EQ(dynkin_lefschetz(a_chain(4, false)), 5);
  EXPECT_EQ(dynkin_lefschetz(d_diagram(5, true)), 4);
  EXPECT_EQ(dynkin_lefschetz(d4_triality()), 2);
  EXPECT_EQ(dynkin_lefschetz(e6(true)), 3);
  EXPECT_EQ(dynkin_lefschetz(e6(false)), 7);
  auto bad = a_chain(3, false);
  bad.automorphism = {1, 0, 2};
  EXPECT_THROW(check_automorphism(bad), NotInvariant);
}

TEST(Dynkin, McKayCorrespondence) {
  for (unsigned n = 2; n <= 9; ++n) {
    auto g = groups::FiniteMatrixGroup::close(fx::cyclic_generators(n));
    EXPECT_TRUE(mckay_check(g, fx::action_swap(), a_chain(n - 1, true)).ok()) << n;
  }
  for (unsigned r = 4; r <= 7; ++r) {
    auto g = groups::FiniteMatrixGroup::close(fx::binary_dihedral_generators(r));
    auto rep = mckay_check(g, fx::binary_dihedral_action(r), d_diagram(r, true));
    EXPECT_TRUE(rep.ok()) << r << ": " << rep.invariant_classes << " vs " << rep.dynkin;
  }
  auto t = groups::FiniteMatrixGroup::close(fx::binary_tetrahedral_generators());
  auto rep = mckay_check(t, fx::binary_tetrahedral_action(), e6(true));
  EXPECT_EQ(rep.invariant_classes, 3u);
  EXPECT_TRUE(rep.ok());
  auto q = groups::FiniteMatrixGroup::close(fx::quaternion_generators());
  EXPECT_TRUE(mckay_check(q, fx::triality_action(), d4_triality()).ok());
}

TEST(SheetIo, RoundTrip) {
  for (const auto& s : {swap_sheet(), lt_sheet(), point_sheet()}) {
    auto text = write_sheet(s);
    auto back = read_sheet(text);
    EXPECT_EQ(back, s);
    EXPECT_EQ(write_sheet(back), text);
  }
}

TEST(SheetIo, Diagnostics) {
  try {
    read_sheet("{\n  \"name\": ,\n}");
    FAIL();
  } catch (const SchemaError&) {
    FAIL() << "syntax error reported as schema error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  auto text = write_sheet(point_sheet());
  auto pos = text.find("\"derived\"");
  if (pos == std::string::npos) pos = text.find("\"trivial\"");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 9, "\"bogus\"");
  try {
    read_sheet(text);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_NE(e.where().find("provenance"), std::string::npos) << e.where();
  }
  EXPECT_THROW(load_sheet("/nonexistent/x.sheet"), Error);
}
