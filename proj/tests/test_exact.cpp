#include <gtest/gtest.h>

#include <random>

#include "mckay/errors.hpp"
#include "mckay/exact/cyclotomic.hpp"
#include "mckay/exact/lattice.hpp"
#include "mckay/exact/linalg.hpp"
#include "mckay/exact/rational.hpp"
#include "mckay/exact/smith.hpp"

using namespace mckay;
using namespace mckay::exact;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace

TEST(Cyclotomic, SmallPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), ints({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(5), ints({1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), ints({1, -1, 1}));
}

TEST(Cyclotomic, ProductOverDivisors) {
  for (unsigned m = 1; m <= 30; ++m) {
    std::vector<Int> prod{Int(1)};
    for (unsigned d = 1; d <= m; ++d)
      if (m % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
    std::vector<Int> expect(m + 1, Int(0));
    expect[0] = -1;
    expect[m] = 1;
    EXPECT_EQ(prod, expect) << "m = " << m;
  }
}

TEST(Cyclotomic, RootArithmetic) {
  auto z5 = CycloInt::root_of_unity(5, 1);
  EXPECT_TRUE((z5 * CycloInt::root_of_unity(5, 4)).is_one());
  auto i = CycloInt::root_of_unity(4, 1);
  EXPECT_EQ(i * i, CycloInt(-1));
  EXPECT_EQ(CycloInt::root_of_unity(3, 1) * CycloInt::root_of_unity(9, 1), CycloInt::root_of_unity(9, 4));
  EXPECT_EQ(z5.pow(5), CycloInt(1));
}

TEST(Cyclotomic, EqualityAcrossConductors) {
  EXPECT_EQ(CycloInt::root_of_unity(2, 1), CycloInt(-1));
  EXPECT_EQ(CycloInt::root_of_unity(6, 2), CycloInt::root_of_unity(3, 1));
  EXPECT_FALSE(CycloInt::root_of_unity(6, 1) == CycloInt::root_of_unity(3, 1));
}

TEST(Cyclotomic, RandomRingLaws) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> k(0, 35);
  const unsigned ms[] = {3, 4, 5, 8, 9, 12};
  for (int t = 0; t < 200; ++t) {
    auto a = CycloInt::root_of_unity(ms[t % 6], k(rng)) + CycloInt::root_of_unity(ms[(t + 1) % 6], k(rng));
    auto b = CycloInt::root_of_unity(ms[(t + 2) % 6], k(rng)) - CycloInt(2);
    auto c = CycloInt::root_of_unity(ms[(t + 3) % 6], k(rng));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * CycloInt(1), a);
  }
}

TEST(Cyclotomic, ParseAndPrint) {
  auto x = parse_cyclo("z4^1 + 2*z4^3 - 1");
  EXPECT_EQ(x.to_string(), "-1 - z4^1");
  EXPECT_EQ(parse_cyclo(x.to_string()), x);
  EXPECT_THROW(parse_cyclo("z4^"), ParseError);
  EXPECT_THROW(parse_cyclo("q"), ParseError);
}

TEST(Rational, ParseRoundTrip) {
  EXPECT_EQ(to_string(parse_rat("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rat("-2")), "-2");
  EXPECT_THROW(parse_rat("1/0"), ParseError);
  EXPECT_THROW(parse_rat("x"), ParseError);
}

TEST(Smith, Examples) {
  auto id = smith_normal_form(IntMat::identity(2));
  EXPECT_EQ(id.D, IntMat::identity(2));

  IntMat a{{2, 0}, {0, 3}};
  auto f = smith_normal_form(a);
  EXPECT_EQ(f.D, (IntMat{{1, 0}, {0, 6}}));
  EXPECT_EQ(f.U * a * f.V, f.D);

  IntMat b{{2, 4}, {6, 8}};
  auto g = smith_normal_form(b);
  EXPECT_EQ(g.D, (IntMat{{2, 0}, {0, 4}}));
  EXPECT_EQ(g.U * b * g.V, g.D);
}

TEST(Smith, RandomMatricesRecompose) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-12, 12);
  for (int t = 0; t < 150; ++t) {
    const std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 4;
    IntMat a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = d(rng);
    auto f = smith_normal_form(a);
    ASSERT_EQ(f.U * a * f.V, f.D);
    EXPECT_EQ(abs(determinant(f.U)), 1);
    EXPECT_EQ(abs(determinant(f.V)), 1);
    for (std::size_t i = 0; i + 1 < f.rank; ++i) EXPECT_EQ(f.D(i + 1, i + 1) % f.D(i, i), 0);
    for (std::size_t i = 0; i < f.rank; ++i) EXPECT_GT(f.D(i, i), 0);
    // U⁻¹ D V⁻¹ recovers a
    auto back = inverse(to_rational(f.U)) * to_rational(f.D) * inverse(to_rational(f.V));
    EXPECT_EQ(to_integer(back), a);
    if (r == c) EXPECT_EQ(abs(determinant(a)), abs(determinant(f.D)));
  }
}

TEST(Lattice, IndexExamples) {
  RatMat sub{{2, 0}, {0, 3}};
  EXPECT_EQ(lattice_index(sub, RatMat::identity(2)), 6);
  EXPECT_EQ(lattice_index(RatMat::identity(3), RatMat::identity(3)), 1);
  RatMat n{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {Rat(1, 5), Rat(2, 5), Rat(2, 5)}, {Rat(1, 5), Rat(1, 5), Rat(3, 5)}};
  EXPECT_EQ(lattice_index(RatMat::identity(3), n), 25);
}

TEST(Lattice, Errors) {
  EXPECT_THROW(lattice_index(RatMat{{1, 0}}, RatMat::identity(2)), RankMismatch);
  EXPECT_THROW(lattice_index(RatMat::identity(2), RatMat{{2, 0}, {0, 1}}), NotSublattice);
}

TEST(Lattice, TowerMultiplicativity) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-4, 4);
  int done = 0;
  while (done < 40) {
    IntMat p(3, 3), q(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        p(i, j) = d(rng);
        q(i, j) = d(rng);
      }
    if (determinant(p) == 0 || determinant(q) == 0) continue;
    auto C = RatMat::identity(3);
    auto B = to_rational(p);
    auto A = to_rational(q * p);
    EXPECT_EQ(lattice_index(A, C), lattice_index(A, B) * lattice_index(B, C));
    ++done;
  }
}

TEST(Lattice, IntersectSubspace) {
  RatMat n{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {Rat(1, 5), Rat(4, 5), 0}, {0, Rat(1, 5), Rat(4, 5)}};
  auto k = lattice_intersect_subspace(n, RatMat{{1, 1, 1}});
  ASSERT_EQ(k.rows(), 1u);
  EXPECT_EQ(k.row_vector(0), (std::vector<Rat>{1, 1, 1}));
}
