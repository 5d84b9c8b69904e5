#include <gtest/gtest.h>
#include <omp.h>

#include <random>

#include "mckay/groups/fixtures.hpp"
#include "mckay/groups/group.hpp"
#include "mckay/orbifold/quintic.hpp"
#include "mckay/toric/construct.hpp"
#include "mckay/toric/lefschetz.hpp"
#include "mckay/toric/random.hpp"

using namespace mckay;
namespace fx = mckay::groups::fixtures;

namespace {

// force real thread interleaving even on a single core
class Kernels : public ::testing::Test {
 protected:
  void SetUp() override {
    saved_ = omp_get_max_threads();
    omp_set_num_threads(4);
  }
  void TearDown() override { omp_set_num_threads(saved_); }

 private:
  int saved_{1};
};

std::map<groups::Key, std::size_t> lookup(const groups::FiniteMatrixGroup& g) {
  std::map<groups::Key, std::size_t> m;
  for (std::size_t i = 0; i < g.order(); ++i) m.emplace(g.key_of(g.element(i)), i);
  return m;
}

}  // namespace

TEST_F(Kernels, MultiplicationTable) {
  for (auto gens : {fx::binary_tetrahedral_generators(), fx::binary_dihedral_generators(7), fx::cyclic_generators(30)}) {
    auto g = groups::FiniteMatrixGroup::close(gens);
    auto idx = lookup(g);
    auto a = groups::multiplication_table_serial(g.elements(), idx, g.conductor(), g.normalization());
    auto b = groups::multiplication_table_parallel(g.elements(), idx, g.conductor(), g.normalization());
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, g.table());
  }
}

TEST_F(Kernels, TwistedTable) {
  auto grp = orbifold::quintic::group_exponents();
  for (auto h : {orbifold::quintic::identity_involution(), orbifold::quintic::Involution{1, 0, 2, 3, 4},
                 orbifold::quintic::Involution{1, 0, 2, 4, 3}}) {
    auto a = orbifold::quintic::twisted_table_serial(h, grp);
    auto b = orbifold::quintic::twisted_table_parallel(h, grp);
    ASSERT_EQ(a.size(), grp.size() * grp.size());
    EXPECT_EQ(a, b);
  }
}

TEST_F(Kernels, ToricKernels) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 25; ++i) {
    auto in = toric::random_instance(rng);
    auto t = toric::adjusted_triangulation(in.lp, in.s);
    auto ra = toric::orbit_records_serial(t, in.lp, in.s);
    auto rb = toric::orbit_records_parallel(t, in.lp, in.s);
    ASSERT_EQ(ra.size(), rb.size());
    for (std::size_t k = 0; k < ra.size(); ++k) {
      EXPECT_EQ(ra[k].face, rb[k].face);
      EXPECT_EQ(ra[k].contribution, rb[k].contribution);
    }
    EXPECT_EQ(toric::count_fixed_elements_serial(in.lp, in.s), toric::count_fixed_elements_parallel(in.lp, in.s));
    EXPECT_EQ(toric::overlapping_pairs_serial(t), toric::overlapping_pairs_parallel(t));
    EXPECT_TRUE(toric::overlapping_pairs_serial(t).empty());
  }
}
