#include "mckay/groups/fixtures.hpp"

#include <stdexcept>

namespace mckay::groups::fixtures {

namespace {

CycloInt z(unsigned m, long k) { return CycloInt::root_of_unity(m, k); }

GroupElement mat2(CycloInt a, CycloInt b, CycloInt c, CycloInt d) {
  CycloMat m(2, 2);
  m(0, 0) = std::move(a);
  m(0, 1) = std::move(b);
  m(1, 0) = std::move(c);
  m(1, 1) = std::move(d);
  return GroupElement(std::move(m));
}

const CycloInt I = z(4, 1);
const CycloInt ONE{1};
const CycloInt ZERO{0};

}  // namespace

std::vector<GroupElement> cyclic_generators(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclic order must be positive");
  return {GroupElement::diagonal(n, {1, -1})};
}

GroupElement action_swap() { return mat2(ZERO, ONE, -ONE, ZERO); }
GroupElement action_flip() { return mat2(ZERO, ONE, ONE, ZERO); }

std::vector<GroupElement> binary_dihedral_generators(unsigned r) {
  if (r < 3) throw std::invalid_argument("binary dihedral index r must be at least 3");
  return {GroupElement::diagonal(2 * (r - 2), {1, -1}), action_swap()};
}

GroupElement binary_dihedral_action(unsigned r) {
  if (r < 3) throw std::invalid_argument("binary dihedral index r must be at least 3");
  return GroupElement::diagonal(4 * (r - 2), {1, -1});
}

std::vector<GroupElement> quaternion_generators() {
  return {mat2(-I, -ONE - I, ZERO, I), mat2(-ONE, -ONE + I, ONE + I, ONE)};
}

GroupElement triality_action() { return mat2(I, ONE, -I, -ONE - I); }

std::vector<GroupElement> binary_tetrahedral_generators() {
  auto g = quaternion_generators();
  g.push_back(triality_action());
  return g;
}

GroupElement binary_tetrahedral_action() { return mat2(ONE, -I, ZERO, I); }

std::vector<GroupElement> quintic_generators() {
  return {GroupElement::diagonal(5, {1, 4, 0, 0, 0}), GroupElement::diagonal(5, {1, 0, 4, 0, 0}),
          GroupElement::diagonal(5, {1, 0, 0, 4, 0}), GroupElement::diagonal(5, {1, 0, 0, 0, 4})};
}

GroupElement quintic_swap() { return GroupElement::permutation({1, 0, 2, 3, 4}); }
GroupElement quintic_swap_two_pairs() { return GroupElement::permutation({1, 0, 2, 4, 3}); }

std::vector<long> lt_exponents(long mu, long alpha1, long alpha4) {
  auto mod = [](long a, long m) { return ((a % m) + m) % m; };
  const long alpha2 = mod(mu - alpha1, 3);
  const long alpha5 = mod(mu - alpha4, 3);
  return {mod(3 * alpha1 + mu, 9), mod(3 * alpha2 + mu, 9), mod(mu, 9),
          mod(3 * alpha4 - mu, 9), mod(3 * alpha5 - mu, 9), mod(-mu, 9)};
}

std::vector<GroupElement> lt_generators() {
  return {GroupElement::diagonal(9, lt_exponents(1, 0, 0)), GroupElement::diagonal(9, {3, 6, 0, 0, 0, 0}),
          GroupElement::diagonal(9, {0, 0, 0, 3, 6, 0})};
}

GroupElement lt_involution() { return GroupElement::permutation({1, 0, 2, 4, 3, 5}); }

}  // namespace mckay::groups::fixtures
