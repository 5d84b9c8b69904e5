#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mckay/exact/cyclotomic.hpp"
#include "mckay/exact/matrix.hpp"

namespace mckay::groups {

using exact::CycloInt;
using exact::Int;
using CycloMat = exact::Matrix<CycloInt>;

/// Invertible square matrix over a cyclotomic ring.
class GroupElement {
 public:
  GroupElement() = default;
  /// Throws std::invalid_argument for non-square or singular input.
  explicit GroupElement(CycloMat m);

  static GroupElement identity(std::size_t n);
  /// diag(ζ_m^{e_0}, …, ζ_m^{e_{n-1}}).
  static GroupElement diagonal(unsigned m, const std::vector<long>& exponents);
  /// Matrix sending basis vector j to basis vector perm[j].
  static GroupElement permutation(const std::vector<std::size_t>& perm);

  std::size_t dim() const noexcept { return m_.rows(); }
  const CycloMat& matrix() const noexcept { return m_; }
  const CycloInt& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  /// lcm of entry conductors.
  unsigned conductor() const;
  CycloInt determinant() const;
  bool is_diagonal() const;

  /// Entries lifted to conductor M and flattened; M must be a multiple of conductor().
  std::vector<Int> key(unsigned M) const;

  GroupElement scaled(const CycloInt& s) const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.m_ == b.m_; }

  std::string to_string() const;

 private:
  CycloMat m_;
};

CycloInt determinant(const CycloMat& m);

/// "[[e,e],[e,e]]" with entries in the cyclotomic grammar.
GroupElement parse_element(std::string_view text);

/// Elements separated by ';'.
std::vector<GroupElement> parse_generators(std::string_view text);

}  // namespace mckay::groups
