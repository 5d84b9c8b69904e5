#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mckay/exact/matrix.hpp"

namespace mckay::toric {

using exact::Int;
using exact::IntMat;
using exact::Rat;
using exact::RatMat;
using Point = std::vector<Rat>;

/// The element a/m of N/M.
struct HGenerator {
  std::vector<Int> a;
  Int m;
  friend bool operator==(const HGenerator&, const HGenerator&) = default;
};

/// M = Z^n inside N = M + Σ (a_j/m_j)Z.
struct LatticePair {
  std::size_t n{0};
  std::vector<HGenerator> gens;
  RatMat basis;  // rows, Hermite-reduced
  Int order{1};  // [N : M]

  bool contains(const Point& x) const;
  /// Coordinates of x in `basis`; throws std::domain_error if x ∉ N.
  std::vector<Int> coordinates(const Point& x) const;
  /// Representatives of N/M in [0,1)^n, lexicographically sorted.
  std::vector<Point> coset_representatives() const;
  /// N ∩ bΔ, lexicographically sorted.
  std::vector<Point> base_points() const;
};

/// Throws NotSpecialLinear when Σ a_i ≢ 0 mod m.
LatticePair build_lattice_pair(std::size_t n, std::vector<HGenerator> gens);

/// "a_1,…,a_n@m" items separated by ';'; empty text means no generators. Throws ParseError.
std::vector<HGenerator> parse_h_generators(std::string_view text, std::size_t n);
std::string format_h_generators(const std::vector<HGenerator>& gens);

/// Coordinate permutation: basis vector e_i is sent to e_{perm[i]}.
struct PermSymmetry {
  std::vector<std::size_t> perm;

  static PermSymmetry identity(std::size_t n);
  std::size_t n() const noexcept { return perm.size(); }
  /// Cycles in order of their smallest element, each starting there.
  std::vector<std::vector<std::size_t>> cycles() const;
  /// Cycle lengths sorted descending.
  std::vector<std::size_t> cycle_type() const;
  std::size_t order() const;
  bool is_identity() const;
  Point apply(const Point& x) const;
  PermSymmetry inverse() const;
  /// Integer matrix P with P·x = σ(x) for column vectors.
  IntMat matrix() const;
  std::string to_string() const;  // 1-based cycle notation
};

/// 1-based cycle notation "(1 2)(3 4 5)"; "" or "()" is the identity. Throws ParseError.
PermSymmetry parse_perm(std::string_view text, std::size_t n);

/// True iff σ(N) = N.
bool preserves(const LatticePair& lp, const PermSymmetry& s);

/// Rows spanning the fixed subspace L: one cycle-sum vector per cycle.
RatMat fixed_subspace(const PermSymmetry& s);

/// Rational n-vector with fractional parts taken coordinatewise.
Point frac(const Point& x);

}  // namespace mckay::toric
