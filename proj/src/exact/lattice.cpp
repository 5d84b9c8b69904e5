#include "mckay/exact/lattice.hpp"

#include "mckay/errors.hpp"
#include "mckay/exact/linalg.hpp"
#include "mckay/exact/smith.hpp"

namespace mckay::exact {

RatMat lattice_basis(const RatMat& gens) {
  Int scale;
  IntMat scaled = clear_denominators(gens, &scale);
  IntMat h = hermite_normal_form(scaled);
  RatMat out(h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = Rat(h(i, j)) / scale;
  return out;
}

std::optional<std::vector<Int>> lattice_coordinates(const RatMat& basis, const std::vector<Rat>& v) {
  auto x = solve(basis.transpose(), v);
  if (!x) return std::nullopt;
  std::vector<Int> out;
  out.reserve(x->size());
  for (const auto& c : *x) {
    if (!is_integer(c)) return std::nullopt;
    out.push_back(c.get_num());
  }
  return out;
}

bool lattice_contains(const RatMat& basis, const std::vector<Rat>& v) {
  return lattice_coordinates(basis, v).has_value();
}

Int lattice_index(const RatMat& sub_gens, const RatMat& super_gens) {
  if (sub_gens.cols() != super_gens.cols() && sub_gens.rows() && super_gens.rows())
    throw RankMismatch("ambient dimensions differ");
  RatMat sub = lattice_basis(sub_gens);
  RatMat sup = lattice_basis(super_gens);
  if (sub.rows() != sup.rows())
    throw RankMismatch("sublattice rank " + std::to_string(sub.rows()) + " vs superlattice rank " +
                       std::to_string(sup.rows()));
  const std::size_t r = sub.rows();
  if (r == 0) return Int(1);
  IntMat coords(r, r);
  RatMat supT = sup.transpose();
  for (std::size_t i = 0; i < r; ++i) {
    auto x = solve(supT, sub.row_vector(i));
    if (!x) throw RankMismatch("sublattice does not lie in the span of the superlattice");
    for (std::size_t j = 0; j < r; ++j) {
      if (!is_integer((*x)[j])) throw NotSublattice("generator " + std::to_string(i) + " not in superlattice");
      coords(i, j) = (*x)[j].get_num();
    }
  }
  return abs(determinant(coords));
}

RatMat lattice_intersect_subspace(const RatMat& lattice_gens, const RatMat& subspace) {
  RatMat B = lattice_basis(lattice_gens);
  const std::size_t n = lattice_gens.cols();
  if (B.rows() == 0) return RatMat(0, n);
  RatMat K = nullspace(subspace);  // rows y with W·y = 0
  if (K.rows() == 0) return B;
  IntMat A = clear_denominators(B * K.transpose());
  IntMat ker = integer_left_kernel(A);
  if (ker.rows() == 0) return RatMat(0, n);
  return lattice_basis(to_rational(ker) * B);
}

}  // namespace mckay::exact
