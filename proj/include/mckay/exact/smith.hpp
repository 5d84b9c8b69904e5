#pragma once

#include <vector>

#include "mckay/exact/matrix.hpp"

namespace mckay::exact {

struct SmithForm {
  IntMat U;  // rows × rows, unimodular
  IntMat D;  // diagonal, d_i | d_{i+1}, d_i ≥ 0
  IntMat V;  // cols × cols, unimodular
  std::size_t rank{0};
};

/// U·a·V = D. Pivot: smallest nonzero |entry|, ties broken row-major.
SmithForm smith_normal_form(const IntMat& a);

/// Nonzero diagonal entries of the Smith form.
std::vector<Int> invariant_factors(const IntMat& a);

/// Row-style Hermite normal form of the lattice spanned by the rows of a; zero rows dropped.
IntMat hermite_normal_form(const IntMat& a);

/// Basis (as rows) of {c ∈ Z^rows : c·a = 0}.
IntMat integer_left_kernel(const IntMat& a);

}  // namespace mckay::exact
