#pragma once

#include <optional>
#include <vector>

#include "mckay/exact/matrix.hpp"

namespace mckay::exact {

/// Fraction-free (Bareiss) determinant.
Int determinant(const IntMat& a);
Rat determinant(const RatMat& a);

std::size_t rank(const RatMat& a);

/// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
RatMat rref(const RatMat& a, std::vector<std::size_t>* pivots = nullptr);

/// One solution of a·x = b, or nullopt when inconsistent.
std::optional<std::vector<Rat>> solve(const RatMat& a, const std::vector<Rat>& b);

/// Throws std::domain_error when singular.
RatMat inverse(const RatMat& a);

/// Returns the integer matrix s·a where s is the least common denominator.
IntMat clear_denominators(const RatMat& a, Int* scale = nullptr);

/// Integer matrix from a rational one; throws std::domain_error if any entry is fractional.
IntMat to_integer(const RatMat& a);

/// Rows spanning the rational null space {x : a·x = 0}.
RatMat nullspace(const RatMat& a);

}  // namespace mckay::exact
