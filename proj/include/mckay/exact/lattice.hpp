#pragma once

#include <optional>
#include <vector>

#include "mckay/exact/matrix.hpp"

namespace mckay::exact {

/// Hermite-reduced basis (rows) of the lattice generated by the rational rows of gens.
RatMat lattice_basis(const RatMat& gens);

/// [super : sub] for lattices given by generating rows.
/// Throws RankMismatch when the spans differ in dimension and NotSublattice when sub ⊄ super.
Int lattice_index(const RatMat& sub_gens, const RatMat& super_gens);

/// Basis of lattice ∩ W, where W is spanned by the rational rows of subspace.
RatMat lattice_intersect_subspace(const RatMat& lattice_gens, const RatMat& subspace);

/// Integer coordinates of v in the given lattice basis, if v lies in the lattice.
std::optional<std::vector<Int>> lattice_coordinates(const RatMat& basis, const std::vector<Rat>& v);

bool lattice_contains(const RatMat& basis, const std::vector<Rat>& v);

}  // namespace mckay::exact
