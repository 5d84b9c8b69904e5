#pragma once

#include <vector>

#include "mckay/groups/element.hpp"

namespace mckay::groups::fixtures {

/// diag(ω_n, ω_n⁻¹), generating the cyclic subgroup of the SL_2 torus.
std::vector<GroupElement> cyclic_generators(unsigned n);
/// [[0,1],[-1,0]].
GroupElement action_swap();
/// [[0,1],[1,0]].
GroupElement action_flip();

/// Binary dihedral group of order 4(r-2), r ≥ 3.
std::vector<GroupElement> binary_dihedral_generators(unsigned r);
/// diag(ω_{4(r-2)}, ω_{4(r-2)}⁻¹), normalizing the binary dihedral group.
GroupElement binary_dihedral_action(unsigned r);

/// Quaternion group of order 8 over Z[i].
std::vector<GroupElement> quaternion_generators();
/// Order-3 element permuting the three cyclic subgroups of order 4.
GroupElement triality_action();

/// Binary tetrahedral group of order 24 over Z[i].
std::vector<GroupElement> binary_tetrahedral_generators();
/// Outer involution of the binary tetrahedral group (from the binary octahedral group).
GroupElement binary_tetrahedral_action();

/// Diagonal ζ_5 exponents with zero sum; close with projective normalization to get order 125.
std::vector<GroupElement> quintic_generators();
GroupElement quintic_swap();            // x_0 <-> x_1
GroupElement quintic_swap_two_pairs();  // x_0 <-> x_1, x_3 <-> x_4

/// Order-81 diagonal group acting on the pair of cubics in P^5.
std::vector<GroupElement> lt_generators();
/// Exponents over Z_9 of the element with parameters (μ, α_1, α_4).
std::vector<long> lt_exponents(long mu, long alpha1, long alpha4);
GroupElement lt_involution();  // x_1 <-> x_2, x_4 <-> x_5

}  // namespace mckay::groups::fixtures
