#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mckay/exec.hpp"

namespace mckay::orbifold::quintic {

/// Exponents of diag(ω^{α_0}, …, ω^{α_4}), ω = ζ_5, scalar-normalized so α_0 = 0.
using Exponents = std::array<int, 5>;
/// Subset of the coordinates x_0..x_4.
using Mask = std::uint32_t;

constexpr Mask all_coordinates = 0x1f;

/// The 125 exponent vectors with α_0 = 0 and Σα ≡ 0 mod 5, lexicographic.
std::vector<Exponents> group_exponents();

/// e of a smooth quintic hypersurface in P^{k-1}; 0 for k ≤ 1.
long fermat_euler(unsigned k);

/// Coordinate sets on which α is constant (eigenspaces of g), in order of first coordinate.
std::vector<Mask> eigen_classes(const Exponents& a);

/// dim X^g for the quintic threefold X; -1 if empty.
int fixed_dimension(const Exponents& a);

/// Coordinate permutation of order ≤ 2.
using Involution = std::array<int, 5>;

/// h·g·h⁻¹ for the permutation matrix h, renormalized.
Exponents conjugate(const Involution& h, const Exponents& a);

/// e(X^{g} ∩ Fix(h·g')) where Fix is taken in P^4 on the linear lift h·g'. With h the
/// identity this is e(X^g ∩ X^{g'}).
long twisted_euler(const Involution& h, const Exponents& g, const Exponents& gp);

/// e of the part of X with coordinate support exactly J, intersected with Fix(h·g').
long open_twisted_euler(const Involution& h, Mask J, const Exponents& gp);
/// e of the part of X with coordinate support exactly J.
long open_euler(Mask J);

/// Row-major |G|×|G| tables of twisted_euler(h, g_i, g_j).
std::vector<long> twisted_table_serial(const Involution& h, const std::vector<Exponents>& group);
std::vector<long> twisted_table_parallel(const Involution& h, const std::vector<Exponents>& group);
std::vector<long> twisted_table(const Involution& h, const std::vector<Exponents>& group, Exec exec);

Involution identity_involution();

}  // namespace mckay::orbifold::quintic
