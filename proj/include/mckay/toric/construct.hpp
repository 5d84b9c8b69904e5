#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mckay/toric/triangulation.hpp"

namespace mckay::toric {

enum class InsertionOrder { lex, reverse_lex };

/// Triangulates a simple lattice polygon (chart of bΔ, n = 3) so that every point of `lattice`
/// inside the closed polygon becomes a vertex: ear clipping on the corners, then insertion of the
/// remaining points in the given order. Every resulting triangle is empty, hence unimodular.
std::vector<std::array<Point, 3>> triangulate_lattice_polygon(const std::vector<Point>& polygon,
                                                              const std::vector<Point>& lattice,
                                                              InsertionOrder order = InsertionOrder::lex);

/// σ-invariant unimodular triangulation of bΔ for n ∈ {2, 3} and σ of order ≤ 3, with the
/// coarse subdivision it refines. Throws UnsupportedDimension for n ≥ 4 and DegenerateOrbit
/// if no valid invariant core exists.
Triangulation adjusted_triangulation(const LatticePair& lp, const PermSymmetry& s,
                                     InsertionOrder order = InsertionOrder::lex);

/// Flips one σ-orbit of interior edges, each the diagonal of a strictly convex quadrilateral inside
/// a single coarse cell, keeping only results that stay invariant and h-adjusted. `skip` selects
/// among the admissible orbits in edge order. nullopt when fewer than skip + 1 exist (always for n = 2).
std::optional<Triangulation> flip_orbit(const Triangulation& t, const PermSymmetry& s, std::size_t skip = 0);

}  // namespace mckay::toric
