#pragma once

#include <vector>

#include "mckay/toric/lattice_pair.hpp"

namespace mckay::toric {

/// |det| of the cone generators in a basis of lattice ∩ span(generators), i.e. k!·(relative volume)
/// of conv(0, generators). Returns 0 when the generators are linearly dependent.
Rat cone_normalized_volume(const std::vector<Point>& generators, const RatMat& lattice_basis);

/// Normalized volume of a maximal cone over a simplex of bΔ relative to N (1 ⇔ unimodular).
Rat maximal_cone_volume(const std::vector<Point>& vertices, const LatticePair& lp);

/// Drops the last coordinate; affine chart of the hyperplane Σx = 1.
Point chart(const Point& x);

/// Sign of the 2D orientation of (a, b, c) in chart coordinates.
int orientation(const Point& a, const Point& b, const Point& c);

/// Closed containment of x in the simplex spanned by vertices (all in bΔ, full-dimensional there).
bool in_closed_simplex(const Point& x, const std::vector<Point>& vertices);

/// Barycentric coordinates of x with respect to an affinely independent vertex list in bΔ.
std::vector<Rat> barycentric(const Point& x, const std::vector<Point>& vertices);

Point barycenter(const std::vector<Point>& pts);

bool affinely_independent(const std::vector<Point>& pts);

}  // namespace mckay::toric
