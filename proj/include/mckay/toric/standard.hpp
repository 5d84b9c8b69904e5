#pragma once

#include <vector>

#include "mckay/toric/triangulation.hpp"

namespace mckay::toric {

/// Model pair (Δ, Δ ∩ L): Δ the unit simplex of Z^n with n = Σl + Σm, g cycling the
/// coordinates of each l-block and fixing the m-block coordinates.
struct StandardPair {
  std::vector<std::size_t> ls, ms;
  std::size_t n{0};
  PermSymmetry g;
  std::vector<Point> simplex;               // origin first, then e_1..e_n
  std::vector<std::vector<Point>> pieces;   // Δ(r_1,…,r_k), origin included
  std::vector<std::size_t> piece_image;     // g(pieces[i]) = pieces[piece_image[i]]
  std::vector<Point> fixed_locus;           // vertices of Δ ∩ L other than the origin
  Rat fixed_volume{0};                      // volume of Δ ∩ L relative to Z^n ∩ span
  Rat expected_volume{0};                   // 1/(Π l) · 1/(dim Δ∩L)!
};

StandardPair standard_pair(const std::vector<std::size_t>& ls, const std::vector<std::size_t>& ms = {});

struct GStandardReport {
  bool a{false}, b{false}, c{false}, d{false};
  bool standard{false};
  std::vector<std::size_t> vertex_cycles;  // lengths, descending
  std::size_t codim{0}, expected_codim{0};
  std::vector<std::size_t> child_cycles;   // σ on the children, descending
  std::vector<Rat> child_volumes, model_child_volumes;
  Rat fixed_volume{0}, expected_fixed_volume{0};
};

/// Checks properties (a)–(d) for an invariant simplex sigma of bΔ (given by its vertices) against
/// the restriction of t to sigma. Volumes are measured relative to the lattice spanned by the
/// vertices of sigma. Throws NotInvariant if σ(sigma) ≠ sigma.
GStandardReport is_g_standard(const std::vector<Point>& sigma, const Triangulation& t, const PermSymmetry& s);

/// Every σ-invariant coarse cell that is a simplex, and every σ-invariant face of t, is g-standard.
bool is_h_adjusted(const Triangulation& t, const PermSymmetry& s);

}  // namespace mckay::toric
