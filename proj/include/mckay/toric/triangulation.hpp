#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mckay/exec.hpp"
#include "mckay/toric/lattice_pair.hpp"

namespace mckay::toric {

using Simplex = std::vector<std::size_t>;  // sorted vertex indices

/// The coarser subdivision a triangulation refines, with one parent cell per fine simplex.
struct CoarseCertificate {
  std::vector<std::vector<std::size_t>> cells;  // vertex indices; 2D cells in cyclic order
  std::vector<std::size_t> parent;              // fine simplex -> cell
  friend bool operator==(const CoarseCertificate&, const CoarseCertificate&) = default;
};

struct Triangulation {
  std::size_t n{0};
  std::vector<Point> vertices;
  std::vector<Simplex> simplices;  // maximal, sorted
  std::optional<CoarseCertificate> coarse;

  std::vector<Point> simplex_points(const Simplex& s) const;
  std::optional<std::size_t> vertex_index(const Point& p) const;
  /// All nonempty faces of maximal simplices, deduplicated, sorted.
  std::vector<Simplex> faces() const;
};

/// Image of a vertex-index simplex under σ; nullopt if a vertex image is not a vertex.
std::optional<Simplex> apply(const Triangulation& t, const PermSymmetry& s, const Simplex& x);

/// σ maps the set of maximal simplices onto itself.
bool is_invariant(const Triangulation& t, const PermSymmetry& s);

struct CrepancyReport {
  bool ok{false};
  bool vertices_in_lattice{false};
  bool volume_sum_matches{false};
  bool interiors_disjoint{false};
  bool unimodular{false};
  bool face_to_face{false};  // informational
  Rat volume_sum{0};
  std::size_t simplex_count{0};
  std::vector<std::string> failures;
};

CrepancyReport verify_crepant(const Triangulation& t, const LatticePair& lp, Exec exec = Exec::parallel);

/// Pairwise interior-disjointness check; returns offending index pairs.
std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs_serial(const Triangulation& t);
std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs_parallel(const Triangulation& t);

/// Sorts vertices lexicographically, reindexes simplices and cells, and sorts the simplex list.
void canonicalize(Triangulation& t);

}  // namespace mckay::toric
