#include "mckay/toric/geometry.hpp"

#include <stdexcept>

#include "mckay/exact/lattice.hpp"
#include "mckay/exact/linalg.hpp"

namespace mckay::toric {

Rat cone_normalized_volume(const std::vector<Point>& generators, const RatMat& lattice_basis) {
  if (generators.empty()) return Rat(1);
  RatMat span = RatMat::from_rows(generators);
  if (exact::rank(span) < generators.size()) return Rat(0);
  RatMat sub = exact::lattice_intersect_subspace(lattice_basis, span);
  RatMat subT = sub.transpose();
  RatMat coords(generators.size(), sub.rows());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    auto x = exact::solve(subT, generators[i]);
    if (!x) throw std::logic_error("generator outside its own span");
    for (std::size_t j = 0; j < sub.rows(); ++j) coords(i, j) = (*x)[j];
  }
  Rat d = exact::determinant(coords);
  return d < 0 ? Rat(-d) : d;
}

Rat maximal_cone_volume(const std::vector<Point>& vertices, const LatticePair& lp) {
  Rat d = exact::determinant(RatMat::from_rows(vertices)) * Rat(lp.order);
  return d < 0 ? Rat(-d) : d;
}

Point chart(const Point& x) { return Point(x.begin(), x.end() - 1); }

int orientation(const Point& a, const Point& b, const Point& c) {
  Rat v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  return sgn(v);
}

std::vector<Rat> barycentric(const Point& x, const std::vector<Point>& vertices) {
  // Solve Σ λ_i v_i = x; Σ λ_i = 1 follows from all points lying on Σx = 1.
  RatMat A = RatMat::from_rows(vertices).transpose();
  auto sol = exact::solve(A, x);
  if (!sol) throw std::domain_error("point outside the affine span of the simplex");
  return *sol;
}

bool in_closed_simplex(const Point& x, const std::vector<Point>& vertices) {
  auto sol = exact::solve(RatMat::from_rows(vertices).transpose(), x);
  if (!sol) return false;
  for (const auto& l : *sol)
    if (l < 0) return false;
  return true;
}

Point barycenter(const std::vector<Point>& pts) {
  Point b(pts.front().size(), Rat(0));
  for (const auto& p : pts)
    for (std::size_t i = 0; i < p.size(); ++i) b[i] += p[i];
  for (auto& v : b) v /= static_cast<long>(pts.size());
  return b;
}

bool affinely_independent(const std::vector<Point>& pts) {
  if (pts.size() <= 1) return true;
  RatMat d(pts.size() - 1, pts.front().size());
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts[i].size(); ++j) d(i - 1, j) = pts[i][j] - pts[0][j];
  return exact::rank(d) == pts.size() - 1;
}

}  // namespace mckay::toric
