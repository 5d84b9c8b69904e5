#include "mckay/toric/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mckay/exact/linalg.hpp"
#include "mckay/toric/geometry.hpp"

namespace mckay::toric {

std::vector<Point> Triangulation::simplex_points(const Simplex& s) const {
  std::vector<Point> out;
  out.reserve(s.size());
  for (auto i : s) out.push_back(vertices.at(i));
  return out;
}

std::optional<std::size_t> Triangulation::vertex_index(const Point& p) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == p) return i;
  return std::nullopt;
}

std::vector<Simplex> Triangulation::faces() const {
  std::set<Simplex> out;
  for (const auto& s : simplices) {
    const std::size_t k = s.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1u) f.push_back(s[i]);
      out.insert(std::move(f));
    }
  }
  return {out.begin(), out.end()};
}

std::optional<Simplex> apply(const Triangulation& t, const PermSymmetry& s, const Simplex& x) {
  Simplex y;
  for (auto i : x) {
    auto j = t.vertex_index(s.apply(t.vertices[i]));
    if (!j) return std::nullopt;
    y.push_back(*j);
  }
  std::sort(y.begin(), y.end());
  return y;
}

bool is_invariant(const Triangulation& t, const PermSymmetry& s) {
  std::set<Simplex> all(t.simplices.begin(), t.simplices.end());
  for (const auto& x : t.simplices) {
    auto y = apply(t, s, x);
    if (!y || !all.count(*y)) return false;
  }
  return true;
}

namespace {

// Points of a simplex in chart coordinates (dimension n-1, full-dimensional simplices).
std::vector<Point> charted(const Triangulation& t, const Simplex& s) {
  std::vector<Point> out;
  for (auto i : s) out.push_back(chart(t.vertices[i]));
  return out;
}

// Side of x relative to the hyperplane {y : w·y = c}.
int side(const Point& w, const Rat& c, const Point& x) {
  Rat v = -c;
  for (std::size_t i = 0; i < w.size(); ++i) v += w[i] * x[i];
  return sgn(v);
}

// Searches hyperplanes through d affinely independent vertices of the union for a separator.
bool interiors_disjoint(const std::vector<Point>& a, const std::vector<Point>& b) {
  const std::size_t d = a.front().size();
  std::vector<Point> pool = a;
  for (const auto& p : b)
    if (std::find(pool.begin(), pool.end(), p) == pool.end()) pool.push_back(p);
  if (d == 0) return false;
  std::vector<std::size_t> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t P = pool.size();
  if (P < d) return false;
  for (;;) {
    exact::RatMat dirs(d - 1, d);
    for (std::size_t r = 1; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) dirs(r - 1, c) = pool[idx[r]][c] - pool[idx[0]][c];
    exact::RatMat ker = exact::nullspace(dirs);
    if (ker.rows() == 1) {
      Point w = ker.row_vector(0);
      Rat c = 0;
      for (std::size_t i = 0; i < d; ++i) c += w[i] * pool[idx[0]][i];
      int sa = 0, sb = 0;
      bool ok = true;
      for (const auto& p : a) {
        int s = side(w, c, p);
        if (s == 0) continue;
        if (sa == 0) sa = s;
        else if (s != sa) ok = false;
      }
      for (const auto& p : b) {
        int s = side(w, c, p);
        if (s == 0) continue;
        if (sb == 0) sb = s;
        else if (s != sb) ok = false;
      }
      if (ok && (sa == 0 || sb == 0 || sa != sb)) return true;
    }
    // Next d-combination of pool indices.
    std::size_t k = d;
    while (k > 0 && idx[k - 1] == P - d + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return false;
}

bool pair_overlaps(const Triangulation& t, std::size_t i, std::size_t j) {
  return !interiors_disjoint(charted(t, t.simplices[i]), charted(t, t.simplices[j]));
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs_serial(const Triangulation& t) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < t.simplices.size(); ++i)
    for (std::size_t j = i + 1; j < t.simplices.size(); ++j)
      if (pair_overlaps(t, i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs_parallel(const Triangulation& t) {
  const std::size_t S = t.simplices.size();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> per_row(S);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < S; ++i)
    for (std::size_t j = i + 1; j < S; ++j)
      if (pair_overlaps(t, i, j)) per_row[i].emplace_back(i, j);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto& r : per_row) out.insert(out.end(), r.begin(), r.end());
  return out;
}

CrepancyReport verify_crepant(const Triangulation& t, const LatticePair& lp, Exec exec) {
  CrepancyReport r;
  r.simplex_count = t.simplices.size();
  r.vertices_in_lattice = true;
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    const auto& v = t.vertices[i];
    bool inside = v.size() == lp.n;
    Rat sum = 0;
    for (const auto& x : v) {
      if (x < 0) inside = false;
      sum += x;
    }
    if (!inside || sum != 1 || !lp.contains(v)) {
      r.vertices_in_lattice = false;
      r.failures.push_back("vertex " + std::to_string(i) + " is not in N ∩ bΔ");
    }
  }
  if (!r.vertices_in_lattice) return r;

  r.unimodular = true;
  bool well_formed = true;
  for (std::size_t k = 0; k < t.simplices.size(); ++k) {
    const auto& s = t.simplices[k];
    if (s.size() != lp.n) {
      well_formed = false;
      r.failures.push_back("simplex " + std::to_string(k) + " does not have n vertices");
      continue;
    }
    Rat vol = maximal_cone_volume(t.simplex_points(s), lp);
    r.volume_sum += vol;
    if (vol != 1) {
      r.unimodular = false;
      r.failures.push_back("simplex " + std::to_string(k) + " has normalized volume " + exact::to_string(vol));
    }
  }
  r.volume_sum_matches = well_formed && r.volume_sum == Rat(lp.order);
  if (!r.volume_sum_matches)
    r.failures.push_back("normalized volumes sum to " + exact::to_string(r.volume_sum) + ", expected " +
                         lp.order.get_str());
  if (!well_formed) return r;

  auto bad = exec == Exec::parallel ? overlapping_pairs_parallel(t) : overlapping_pairs_serial(t);
  r.interiors_disjoint = bad.empty();
  for (auto [i, j] : bad)
    r.failures.push_back("simplices " + std::to_string(i) + " and " + std::to_string(j) + " overlap");

  // Hanging vertices: a vertex of one simplex inside another without being its vertex.
  r.face_to_face = true;
  for (std::size_t k = 0; k < t.simplices.size() && r.face_to_face; ++k) {
    auto pts = t.simplex_points(t.simplices[k]);
    for (std::size_t v = 0; v < t.vertices.size(); ++v) {
      if (std::binary_search(t.simplices[k].begin(), t.simplices[k].end(), v)) continue;
      if (in_closed_simplex(t.vertices[v], pts)) {
        r.face_to_face = false;
        break;
      }
    }
  }
  r.ok = r.vertices_in_lattice && r.unimodular && r.volume_sum_matches && r.interiors_disjoint;
  return r;
}

void canonicalize(Triangulation& t) {
  std::vector<std::size_t> order(t.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return exact::lex_less(t.vertices[a], t.vertices[b]); });
  std::vector<std::size_t> remap(order.size());
  std::vector<Point> verts;
  for (std::size_t k = 0; k < order.size(); ++k) {
    remap[order[k]] = k;
    verts.push_back(t.vertices[order[k]]);
  }
  t.vertices = std::move(verts);
  for (auto& s : t.simplices) {
    for (auto& i : s) i = remap[i];
    std::sort(s.begin(), s.end());
  }
  std::vector<std::size_t> sorder(t.simplices.size());
  std::iota(sorder.begin(), sorder.end(), 0);
  std::sort(sorder.begin(), sorder.end(), [&](std::size_t a, std::size_t b) { return t.simplices[a] < t.simplices[b]; });
  std::vector<Simplex> simp;
  for (auto k : sorder) simp.push_back(t.simplices[k]);
  t.simplices = std::move(simp);
  if (t.coarse) {
    for (auto& c : t.coarse->cells)
      for (auto& i : c) i = remap[i];
    std::vector<std::size_t> parent;
    for (auto k : sorder) parent.push_back(t.coarse->parent[k]);
    t.coarse->parent = std::move(parent);
  }
}

}  // namespace mckay::toric
