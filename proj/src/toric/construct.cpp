#include "mckay/toric/construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "mckay/errors.hpp"
#include "mckay/toric/geometry.hpp"
#include "mckay/toric/standard.hpp"

namespace mckay::toric {

namespace {

using Tri = std::array<std::size_t, 3>;

Rat signed_area2(const std::vector<Point>& poly) {
  Rat a = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Point p = chart(poly[i]);
    Point q = chart(poly[(i + 1) % poly.size()]);
    a += p[0] * q[1] - p[1] * q[0];
  }
  return a;
}

// Removes repeated and collinear consecutive corners.
std::vector<Point> simplify(std::vector<Point> poly) {
  bool changed = true;
  while (changed && poly.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      Point a = chart(poly[(i + poly.size() - 1) % poly.size()]);
      Point b = chart(poly[i]);
      Point c = chart(poly[(i + 1) % poly.size()]);
      if (a == b || orientation(a, b, c) == 0) {
        poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (poly.size() < 3) poly.clear();
  return poly;
}

bool in_closed_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
  return orientation(a, b, p) >= 0 && orientation(b, c, p) >= 0 && orientation(c, a, p) >= 0;
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (orientation(a, b, p) != 0) return false;
  for (int k = 0; k < 2; ++k)
    if (p[k] < std::min(a[k], b[k]) || p[k] > std::max(a[k], b[k])) return false;
  return true;
}

bool segments_meet(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orientation(a, b, c), o2 = orientation(a, b, d), o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

bool is_simple(const std::vector<Point>& poly) {
  const std::size_t k = poly.size();
  if (k < 3) return false;
  std::vector<Point> c;
  for (const auto& p : poly) c.push_back(chart(p));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (j == i + 1 || (i == 0 && j == k - 1)) continue;
      if (segments_meet(c[i], c[(i + 1) % k], c[j], c[(j + 1) % k])) return false;
    }
  return true;
}

}  // namespace

std::vector<std::array<Point, 3>> triangulate_lattice_polygon(const std::vector<Point>& polygon,
                                                              const std::vector<Point>& lattice,
                                                              InsertionOrder order) {
  std::vector<Point> V = simplify(polygon);
  if (V.empty()) return {};
  if (signed_area2(V) < 0) std::reverse(V.begin(), V.end());
  std::vector<Point> C;
  for (const auto& p : V) C.push_back(chart(p));

  std::vector<std::size_t> ring(V.size());
  std::iota(ring.begin(), ring.end(), 0);
  std::vector<Tri> tris;
  while (ring.size() > 3) {
    bool clipped = false;
    for (std::size_t k = 0; k < ring.size() && !clipped; ++k) {
      std::size_t a = ring[(k + ring.size() - 1) % ring.size()], b = ring[k], c = ring[(k + 1) % ring.size()];
      if (orientation(C[a], C[b], C[c]) <= 0) continue;
      bool blocked = false;
      for (auto o : ring) {
        if (o == a || o == b || o == c) continue;
        if (in_closed_triangle(C[a], C[b], C[c], C[o])) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      tris.push_back({a, b, c});
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(k));
      clipped = true;
    }
    if (!clipped) throw DegenerateOrbit("polygon is not simple; ear clipping failed");
  }
  tris.push_back({ring[0], ring[1], ring[2]});

  std::vector<Point> todo;
  for (const auto& p : lattice) {
    if (std::find(V.begin(), V.end(), p) != V.end()) continue;
    Point cp = chart(p);
    for (const auto& t : tris)
      if (in_closed_triangle(C[t[0]], C[t[1]], C[t[2]], cp)) {
        todo.push_back(p);
        break;
      }
  }
  std::sort(todo.begin(), todo.end(), exact::lex_less);
  if (order == InsertionOrder::reverse_lex) std::reverse(todo.begin(), todo.end());

  for (const auto& p : todo) {
    const Point cp = chart(p);
    const std::size_t pi = V.size();
    V.push_back(p);
    C.push_back(cp);
    for (std::size_t t = 0; t < tris.size(); ++t) {
      auto [a, b, c] = tris[t];
      int o[3] = {orientation(C[b], C[c], cp), orientation(C[c], C[a], cp), orientation(C[a], C[b], cp)};
      if (o[0] < 0 || o[1] < 0 || o[2] < 0) continue;
      const int zeros = (o[0] == 0) + (o[1] == 0) + (o[2] == 0);
      if (zeros == 0) {
        tris[t] = {a, b, pi};
        tris.push_back({b, c, pi});
        tris.push_back({c, a, pi});
      } else if (zeros == 1) {
        std::size_t u, v, w;  // p lies on edge (u, v), opposite w
        if (o[0] == 0) u = b, v = c, w = a;
        else if (o[1] == 0) u = c, v = a, w = b;
        else u = a, v = b, w = c;
        tris[t] = {u, pi, w};
        tris.push_back({pi, v, w});
        const std::size_t existing = tris.size();
        for (std::size_t s = 0; s < existing; ++s) {
          auto q = tris[s];
          for (int r = 0; r < 3; ++r) {
            if (q[r] == v && q[(r + 1) % 3] == u) {
              const std::size_t x = q[(r + 2) % 3];
              tris[s] = {v, pi, x};
              tris.push_back({pi, u, x});
              s = existing;
              break;
            }
          }
        }
      } else {
        throw std::logic_error("insertion point coincides with a vertex");
      }
      break;
    }
  }

  std::vector<std::array<Point, 3>> out;
  out.reserve(tris.size());
  for (const auto& t : tris) out.push_back({V[t[0]], V[t[1]], V[t[2]]});
  return out;
}

namespace {

Point unit(std::size_t n, std::size_t i) {
  Point e(n, Rat(0));
  e[i] = 1;
  return e;
}

Rat dist2(const Point& a, const Point& b) {
  Rat d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] - b[i]) * (a[i] - b[i]);
  return d;
}

Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

struct Builder {
  Triangulation t;
  std::map<Point, std::size_t, decltype(&exact::lex_less)> index{&exact::lex_less};

  explicit Builder(std::size_t n) {
    t.n = n;
    t.coarse.emplace();
  }

  std::size_t vertex(const Point& p) {
    auto it = index.find(p);
    if (it != index.end()) return it->second;
    index.emplace(p, t.vertices.size());
    t.vertices.push_back(p);
    return t.vertices.size() - 1;
  }

  std::size_t cell(const std::vector<Point>& pts) {
    std::vector<std::size_t> c;
    for (const auto& p : pts) c.push_back(vertex(p));
    t.coarse->cells.push_back(std::move(c));
    return t.coarse->cells.size() - 1;
  }

  void simplex(const std::vector<Point>& pts, std::size_t parent) {
    Simplex s;
    for (const auto& p : pts) s.push_back(vertex(p));
    std::sort(s.begin(), s.end());
    t.simplices.push_back(std::move(s));
    t.coarse->parent.push_back(parent);
  }

  Triangulation finish() {
    canonicalize(t);
    return std::move(t);
  }
};

// Adds a cell with its triangles, then the images under s, s², … up to s^(k-1).
void add_orbit(Builder& b, const PermSymmetry& s, std::size_t k, std::vector<Point> cell,
               std::vector<std::array<Point, 3>> tris) {
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t c = b.cell(cell);
    for (const auto& t : tris) b.simplex({t[0], t[1], t[2]}, c);
    for (auto& p : cell) p = s.apply(p);
    for (auto& t : tris)
      for (auto& p : t) p = s.apply(p);
  }
}

Triangulation construct_2d(const LatticePair& lp) {
  Builder b(2);
  auto pts = lp.base_points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const std::size_t c = b.cell({pts[i], pts[i + 1]});
    b.simplex({pts[i], pts[i + 1]}, c);
  }
  return b.finish();
}

Triangulation order_two(const LatticePair& lp, const PermSymmetry& s, InsertionOrder order,
                        const std::vector<Point>& pts) {
  const std::size_t n = 3;
  Builder b(n);
  std::size_t f = 0, i = 0, j = 0;
  for (const auto& c : s.cycles()) {
    if (c.size() == 1) f = c[0];
    else i = c[0], j = c[1];
  }
  const Point P = unit(n, f), Ei = unit(n, i);
  Point mid(n, Rat(0));
  mid[i] = mid[j] = Rat(1, 2);
  if (lp.contains(mid)) {
    std::vector<Point> half{Ei, mid, P};
    add_orbit(b, s, 2, half, triangulate_lattice_polygon(half, pts, order));
    return b.finish();
  }
  // Q: fixed lattice point closest to the side opposite P; A: lattice point of that side
  // closest to its midpoint, on the e_i half.
  std::optional<Point> Q, A;
  for (const auto& p : pts) {
    if (p[i] == p[j] && (!Q || p[f] < (*Q)[f])) Q = p;
    if (p[f] == 0 && p[i] > p[j] && (!A || p[i] < (*A)[i])) A = p;
  }
  if (!Q || !A) throw DegenerateOrbit("no lattice points for the straddling triangle");
  std::vector<Point> core{*Q, *A, s.apply(*A)};
  if (maximal_cone_volume(core, lp) != 1) throw DegenerateOrbit("straddling triangle is not unimodular");
  b.simplex(core, b.cell(core));
  std::vector<Point> half{Ei, *A, *Q, P};
  add_orbit(b, s, 2, half, triangulate_lattice_polygon(half, pts, order));
  return b.finish();
}

Triangulation order_three(const LatticePair& lp, const PermSymmetry& s, InsertionOrder order,
                          const std::vector<Point>& pts) {
  const std::size_t n = 3;
  Builder b(n);
  const Point center(n, Rat(1, 3));
  if (lp.contains(center)) {
    std::vector<Point> sector{center, unit(n, 0), s.apply(unit(n, 0))};
    add_orbit(b, s, 3, sector, triangulate_lattice_polygon(sector, pts, order));
    return b.finish();
  }
  // Invariant core: orbit of the lattice point nearest the center (lexicographic tie-break).
  std::optional<Point> p;
  for (const auto& q : pts)
    if (!p || dist2(q, center) < dist2(*p, center)) p = q;
  std::vector<Point> core{*p, s.apply(*p), s.apply(s.apply(*p))};
  if (maximal_cone_volume(core, lp) != 1) throw DegenerateOrbit("invariant core triangle is not unimodular");
  b.simplex(core, b.cell(core));

  const Rat total = abs_rat(signed_area2({unit(n, 0), unit(n, 1), unit(n, 2)}));
  const Rat core_area = abs_rat(signed_area2(core));
  if (core_area == total) return b.finish();

  // Sector between the core edge [p, σp] and a boundary edge [e_k, σe_k].
  std::vector<std::size_t> ks{0, 1, 2};
  std::stable_sort(ks.begin(), ks.end(), [&](std::size_t x, std::size_t y) { return (*p)[x] > (*p)[y]; });
  for (auto k : ks) {
    const Point ek = unit(n, k);
    std::vector<Point> sector = simplify({*p, ek, s.apply(ek), s.apply(*p)});
    if (!is_simple(sector)) continue;
    if (core_area + 3 * abs_rat(signed_area2(sector)) != total) continue;
    add_orbit(b, s, 3, sector, triangulate_lattice_polygon(sector, pts, order));
    return b.finish();
  }
  throw DegenerateOrbit("no sector polygon tiles the complement of the invariant core");
}

}  // namespace

Triangulation adjusted_triangulation(const LatticePair& lp, const PermSymmetry& s, InsertionOrder order) {
  if (s.n() != lp.n) throw std::invalid_argument("symmetry and lattice pair dimensions differ");
  if (lp.n >= 4) throw UnsupportedDimension("construction is available for n = 2 and n = 3 only");
  if (!preserves(lp, s)) throw NotInvariant("the permutation does not preserve N");
  if (lp.n == 1) {
    Builder b(1);
    b.simplex({unit(1, 0)}, b.cell({unit(1, 0)}));
    return b.finish();
  }
  if (lp.n == 2) return construct_2d(lp);
  const auto pts = lp.base_points();
  switch (s.order()) {
    case 1: {
      Builder b(3);
      std::vector<Point> poly{unit(3, 0), unit(3, 1), unit(3, 2)};
      add_orbit(b, s, 1, poly, triangulate_lattice_polygon(poly, pts, order));
      return b.finish();
    }
    case 2:
      return order_two(lp, s, order, pts);
    case 3:
      return order_three(lp, s, order, pts);
    default:
      throw UnsupportedDimension("symmetry order " + std::to_string(s.order()) + " is not supported");
  }
}

std::optional<Triangulation> flip_orbit(const Triangulation& t, const PermSymmetry& s, std::size_t skip) {
  if (t.n != 3) return std::nullopt;
  std::map<Simplex, std::vector<std::size_t>> edge_tris;
  for (std::size_t i = 0; i < t.simplices.size(); ++i) {
    const auto& m = t.simplices[i];
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b) edge_tris[{m[a], m[b]}].push_back(i);
  }
  auto side = [&](std::size_t a, std::size_t b, std::size_t c) {
    return orientation(chart(t.vertices[a]), chart(t.vertices[b]), chart(t.vertices[c]));
  };

  std::set<Simplex> seen;
  for (const auto& [edge, tris] : edge_tris) {
    if (tris.size() != 2 || seen.count(edge)) continue;
    std::vector<Simplex> orbit;
    Simplex cur = edge;
    bool ok = true;
    do {
      orbit.push_back(cur);
      seen.insert(cur);
      auto img = apply(t, s, cur);
      if (!img) {
        ok = false;
        break;
      }
      cur = *img;
    } while (cur != edge);

    Triangulation out = t;
    std::set<std::size_t> used;
    for (const auto& f : orbit) {
      if (!ok) break;
      auto it = edge_tris.find(f);
      if (it == edge_tris.end() || it->second.size() != 2) {
        ok = false;
        break;
      }
      const std::size_t i = it->second[0], j = it->second[1];
      if (!used.insert(i).second || !used.insert(j).second) ok = false;
      if (t.coarse && t.coarse->parent[i] != t.coarse->parent[j]) ok = false;
      if (!ok) break;
      auto apex = [&](std::size_t k) {
        for (auto v : t.simplices[k])
          if (v != f[0] && v != f[1]) return v;
        throw std::logic_error("degenerate simplex");
      };
      const std::size_t u = apex(i), v = apex(j);
      if (side(f[0], f[1], u) * side(f[0], f[1], v) >= 0 || side(u, v, f[0]) * side(u, v, f[1]) >= 0) {
        ok = false;
        break;
      }
      Simplex x{f[0], u, v}, y{f[1], u, v};
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      out.simplices[i] = x;
      out.simplices[j] = y;
    }
    if (!ok) continue;
    canonicalize(out);
    if (!is_invariant(out, s) || !is_h_adjusted(out, s)) continue;
    if (skip-- == 0) return out;
  }
  return std::nullopt;
}

}  // namespace mckay::toric
