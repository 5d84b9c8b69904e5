#include "mckay/toric/standard.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mckay/errors.hpp"
#include "mckay/exact/linalg.hpp"
#include "mckay/toric/geometry.hpp"

namespace mckay::toric {

namespace {

Rat factorial(std::size_t k) {
  Int f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
  return Rat(f);
}

std::vector<std::size_t> cycle_lengths(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Children in the model of the given vertex cycle type: conv(b_1..b_k, e) for each vertex e
// lying in a cycle of length > 1. Volumes relative to Z^n.
std::vector<Rat> model_child_volumes(const std::vector<std::size_t>& cycles) {
  const std::size_t n = std::accumulate(cycles.begin(), cycles.end(), std::size_t{0});
  std::vector<Point> bary;
  std::size_t off = 0;
  for (auto l : cycles) {
    Point b(n, Rat(0));
    for (std::size_t j = 0; j < l; ++j) b[off + j] = Rat(1, static_cast<long>(l));
    bary.push_back(std::move(b));
    off += l;
  }
  RatMat Zn = RatMat::identity(n);
  std::vector<Rat> vols;
  off = 0;
  for (auto l : cycles) {
    for (std::size_t j = 0; j < l && l > 1; ++j) {
      auto gens = bary;
      Point e(n, Rat(0));
      e[off + j] = 1;
      gens.push_back(std::move(e));
      vols.push_back(cone_normalized_volume(gens, Zn));
    }
    off += l;
  }
  std::sort(vols.begin(), vols.end());
  return vols;
}

}  // namespace

StandardPair standard_pair(const std::vector<std::size_t>& ls, const std::vector<std::size_t>& ms) {
  StandardPair sp;
  sp.ls = ls;
  sp.ms = ms;
  for (auto l : ls)
    if (l == 0) throw std::invalid_argument("cycle lengths must be positive");
  for (auto m : ms)
    if (m == 0) throw std::invalid_argument("cycle lengths must be positive");
  sp.n = std::accumulate(ls.begin(), ls.end(), std::size_t{0}) + std::accumulate(ms.begin(), ms.end(), std::size_t{0});
  const std::size_t n = sp.n;
  sp.g = PermSymmetry::identity(n);
  std::vector<std::size_t> start;
  std::size_t off = 0;
  for (auto l : ls) {
    start.push_back(off);
    for (std::size_t j = 0; j < l; ++j) sp.g.perm[off + j] = off + (j + 1) % l;
    off += l;
  }
  const std::size_t mstart = off;

  sp.simplex.emplace_back(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    Point e(n, Rat(0));
    e[i] = 1;
    sp.simplex.push_back(std::move(e));
  }
  for (std::size_t b = 0; b < ls.size(); ++b) {
    Point bar(n, Rat(0));
    for (std::size_t j = 0; j < ls[b]; ++j) bar[start[b] + j] = Rat(1, static_cast<long>(ls[b]));
    sp.fixed_locus.push_back(std::move(bar));
  }
  for (std::size_t i = mstart; i < n; ++i) sp.fixed_locus.push_back(sp.simplex[i + 1]);

  // Δ(r): drop e^i_{r_i} from each l-block, add the origin and the fixed-locus vertices.
  std::vector<std::size_t> r(ls.size(), 0);
  std::vector<std::vector<std::size_t>> keys;
  for (;;) {
    std::vector<Point> piece{sp.simplex[0]};
    for (std::size_t b = 0; b < ls.size(); ++b)
      for (std::size_t j = 0; j < ls[b]; ++j)
        if (j != r[b] || ls[b] == 1) piece.push_back(sp.simplex[start[b] + j + 1]);
    for (std::size_t b = 0; b < ls.size(); ++b)
      if (ls[b] > 1) piece.push_back(sp.fixed_locus[b]);
    for (std::size_t i = mstart; i < n; ++i) piece.push_back(sp.simplex[i + 1]);
    sp.pieces.push_back(std::move(piece));
    keys.push_back(r);
    std::size_t b = 0;
    while (b < ls.size() && ++r[b] == ls[b]) r[b++] = 0;
    if (b == ls.size()) break;
  }
  // g sends e_{r} to e_{r+1}, so the dropped index advances by one in each block.
  for (const auto& key : keys) {
    std::vector<std::size_t> next = key;
    for (std::size_t b = 0; b < ls.size(); ++b) next[b] = (key[b] + 1) % ls[b];
    sp.piece_image.push_back(static_cast<std::size_t>(std::find(keys.begin(), keys.end(), next) - keys.begin()));
  }

  const std::size_t k = sp.fixed_locus.size();
  sp.fixed_volume = cone_normalized_volume(sp.fixed_locus, RatMat::identity(n)) / factorial(k);
  Int prod = 1;
  for (auto l : ls) prod *= static_cast<unsigned long>(l);
  sp.expected_volume = Rat(1) / (Rat(prod) * factorial(k));
  return sp;
}

GStandardReport is_g_standard(const std::vector<Point>& sigma, const Triangulation& t, const PermSymmetry& s) {
  GStandardReport rep;
  const std::size_t v = sigma.size();
  std::vector<std::size_t> vperm(v);
  for (std::size_t i = 0; i < v; ++i) {
    auto it = std::find(sigma.begin(), sigma.end(), s.apply(sigma[i]));
    if (it == sigma.end()) throw NotInvariant("simplex is not invariant under the permutation");
    vperm[i] = static_cast<std::size_t>(it - sigma.begin());
  }
  rep.vertex_cycles = cycle_lengths(vperm);
  rep.a = true;

  // Fixed locus: barycenters of vertex cycles.
  std::vector<Point> bary;
  {
    std::vector<bool> seen(v, false);
    for (std::size_t i = 0; i < v; ++i) {
      if (seen[i]) continue;
      std::vector<Point> orbit;
      for (std::size_t j = i; !seen[j]; j = vperm[j]) {
        seen[j] = true;
        orbit.push_back(sigma[j]);
      }
      bary.push_back(barycenter(orbit));
    }
  }
  const std::size_t k = bary.size();
  const std::size_t dim_sigma = exact::rank(RatMat::from_rows(sigma)) - 1;
  const std::size_t dim_fixed = exact::rank(RatMat::from_rows(bary)) - 1;
  rep.codim = dim_sigma - dim_fixed;
  rep.expected_codim = 0;
  for (auto l : rep.vertex_cycles) rep.expected_codim += l - 1;
  rep.b = rep.codim == rep.expected_codim;

  const RatMat vertex_lattice = RatMat::from_rows(sigma);
  Int prod = 1;
  for (auto l : rep.vertex_cycles) prod *= static_cast<unsigned long>(l);
  rep.fixed_volume = cone_normalized_volume(bary, vertex_lattice) / factorial(k);
  rep.expected_fixed_volume = Rat(1) / (Rat(prod) * factorial(k));
  rep.d = rep.fixed_volume == rep.expected_fixed_volume;

  // (c): children of the restriction of t to sigma, compared with the model.
  const bool trivial_action = prod == 1;
  bool is_face = false;
  {
    std::vector<std::size_t> idx;
    for (const auto& p : sigma) {
      auto i = t.vertex_index(p);
      if (!i) break;
      idx.push_back(*i);
    }
    if (idx.size() == v) {
      std::sort(idx.begin(), idx.end());
      for (const auto& m : t.simplices)
        if (std::includes(m.begin(), m.end(), idx.begin(), idx.end())) is_face = true;
    }
  }
  if (trivial_action || is_face) {
    rep.c = true;
  } else {
    std::vector<Simplex> children;
    for (const auto& f : t.faces()) {
      if (f.size() != k + 1) continue;
      auto pts = t.simplex_points(f);
      bool inside = true;
      for (const auto& p : pts)
        if (!in_closed_simplex(p, sigma)) inside = false;
      if (!inside) continue;
      bool holds_fixed = true;
      for (const auto& b : bary)
        if (!in_closed_simplex(b, pts)) holds_fixed = false;
      if (holds_fixed) children.push_back(f);
    }
    std::vector<std::size_t> cperm(children.size());
    bool closed = true;
    for (std::size_t i = 0; i < children.size() && closed; ++i) {
      auto img = apply(t, s, children[i]);
      auto it = img ? std::find(children.begin(), children.end(), *img) : children.end();
      if (it == children.end()) closed = false;
      else cperm[i] = static_cast<std::size_t>(it - children.begin());
    }
    for (const auto& f : children) rep.child_volumes.push_back(cone_normalized_volume(t.simplex_points(f), vertex_lattice));
    std::sort(rep.child_volumes.begin(), rep.child_volumes.end());
    rep.model_child_volumes = model_child_volumes(rep.vertex_cycles);
    if (closed) rep.child_cycles = cycle_lengths(cperm);
    std::vector<std::size_t> model_cycles;
    for (auto l : rep.vertex_cycles)
      if (l > 1) model_cycles.push_back(l);
    rep.c = closed && !children.empty() && rep.child_volumes == rep.model_child_volumes &&
            rep.child_cycles == model_cycles;
  }
  rep.standard = rep.a && rep.b && rep.c && rep.d;
  return rep;
}

bool is_h_adjusted(const Triangulation& t, const PermSymmetry& s) {
  if (t.coarse) {
    for (const auto& cell : t.coarse->cells) {
      if (cell.size() != t.n) continue;  // only simplicial cells
      Simplex sorted = cell;
      std::sort(sorted.begin(), sorted.end());
      auto img = apply(t, s, sorted);
      if (!img || *img != sorted) continue;
      if (!is_g_standard(t.simplex_points(sorted), t, s).standard) return false;
    }
  }
  for (const auto& f : t.faces()) {
    auto img = apply(t, s, f);
    if (!img || *img != f) continue;
    if (!is_g_standard(t.simplex_points(f), t, s).standard) return false;
  }
  return true;
}

}  // namespace mckay::toric
