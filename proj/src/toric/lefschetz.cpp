#include "mckay/toric/lefschetz.hpp"

#include <algorithm>
#include <set>

#include "mckay/errors.hpp"
#include "mckay/exact/lattice.hpp"
#include "mckay/exact/linalg.hpp"
#include "mckay/exact/smith.hpp"
#include "mckay/toric/geometry.hpp"
#include "mckay/toric/standard.hpp"

namespace mckay::toric {

namespace {

// σ on N in basis coordinates: x ↦ x·Φ.
IntMat action_on_N(const LatticePair& lp, const PermSymmetry& s) {
  RatMat B = lp.basis;
  RatMat Pt = exact::to_rational(s.matrix()).transpose();
  return exact::to_integer(B * Pt * exact::inverse(B));
}

OrbitRecord make_record(const Simplex& face, const Triangulation& t, const LatticePair& lp, const IntMat& phi) {
  const std::size_t n = lp.n;
  OrbitRecord rec;
  rec.face = face;
  IntMat V = IntMat::identity(n);
  std::size_t k = 0;
  if (!face.empty()) {
    RatMat span = RatMat::from_rows(t.simplex_points(face));
    RatMat K = exact::lattice_intersect_subspace(lp.basis, span);
    k = K.rows();
    IntMat Kc(k, n);
    for (std::size_t i = 0; i < k; ++i) {
      auto c = lp.coordinates(K.row_vector(i));
      for (std::size_t j = 0; j < n; ++j) Kc(i, j) = c[j];
    }
    V = exact::smith_normal_form(Kc).V;
  }
  RatMat Vr = exact::to_rational(V);
  RatMat Vinv = exact::inverse(Vr);
  IntMat M = exact::to_integer(Vinv * exact::to_rational(phi) * Vr);
  const std::size_t q = n - k;
  rec.action = IntMat(q, q);
  IntMat I_minus(q, q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      rec.action(i, j) = M(k + i, k + j);
      I_minus(i, j) = (i == j ? Int(1) : Int(0)) - M(k + i, k + j);
    }
  rec.contribution = exact::determinant(I_minus);
  RatMat rows(q, n);
  RatMat lifted = Vinv * lp.basis;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < n; ++j) rows(i, j) = lifted(k + i, j);
  rec.quotient_basis = std::move(rows);
  return rec;
}

std::vector<Simplex> invariant_faces(const Triangulation& t, const PermSymmetry& s) {
  if (!is_invariant(t, s)) throw NotInvariantTriangulation("the permutation does not map the triangulation to itself");
  std::vector<Simplex> out{Simplex{}};
  for (const auto& f : t.faces()) {
    auto img = apply(t, s, f);
    if (img && *img == f) out.push_back(f);
  }
  return out;
}

}  // namespace

std::vector<OrbitRecord> orbit_records_serial(const Triangulation& t, const LatticePair& lp, const PermSymmetry& s) {
  auto faces = invariant_faces(t, s);
  IntMat phi = action_on_N(lp, s);
  std::vector<OrbitRecord> out;
  out.reserve(faces.size());
  for (const auto& f : faces) out.push_back(make_record(f, t, lp, phi));
  return out;
}

std::vector<OrbitRecord> orbit_records_parallel(const Triangulation& t, const LatticePair& lp, const PermSymmetry& s) {
  auto faces = invariant_faces(t, s);
  IntMat phi = action_on_N(lp, s);
  std::vector<OrbitRecord> out(faces.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < faces.size(); ++i) out[i] = make_record(faces[i], t, lp, phi);
  return out;
}

Int toric_lefschetz(const Triangulation& t, const LatticePair& lp, const PermSymmetry& s, Exec exec) {
  auto recs = exec == Exec::parallel ? orbit_records_parallel(t, lp, s) : orbit_records_serial(t, lp, s);
  Int sum = 0;
  for (const auto& r : recs) sum += r.contribution;
  return sum;
}

std::vector<Simplex> fixed_ray_violations(const std::vector<OrbitRecord>& records, const Triangulation& t,
                                          const PermSymmetry& s) {
  std::set<Simplex> invariant;
  for (const auto& r : records) invariant.insert(r.face);
  std::vector<Simplex> out;
  for (const auto& r : records) {
    if (r.contribution == 0) continue;
    for (std::size_t v = 0; v < t.vertices.size(); ++v) {
      if (std::binary_search(r.face.begin(), r.face.end(), v)) continue;
      if (s.apply(t.vertices[v]) != t.vertices[v]) continue;
      Simplex bigger = r.face;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), v), v);
      if (invariant.count(bigger)) {
        out.push_back(r.face);
        break;
      }
    }
  }
  return out;
}

IntMat block_matrix(unsigned s) {
  if (s == 0) throw std::invalid_argument("block size must be positive");
  IntMat a(s, s);
  for (unsigned i = 0; i + 1 < s; ++i) a(i, i + 1) = 1;
  for (unsigned j = 0; j < s; ++j) a(s - 1, j) = -1;
  return a;
}

Int block_det(unsigned s) {
  if (s == 1) return Int(0);
  IntMat a = block_matrix(s);
  IntMat m = IntMat::identity(s) - a;
  return exact::determinant(m);
}

namespace {

bool fixed_coset(const Point& r, const PermSymmetry& s) { return frac(s.apply(r)) == r; }

}  // namespace

Int count_fixed_elements_serial(const LatticePair& lp, const PermSymmetry& s) {
  auto reps = lp.coset_representatives();
  long count = 0;
  for (const auto& r : reps)
    if (fixed_coset(r, s)) ++count;
  return Int(count);
}

Int count_fixed_elements_parallel(const LatticePair& lp, const PermSymmetry& s) {
  auto reps = lp.coset_representatives();
  long count = 0;
  const long total = static_cast<long>(reps.size());
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (long i = 0; i < total; ++i)
    if (fixed_coset(reps[static_cast<std::size_t>(i)], s)) ++count;
  return Int(count);
}

Int count_fixed_elements(const LatticePair& lp, const PermSymmetry& s, Exec exec) {
  return exec == Exec::parallel ? count_fixed_elements_parallel(lp, s) : count_fixed_elements_serial(lp, s);
}

Int fixed_lattice_index(const LatticePair& lp, const PermSymmetry& s) {
  RatMat L = fixed_subspace(s);
  RatMat ML = exact::lattice_intersect_subspace(RatMat::identity(lp.n), L);
  RatMat NL = exact::lattice_intersect_subspace(lp.basis, L);
  return exact::lattice_index(ML, NL);
}

Theorem2Report theorem2_check(const Triangulation& t, const LatticePair& lp, const PermSymmetry& s, Exec exec) {
  Theorem2Report r;
  r.simplex_count = t.simplices.size();
  r.crepant = verify_crepant(t, lp, exec).ok;
  r.adjusted = is_h_adjusted(t, s);
  for (const auto& m : t.simplices) {
    auto img = apply(t, s, m);
    if (img && *img == m) ++r.invariant_maximal;
  }
  r.lefschetz = toric_lefschetz(t, lp, s, exec);
  r.fixed_elements = count_fixed_elements(lp, s, exec);
  r.lattice_index = fixed_lattice_index(lp, s);

  std::vector<Point> bary;
  for (const auto& c : s.cycles()) {
    r.cycle_product *= static_cast<unsigned long>(c.size());
    Point b(lp.n, Rat(0));
    for (auto i : c) b[i] = Rat(1, static_cast<long>(c.size()));
    bary.push_back(std::move(b));
  }
  RatMat NL = exact::lattice_intersect_subspace(lp.basis, fixed_subspace(s));
  r.cone_volume = cone_normalized_volume(bary, NL);
  if (bary.size() == 1) {
    r.affine_volume = 1;
  } else {
    std::vector<Point> diffs;
    for (std::size_t i = 1; i < bary.size(); ++i) {
      Point d(lp.n);
      for (std::size_t j = 0; j < lp.n; ++j) d[j] = bary[i][j] - bary[0][j];
      diffs.push_back(std::move(d));
    }
    r.affine_volume = cone_normalized_volume(diffs, lp.basis);
  }
  const Rat prod(r.cycle_product);
  r.claim1 = Rat(r.lefschetz) == prod * r.cone_volume;
  r.claim2 = r.cone_volume == Rat(r.fixed_elements) / prod && r.fixed_elements == r.lattice_index;
  r.final_equality = r.lefschetz == r.fixed_elements;
  return r;
}

Theorem2Report theorem2_check(const LatticePair& lp, const PermSymmetry& s, InsertionOrder order, Exec exec) {
  return theorem2_check(adjusted_triangulation(lp, s, order), lp, s, exec);
}

}  // namespace mckay::toric
