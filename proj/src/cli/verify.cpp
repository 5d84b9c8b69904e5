#include <functional>
#include <random>

#include "mckay/cli/cli.hpp"
#include "mckay/exact/cyclotomic.hpp"
#include "mckay/exact/lattice.hpp"
#include "mckay/exact/linalg.hpp"
#include "mckay/exact/smith.hpp"
#include "mckay/groups/classes.hpp"
#include "mckay/groups/fixtures.hpp"
#include "mckay/orbifold/dynkin.hpp"
#include "mckay/orbifold/sheets.hpp"
#include "mckay/toric/construct.hpp"
#include "mckay/toric/lefschetz.hpp"
#include "mckay/toric/random.hpp"
#include "mckay/toric/standard.hpp"

namespace mckay::cli {

namespace fx = groups::fixtures;
using exact::Int;
using exact::IntMat;
using nlohmann::json;

namespace {

// A check returns an empty json on success, or the counterexample.
using CheckFn = std::function<json(const VerifyOptions&, std::mt19937_64&, RunReport&)>;

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

json check_cyclotomic(const VerifyOptions&, std::mt19937_64&, RunReport&) {
  for (unsigned m = 1; m <= 30; ++m) {
    std::vector<Int> prod{Int(1)};
    for (unsigned d = 1; d <= m; ++d)
      if (m % d == 0) prod = poly_mul(prod, exact::cyclotomic_polynomial(d));
    std::vector<Int> expect(m + 1, Int(0));
    expect[0] = -1;
    expect[m] = 1;
    if (prod != expect) return {{"m", m}, {"property", "product of Φ_d over d | m is x^m - 1"}};
  }
  const auto z = exact::CycloInt::root_of_unity(3, 1) * exact::CycloInt::root_of_unity(9, 1);
  if (!(z == exact::CycloInt::root_of_unity(9, 4))) return {{"property", "ζ_3 ζ_9 = ζ_9^4"}};
  return {};
}

IntMat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

json matrix_json(const IntMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

json check_smith(const VerifyOptions&, std::mt19937_64& rng, RunReport&) {
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    IntMat a = random_matrix(rng, r, c, -9, 9);
    auto f = exact::smith_normal_form(a);
    bool ok = f.U * a * f.V == f.D && abs(exact::determinant(f.U)) == 1 && abs(exact::determinant(f.V)) == 1;
    for (std::size_t i = 0; ok && i < std::min(r, c); ++i)
      for (std::size_t j = 0; ok && j < c; ++j)
        if (i != j && f.D(i, j) != 0) ok = false;
    for (std::size_t i = 0; ok && i + 1 < f.rank; ++i) ok = f.D(i + 1, i + 1) % f.D(i, i) == 0;
    if (!ok) return {{"matrix", matrix_json(a)}, {"property", "U·A·V = D, unimodular U and V, divisibility"}};
  }
  // tower multiplicativity
  for (int trial = 0; trial < 50; ++trial) {
    IntMat p = random_matrix(rng, 3, 3, -4, 4), q = random_matrix(rng, 3, 3, -4, 4);
    if (exact::determinant(p) == 0 || exact::determinant(q) == 0) continue;
    const auto C = exact::RatMat::identity(3);
    const auto B = exact::to_rational(p);
    const auto A = exact::to_rational(q * p);
    if (exact::lattice_index(A, C) != exact::lattice_index(A, B) * exact::lattice_index(B, C))
      return {{"p", matrix_json(p)}, {"q", matrix_json(q)}, {"property", "index along towers"}};
  }
  return {};
}

struct GroupFixture {
  std::string name;
  std::vector<groups::GroupElement> gens;
  groups::Normalization norm;
};

std::vector<GroupFixture> group_fixtures() {
  std::vector<GroupFixture> out;
  for (unsigned n : {4u, 5u, 6u}) out.push_back({"cyclic-" + std::to_string(n), fx::cyclic_generators(n), {}});
  for (unsigned r = 3; r <= 8; ++r)
    out.push_back({"binary-dihedral-" + std::to_string(r), fx::binary_dihedral_generators(r), {}});
  out.push_back({"binary-tetrahedral", fx::binary_tetrahedral_generators(), {}});
  out.push_back({"quaternion", fx::quaternion_generators(), {}});
  out.push_back({"quintic", fx::quintic_generators(), groups::Normalization::projective});
  return out;
}

json check_groups(const VerifyOptions&, std::mt19937_64&, RunReport&) {
  for (const auto& f : group_fixtures()) {
    groups::ClosureOptions opts;
    opts.normalization = f.norm;
    const auto g = groups::FiniteMatrixGroup::close(f.gens, opts);
    auto rev = f.gens;
    std::reverse(rev.begin(), rev.end());
    const auto g2 = groups::FiniteMatrixGroup::close(rev, opts);
    if (g.elements() != g2.elements()) return {{"fixture", f.name}, {"property", "closure is generator-order independent"}};
    const auto cls = groups::conjugacy_classes(g);
    std::size_t sum = 0;
    for (std::size_t c = 0; c < cls.size(); ++c) {
      const auto cent = groups::centralizer(g, cls.representatives[c]);
      if (cls.classes[c].size() * cent.order() != g.order())
        return {{"fixture", f.name}, {"class", c}, {"property", "class size × centralizer = |G|"}};
      sum += cls.classes[c].size();
    }
    if (sum != g.order()) return {{"fixture", f.name}, {"property", "classes partition G"}};
    if (f.norm == groups::Normalization::none)
      for (const auto& e : g.elements())
        if (!e.determinant().is_one()) return {{"fixture", f.name}, {"property", "determinant 1"}};
  }
  return {};
}

json check_ade(const VerifyOptions&, std::mt19937_64&, RunReport& r) {
  using orbifold::mckay_check;
  std::vector<std::pair<std::string, orbifold::McKayReport>> cases;
  for (unsigned n : {2u, 4u, 6u, 8u}) {
    auto g = groups::FiniteMatrixGroup::close(fx::cyclic_generators(n));
    cases.emplace_back("cyclic-" + std::to_string(n), mckay_check(g, fx::action_swap(), orbifold::a_chain(n - 1, true)));
  }
  for (unsigned rr = 4; rr <= 8; ++rr) {
    auto g = groups::FiniteMatrixGroup::close(fx::binary_dihedral_generators(rr));
    cases.emplace_back("binary-dihedral-" + std::to_string(rr),
                       mckay_check(g, fx::binary_dihedral_action(rr), orbifold::d_diagram(rr, true)));
  }
  {
    // r = 3 is the quaternion-free case D_3 = A_3, with the chain of r - 2 = 1 fixed node
    auto g = groups::FiniteMatrixGroup::close(fx::binary_dihedral_generators(3));
    cases.emplace_back("binary-dihedral-3", mckay_check(g, fx::binary_dihedral_action(3), orbifold::a_chain(3, true)));
  }
  {
    auto g = groups::FiniteMatrixGroup::close(fx::binary_tetrahedral_generators());
    cases.emplace_back("binary-tetrahedral", mckay_check(g, fx::binary_tetrahedral_action(), orbifold::e6(true)));
  }
  {
    auto g = groups::FiniteMatrixGroup::close(fx::quaternion_generators());
    cases.emplace_back("triality", mckay_check(g, fx::triality_action(), orbifold::d4_triality()));
  }
  json table = json::object();
  for (const auto& [name, rep] : cases) {
    table[name] = {{"invariant", rep.invariant_classes}, {"classes", rep.classes}, {"dynkin", rep.dynkin}};
    if (!rep.ok()) return {{"case", name}, {"invariant", rep.invariant_classes}, {"dynkin", rep.dynkin}};
  }
  r.value("ade", table);
  return {};
}

json check_flip_parity(const VerifyOptions&, std::mt19937_64&, RunReport& r) {
  json rows = json::array();
  for (unsigned n = 2; n <= 9; ++n) {
    auto g = groups::FiniteMatrixGroup::close(fx::cyclic_generators(n));
    auto cls = groups::conjugacy_classes(g);
    auto act = groups::outer_action(g, cls, fx::action_flip());
    std::size_t fixed = 0;
    for (std::size_t i = 0; i < g.order(); ++i)
      if (act.element_perm[i] == i) ++fixed;
    const std::size_t expected = n % 2 == 0 ? 2 : 1;
    if (fixed != expected) return {{"n", n}, {"engine", fixed}, {"property", "solutions of 2a ≡ 0 mod n"}};
    rows.push_back({{"n", n}, {"engine", fixed}, {"stated", n % 2 == 0 ? 1 : 2}});
  }
  r.value("flip_parity", rows);
  r.check("flip-parity-statement", Status::open_question,
          "engine counts 2 (n even) and 1 (n odd); the text states 1 and 2");
  return {};
}

json check_mckay2d(const VerifyOptions& o, std::mt19937_64&, RunReport&) {
  const auto swap = toric::parse_perm("(1 2)", 2);
  for (unsigned n = 1; n <= o.max_n; ++n) {
    const std::string gen = n == 1 ? "" : "1," + std::to_string(n - 1) + "@" + std::to_string(n);
    const auto lp = toric::build_lattice_pair(2, toric::parse_h_generators(gen, 2));
    const auto t1 = toric::adjusted_triangulation(lp, swap, toric::InsertionOrder::lex);
    const auto t2 = toric::adjusted_triangulation(lp, swap, toric::InsertionOrder::reverse_lex);
    const Int L = toric::toric_lefschetz(t1, lp, swap);
    const Int L2 = toric::toric_lefschetz(t2, lp, swap);
    const Int fixed = toric::count_fixed_elements(lp, swap);
    auto g = groups::FiniteMatrixGroup::close(fx::cyclic_generators(n));
    auto cls = groups::conjugacy_classes(g);
    const auto inv = groups::invariant_class_count(groups::outer_action(g, cls, fx::action_swap()));
    const bool crepant = toric::verify_crepant(t1, lp).ok;
    if (!crepant || L != fixed || L != L2 || L != Int(static_cast<unsigned long>(inv)))
      return {{"n", n}, {"L", L.get_si()}, {"L_other", L2.get_si()}, {"fixed", fixed.get_si()}, {"invariant", inv},
              {"crepant", crepant}};
  }
  return {};
}

json check_blockdet(const VerifyOptions&, std::mt19937_64&, RunReport&) {
  if (toric::block_det(1) != 0) return {{"s", 1}, {"value", toric::block_det(1).get_si()}};
  for (unsigned s = 2; s <= 12; ++s)
    if (toric::block_det(s) != Int(s + 1)) return {{"s", s}, {"value", toric::block_det(s).get_si()}};
  return {};
}

json instance_json(const toric::LatticePair& lp, const toric::PermSymmetry& s) {
  return {{"n", lp.n}, {"generators", toric::format_h_generators(lp.gens)}, {"perm", s.to_string()}};
}

json with_property(json j, const std::string& p) {
  j["property"] = p;
  return j;
}

json theorem2_failure(const toric::LatticePair& lp, const toric::PermSymmetry& s) {
  json j = instance_json(lp, s);
  const auto r1 = toric::theorem2_check(lp, s, toric::InsertionOrder::lex);
  const auto r2 = toric::theorem2_check(lp, s, toric::InsertionOrder::reverse_lex);
  bool flip_ok = true;
  if (const auto f = toric::flip_orbit(toric::adjusted_triangulation(lp, s), s)) {
    const auto r3 = toric::theorem2_check(*f, lp, s);
    flip_ok = r3.ok() && r3.lefschetz == r1.lefschetz;
    j["L_flipped"] = r3.lefschetz.get_si();
  }
  if (r1.ok() && r2.ok() && r1.lefschetz == r2.lefschetz && flip_ok) return {};
  j["L"] = r1.lefschetz.get_si();
  j["L_other"] = r2.lefschetz.get_si();
  j["fixed"] = r1.fixed_elements.get_si();
  j["crepant"] = r1.crepant;
  j["adjusted"] = r1.adjusted;
  j["claim1"] = r1.claim1;
  j["claim2"] = r1.claim2;
  return j;
}

json check_toric3(const VerifyOptions& o, std::mt19937_64& rng, RunReport& r) {
  const auto lp = toric::build_lattice_pair(3, toric::parse_h_generators("1,4,0@5;0,1,4@5", 3));
  const auto s = toric::parse_perm("(1 2 3)", 3);
  const auto rep = toric::theorem2_check(lp, s);
  if (!rep.ok() || rep.lefschetz != 1 || rep.simplex_count != 25 || rep.invariant_maximal != 1) {
    json j = instance_json(lp, s);
    j["L"] = rep.lefschetz.get_si();
    j["simplices"] = rep.simplex_count;
    j["invariant_maximal"] = rep.invariant_maximal;
    return j;
  }
  if (auto f = theorem2_failure(lp, s); !f.is_null()) return f;
  for (unsigned i = 0; i < o.random_instances; ++i) {
    const auto inst = toric::random_instance(rng);
    if (auto f = theorem2_failure(inst.lp, inst.s); !f.is_null()) return f;
  }
  r.value("toric3_instances", o.random_instances + 1);
  return {};
}

json check_remark(const VerifyOptions&, std::mt19937_64& rng, RunReport&) {
  std::vector<toric::RandomInstance> cases;
  cases.push_back({toric::build_lattice_pair(3, toric::parse_h_generators("1,4,0@5;0,1,4@5", 3)),
                   toric::parse_perm("(1 2 3)", 3)});
  for (int i = 0; i < 10; ++i) cases.push_back(toric::random_instance(rng));
  for (const auto& c : cases) {
    const auto t = toric::adjusted_triangulation(c.lp, c.s);
    const auto recs = toric::orbit_records_serial(t, c.lp, c.s);
    if (!toric::fixed_ray_violations(recs, t, c.s).empty())
      return with_property(instance_json(c.lp, c.s), "faces extended by a fixed ray contribute 0");
    for (const auto& rec : recs)
      if (rec.face.empty() && rec.contribution != 0)
        return with_property(instance_json(c.lp, c.s), "dense orbit contributes 0");
  }
  return {};
}

json check_standard(const VerifyOptions&, std::mt19937_64&, RunReport&) {
  const std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> types = {
      {{1}, {}}, {{2}, {}}, {{3}, {}}, {{2, 2}, {}}, {{2}, {1}}, {{3, 2}, {1}}};
  for (const auto& [ls, ms] : types) {
    const auto sp = toric::standard_pair(ls, ms);
    std::size_t pieces = 1;
    for (auto l : ls) pieces *= l;
    if (sp.fixed_volume != sp.expected_volume || sp.pieces.size() != pieces)
      return {{"ls", ls}, {"ms", ms}, {"fixed_volume", exact::to_string(sp.fixed_volume)}};
  }
  return {};
}

json check_orbifold(const VerifyOptions&, std::mt19937_64&, RunReport& r) {
  struct Case {
    orbifold::GSpaceSheet sheet;
    long expected;
  };
  std::vector<Case> cases;
  cases.push_back({orbifold::quintic_sheet(orbifold::QuinticVariant::swap), 56});
  cases.push_back({orbifold::quintic_sheet(orbifold::QuinticVariant::swap_two_pairs), 8});
  cases.push_back({orbifold::lt_sheet(), 16});
  for (const auto& c : cases) {
    const Int L = orbifold::lefschetz_theorem1(c.sheet);
    if (L != c.expected) return {{"sheet", c.sheet.name}, {"L", L.get_si()}, {"expected", c.expected}};
    for (const auto& p : c.sheet.stated_checks)
      if (!p.agrees())
        return {{"sheet", c.sheet.name}, {"quantity", p.quantity}, {"stated", p.stated.get_si()}, {"engine", p.engine.get_si()}};
    if (!c.sheet.strata.empty() && !orbifold::chain_check(c.sheet).ok)
      return {{"sheet", c.sheet.name}, {"property", "chain stages agree"}};
    if (!c.sheet.commuting_pairs.empty()) orbifold::euler_orbifold(c.sheet);  // throws on disagreement
  }
  const auto id = orbifold::quintic_sheet(orbifold::QuinticVariant::identity);
  if (orbifold::lefschetz_theorem1(id) != orbifold::euler_orbifold(id) || !orbifold::chain_check(id).ok)
    return {{"sheet", id.name}, {"property", "h = identity reduces to the Euler formula"}};
  auto bt = groups::FiniteMatrixGroup::close(fx::binary_tetrahedral_generators());
  const auto pt = orbifold::point_sheet(bt);
  if (orbifold::euler_orbifold(pt) != 7) return {{"sheet", "point/binary-tetrahedral"}, {"property", "e = #classes"}};
  r.value("orbifold_mirror_euler", orbifold::euler_orbifold(id).get_si());
  return {};
}

const std::vector<std::pair<std::string, CheckFn>>& checks() {
  static const std::vector<std::pair<std::string, CheckFn>> list = {
      {"cyclotomic", check_cyclotomic}, {"smith", check_smith},       {"groups", check_groups},
      {"ade", check_ade},               {"flip-parity", check_flip_parity}, {"mckay2d", check_mckay2d},
      {"blockdet", check_blockdet},     {"toric3", check_toric3},     {"remark", check_remark},
      {"standard", check_standard},     {"orbifold", check_orbifold}};
  return list;
}

}  // namespace

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : checks()) v.push_back(n);
    return v;
  }();
  return names;
}

void run_verify(const VerifyOptions& opts, RunReport& report) {
  report.value("seed", opts.seed);
  for (const auto& [name, fn] : checks()) {
    if (!opts.only.empty() && !opts.only.count(name)) continue;
    // each check gets its own stream so --only does not shift the random draws
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                      static_cast<std::uint32_t>(fnv1a(name))};
    std::mt19937_64 rng(seq);
    json counterexample = fn(opts, rng, report);
    if (!counterexample.is_null()) {
      report.check(name, Status::fail);
      report.set_counterexample({{"check", name}, {"data", counterexample}});
      return;
    }
    report.check(name, Status::pass);
  }
}

}  // namespace mckay::cli
