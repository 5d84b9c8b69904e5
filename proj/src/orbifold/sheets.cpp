#include "mckay/orbifold/sheets.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "mckay/errors.hpp"
#include "mckay/groups/fixtures.hpp"
#include "mckay/orbifold/quintic.hpp"

namespace mckay::orbifold {

namespace fx = groups::fixtures;
namespace q = quintic;

namespace {

// Diagonal exponents of an element whose entries are m-th roots of unity.
std::vector<long> diagonal_exponents(const groups::GroupElement& g, unsigned m) {
  std::vector<long> out;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const auto& x = g.matrix()(i, i);
    long k = 0;
    while (k < static_cast<long>(m) && !(x == exact::CycloInt::root_of_unity(m, k))) ++k;
    if (k == static_cast<long>(m)) throw std::logic_error("diagonal entry is not a root of unity");
    out.push_back(k);
  }
  return out;
}

std::string exponent_label(const std::vector<long>& e) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ')';
  return os.str();
}

std::string mask_label(q::Mask m) {
  std::string s = "{";
  for (int i = 0; i < 5; ++i)
    if (m & (q::Mask{1} << i)) s += std::to_string(i);
  return s + "}";
}

Tagged tag(long v, Provenance p) { return Tagged{Int(v), p}; }

Int exact_quotient(const Int& num, const Int& den, const std::string& what) {
  if (num % den != 0) throw InconsistentSheet(what + " is not an integer");
  return num / den;
}

struct Setup {
  groups::FiniteMatrixGroup group;
  groups::ConjClassSet classes;
  groups::OuterAction action;
  std::vector<std::size_t> in_ch;
};

Setup make_setup(const std::vector<groups::GroupElement>& gens, const groups::GroupElement& h) {
  groups::ClosureOptions opts;
  opts.normalization = groups::Normalization::projective;
  auto g = groups::FiniteMatrixGroup::close(gens, opts);
  auto cls = groups::conjugacy_classes(g);
  auto act = groups::outer_action(g, cls, h);
  auto in_ch = groups::ch_filter(g, cls, act, groups::coordinate_stabilizers(g));
  return Setup{std::move(g), std::move(cls), std::move(act), std::move(in_ch)};
}

}  // namespace

GSpaceSheet quintic_sheet(QuinticVariant variant, Exec exec) {
  q::Involution hperm = q::identity_involution();
  groups::GroupElement h = groups::GroupElement::identity(5);
  std::string vname = "identity";
  if (variant == QuinticVariant::swap) {
    hperm = {1, 0, 2, 3, 4};
    h = fx::quintic_swap();
    vname = "swap";
  } else if (variant == QuinticVariant::swap_two_pairs) {
    hperm = {1, 0, 2, 4, 3};
    h = fx::quintic_swap_two_pairs();
    vname = "swap-two-pairs";
  }
  const Setup st = make_setup(fx::quintic_generators(), h);
  const std::size_t order = st.group.order();
  const Int G(static_cast<unsigned long>(order));

  std::vector<q::Exponents> exps(order);
  for (std::size_t i = 0; i < order; ++i) {
    auto e = diagonal_exponents(st.group.element(i), 5);
    std::copy(e.begin(), e.end(), exps[i].begin());
  }
  std::map<q::Exponents, std::size_t> index;
  for (std::size_t i = 0; i < order; ++i) index[exps[i]] = i;

  // |S_J| for every nonempty support J
  std::array<long, 32> stab_order{};
  std::array<std::vector<std::size_t>, 32> stab_members;
  for (q::Mask J = 1; J <= q::all_coordinates; ++J)
    for (std::size_t i = 0; i < order; ++i) {
      bool constant = true;
      int first = -1;
      for (int c = 0; c < 5; ++c)
        if (J & (q::Mask{1} << c)) {
          if (first < 0) first = exps[i][c];
          else if (exps[i][c] != first) constant = false;
        }
      if (constant) {
        ++stab_order[J];
        stab_members[J].push_back(i);
      }
    }

  const auto pair_table = q::twisted_table(q::identity_involution(), exps, exec);
  const bool trivial_h = variant == QuinticVariant::identity;
  const auto lef_table = trivial_h ? pair_table : q::twisted_table(hperm, exps, exec);
  const std::set<std::size_t> in_ch(st.in_ch.begin(), st.in_ch.end());
  const long identity_stated = variant == QuinticVariant::swap ? 8 : 0;

  GSpaceSheet sheet;
  sheet.name = "quintic-" + vname;
  sheet.group_order = G;
  sheet.metadata["variety"] = "quintic threefold x_0^5+…+x_4^5 - 5λ x_0x_1x_2x_3x_4 = 0, λ generic";
  sheet.metadata["group"] = "Z_5^3, scalar-normalized diagonal exponents";
  sheet.metadata["h"] = vname;
  sheet.metadata["lefschetz_method"] = "L(h, Y/G) = (1/|G|) Σ_g e(Y^{hg})";

  long identity_engine = 0;
  std::size_t one_dim = 0, zero_dim = 0;
  std::set<long> nonidentity_values;
  for (std::size_t c = 0; c < st.classes.size(); ++c) {
    const std::size_t i = st.classes.representatives[c];
    ClassRecord r;
    r.label = exponent_label({exps[i].begin(), exps[i].end()});
    r.size = Int(static_cast<unsigned long>(st.classes.classes[c].size()));
    r.centralizer_order = G / r.size;
    r.identity = i == st.group.identity_index();
    r.in_ch = in_ch.count(c) > 0;
    r.fixed_dim = q::fixed_dimension(exps[i]);

    // e(X^g/G) through the support stratification: G acts on each open support-J piece with
    // stabilizer S_J.
    Int e_num = 0;
    for (q::Mask k : q::eigen_classes(exps[i]))
      for (q::Mask J = k; J != 0; J = (J - 1) & k) e_num += Int(q::open_euler(J)) * Int(stab_order[J]);
    r.euler_quotient = Tagged{exact_quotient(e_num, G, "e(X^g/C(g))"), Provenance::derived};

    if (r.in_ch) {
      Int l_num = 0;
      for (std::size_t j = 0; j < order; ++j) l_num += Int(lef_table[i * order + j]);
      const Int engine = exact_quotient(l_num, G, "L(h, X^g/C(g))");
      if (r.identity && !trivial_h) {
        identity_engine = engine.get_si();
        r.lefschetz_quotient = tag(identity_stated, Provenance::paper);
      } else {
        r.lefschetz_quotient = Tagged{engine, Provenance::derived};
        if (!r.identity) {
          nonidentity_values.insert(engine.get_si());
          if (*r.fixed_dim == 1) ++one_dim;
          if (*r.fixed_dim == 0) ++zero_dim;
        }
      }
    }
    sheet.classes.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) {
      CommutingPairRecord p;
      p.g_class = sheet.classes[st.classes.class_of[i]].label;
      p.h_class = sheet.classes[st.classes.class_of[j]].label;
      p.euler = Int(pair_table[i * order + j]);
      sheet.commuting_pairs.push_back(std::move(p));
    }

  // Strata: points with support exactly J have stabilizer S_J; group supports by stabilizer.
  std::map<std::vector<std::size_t>, std::vector<q::Mask>> strata;
  for (q::Mask J = 1; J <= q::all_coordinates; ++J) strata[stab_members[J]].push_back(J);
  for (const auto& [members, supports] : strata) {
    StratumRecord s;
    for (q::Mask J : supports) s.label += (s.label.empty() ? "" : ",") + mask_label(J);
    s.order = Int(static_cast<unsigned long>(members.size()));
    s.class_count = s.order;
    long e = 0;
    for (q::Mask J : supports) e += q::open_euler(J);
    s.euler_stratum = tag(e, Provenance::derived);

    std::set<std::size_t> image;
    long fixed = 0;
    for (auto m : members) {
      const std::size_t im = index.at(q::conjugate(hperm, exps[m]));
      image.insert(im);
      if (im == m) ++fixed;
    }
    s.h_invariant = std::equal(image.begin(), image.end(), members.begin(), members.end());
    s.con_h = s.h_invariant ? Int(fixed) : Int(0);
    if (s.h_invariant) {
      if (trivial_h) {
        s.lefschetz_stratum = s.euler_stratum;
      } else {
        // L(h, X^{[S]}) = |G|/|S| · L(h, X^{[S]}/G), with the quotient averaged over lifts h·g'
        Int num = 0;
        for (const auto& gp : exps)
          for (q::Mask J : supports) num += Int(q::open_twisted_euler(hperm, J, gp));
        s.lefschetz_stratum = Tagged{exact_quotient(num, s.order, "L(h, X^[S])"), Provenance::derived};
      }
    }
    sheet.strata.push_back(std::move(s));
  }

  sheet.stated_checks.push_back({"five points (2 coordinates)", Int(5), Int(q::fermat_euler(2))});
  sheet.stated_checks.push_back({"plane quintic of genus 6", Int(2 - 2 * 6), Int(q::fermat_euler(3))});
  sheet.stated_checks.push_back({"quintic surface", Int(55), Int(q::fermat_euler(4))});
  sheet.stated_checks.push_back({"group order", Int(125), G});
  if (!trivial_h) {
    sheet.stated_checks.push_back({"identity-class Lefschetz", Int(identity_stated), Int(identity_engine)});
    const long common = nonidentity_values.size() == 1 ? *nonidentity_values.begin() : -1;
    sheet.stated_checks.push_back({"non-identity quotient Lefschetz", Int(2), Int(common)});
    const long e_fix = q::twisted_euler(hperm, q::Exponents{0, 0, 0, 0, 0}, q::Exponents{0, 0, 0, 0, 0});
    if (variant == QuinticVariant::swap) {
      sheet.stated_checks.push_back({"C(h) classes with 1-dim fixed set", Int(12), Int(static_cast<long>(one_dim))});
      sheet.stated_checks.push_back({"C(h) classes with 0-dim fixed set", Int(12), Int(static_cast<long>(zero_dim))});
      sheet.stated_checks.push_back({"L(h, V) = e(V^h)", Int(56), Int(e_fix)});
    } else {
      sheet.stated_checks.push_back(
          {"non-identity C(h) classes", Int(4), Int(static_cast<long>(one_dim + zero_dim))});
      sheet.stated_checks.push_back({"L(h, V) = e(V^h)", Int(-8), Int(e_fix)});
    }
    sheet.metadata["observation"] = "L(h,V) = -sign(h) L(h, mirror) in this example";
  }
  validate(sheet);
  return sheet;
}

GSpaceSheet lt_sheet() {
  const Setup st = make_setup(fx::lt_generators(), fx::lt_involution());
  const Int G(static_cast<unsigned long>(st.group.order()));
  const std::set<std::size_t> in_ch(st.in_ch.begin(), st.in_ch.end());
  GSpaceSheet sheet;
  sheet.name = "lt-complete-intersection";
  sheet.group_order = G;
  sheet.metadata["variety"] = "x_1^3+x_2^3+x_3^3 = 3λ x_4x_5x_6, x_4^3+x_5^3+x_6^3 = 3λ x_1x_2x_3 in P^5, λ generic";
  sheet.metadata["group"] = "order 81, diagonal over Z_9";
  sheet.metadata["h"] = "x_1 <-> x_2, x_4 <-> x_5";
  sheet.metadata["observation"] = "L(h,V) = -sign(h) L(h, mirror) in this example";
  for (std::size_t c = 0; c < st.classes.size(); ++c) {
    const std::size_t i = st.classes.representatives[c];
    ClassRecord r;
    r.label = exponent_label(diagonal_exponents(st.group.element(i), 9));
    r.size = Int(static_cast<unsigned long>(st.classes.classes[c].size()));
    r.centralizer_order = G / r.size;
    r.identity = i == st.group.identity_index();
    r.in_ch = in_ch.count(c) > 0;
    if (r.in_ch) r.lefschetz_quotient = tag(r.identity ? 0 : 2, Provenance::paper);
    sheet.classes.push_back(std::move(r));
  }
  sheet.stated_checks.push_back({"group order", Int(81), G});
  sheet.stated_checks.push_back({"C(h) classes", Int(9), Int(static_cast<unsigned long>(in_ch.size()))});
  validate(sheet);
  return sheet;
}

GSpaceSheet point_sheet(const groups::FiniteMatrixGroup& g) {
  const auto cls = groups::conjugacy_classes(g);
  const Int G(static_cast<unsigned long>(g.order()));
  GSpaceSheet sheet;
  sheet.name = "point";
  sheet.group_order = G;
  sheet.metadata["variety"] = "point";
  for (std::size_t c = 0; c < cls.size(); ++c) {
    const std::size_t i = cls.representatives[c];
    ClassRecord r;
    r.label = "c" + std::to_string(c);
    r.size = Int(static_cast<unsigned long>(cls.classes[c].size()));
    r.centralizer_order = G / r.size;
    r.identity = i == g.identity_index();
    r.in_ch = true;
    r.fixed_dim = 0;
    r.euler_quotient = tag(1, Provenance::trivial);
    r.lefschetz_quotient = tag(1, Provenance::trivial);
    sheet.classes.push_back(std::move(r));
  }
  // commuting pairs grouped by class pair
  std::map<std::pair<std::size_t, std::size_t>, long> counts;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (g.mul(a, b) == g.mul(b, a)) ++counts[{cls.class_of[a], cls.class_of[b]}];
  for (const auto& [k, n] : counts)
    sheet.commuting_pairs.push_back({sheet.classes[k.first].label, sheet.classes[k.second].label, Int(n), Int(1)});
  StratumRecord s;
  s.label = "G";
  s.order = G;
  s.class_count = Int(static_cast<unsigned long>(cls.size()));
  s.euler_stratum = tag(1, Provenance::trivial);
  s.lefschetz_stratum = s.euler_stratum;
  s.con_h = s.class_count;
  sheet.strata.push_back(std::move(s));
  validate(sheet);
  return sheet;
}

GSpaceSheet point_sheet() {
  return point_sheet(groups::FiniteMatrixGroup::close({groups::GroupElement::identity(1)}));
}

}  // namespace mckay::orbifold
