#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "mckay/cli/cli.hpp"
#include "mckay/errors.hpp"
#include "mckay/exact/rational.hpp"
#include "mckay/groups/classes.hpp"
#include "mckay/groups/fixtures.hpp"
#include "mckay/orbifold/sheet_io.hpp"
#include "mckay/orbifold/sheets.hpp"
#include "mckay/toric/construct.hpp"
#include "mckay/toric/io.hpp"
#include "mckay/toric/lefschetz.hpp"
#include "mckay/toric/standard.hpp"

namespace mckay::cli {

namespace fx = groups::fixtures;
using nlohmann::json;

namespace {

struct Args {
  std::string fixture, gens, action, perm, sheet, out, order = "lex", triangulation, only;
  unsigned n = 0;
  bool n_set = false;
  bool projective = false;
  bool gen_set = false;
  std::size_t cap = 10000;
  std::uint64_t seed = 7;
  unsigned max_n = 30;
  unsigned random_instances = 50;
  bool json = false;
};

json int_json(const exact::Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path);
  if (!o) throw ParseError("cannot write '" + path + "'");
  o << text;
}

// ---- group ----------------------------------------------------------------------------------

struct GroupInput {
  std::vector<groups::GroupElement> gens;
  groups::Normalization norm = groups::Normalization::none;
  std::optional<groups::GroupElement> h;
  std::string action_name;
};

groups::GroupElement named_action(const std::string& name, const std::string& fixture, unsigned n) {
  if (name == "identity") return groups::GroupElement::identity(fixture == "quintic" ? 5 : fixture == "lt" ? 6 : 2);
  if (name == "swap") return fixture == "quintic" ? fx::quintic_swap() : fx::action_swap();
  if (name == "flip") return fx::action_flip();
  if (name == "triality") return fx::triality_action();
  if (name == "swap-two-pairs") return fx::quintic_swap_two_pairs();
  if (name == "default") {
    if (fixture == "cyclic") return fx::action_swap();
    if (fixture == "binary-dihedral") return fx::binary_dihedral_action(n);
    if (fixture == "binary-tetrahedral") return fx::binary_tetrahedral_action();
    if (fixture == "quaternion") return fx::triality_action();
    if (fixture == "quintic") return fx::quintic_swap();
    if (fixture == "lt") return fx::lt_involution();
  }
  if (!name.empty() && name.front() == '[') return groups::parse_element(name);
  throw ParseError("unknown action '" + name + "'");
}

GroupInput group_input(const Args& a) {
  GroupInput in;
  const std::string& f = a.fixture;
  if (!f.empty()) {
    if (f == "cyclic") {
      if (!a.n_set || a.n == 0) throw ParseError("--fixture cyclic needs --n ≥ 1");
      in.gens = fx::cyclic_generators(a.n);
    } else if (f == "binary-dihedral") {
      if (!a.n_set || a.n < 3) throw ParseError("--fixture binary-dihedral needs --n = r ≥ 3");
      in.gens = fx::binary_dihedral_generators(a.n);
    } else if (f == "binary-tetrahedral") {
      in.gens = fx::binary_tetrahedral_generators();
    } else if (f == "quaternion") {
      in.gens = fx::quaternion_generators();
    } else if (f == "quintic") {
      in.gens = fx::quintic_generators();
      in.norm = groups::Normalization::projective;
    } else if (f == "lt") {
      in.gens = fx::lt_generators();
      in.norm = groups::Normalization::projective;
    } else {
      throw ParseError("unknown group fixture '" + f + "'");
    }
    in.action_name = a.action.empty() ? "default" : a.action;
    in.h = named_action(in.action_name, f, a.n);
  } else {
    if (a.gens.empty()) throw ParseError("group needs --fixture or --gens");
    in.gens = groups::parse_generators(a.gens);
    if (a.projective) in.norm = groups::Normalization::projective;
    if (!a.action.empty()) {
      in.action_name = a.action;
      in.h = named_action(a.action, "", a.n);
    }
  }
  return in;
}

void cmd_group(const Args& a, RunReport& r) {
  GroupInput in = group_input(a);
  groups::ClosureOptions opts;
  opts.cap = a.cap;
  opts.normalization = in.norm;
  const auto g = groups::FiniteMatrixGroup::close(in.gens, opts);
  const auto cls = groups::conjugacy_classes(g);
  r.value("order", g.order());
  r.value("classes", cls.size());
  r.value("abelian", g.is_abelian());
  bool det_one = true;
  for (const auto& e : g.elements()) det_one = det_one && e.determinant().is_one();
  r.value("determinant_one", det_one);

  // class equation
  std::size_t total = 0;
  bool class_eq = true;
  for (std::size_t c = 0; c < cls.size(); ++c) {
    const auto cent = groups::centralizer(g, cls.representatives[c]);
    class_eq = class_eq && cls.classes[c].size() * cent.order() == g.order();
    total += cls.classes[c].size();
  }
  r.check("class_equation", class_eq && total == g.order() ? Status::pass : Status::fail);

  if (in.h) {
    const auto act = groups::outer_action(g, cls, *in.h);
    r.value("action", in.action_name);
    r.value("invariant", groups::invariant_class_count(act));
    std::size_t fixed_elems = 0;
    for (std::size_t i = 0; i < g.order(); ++i)
      if (act.element_perm[i] == i) ++fixed_elems;
    r.value("invariant_elements", fixed_elems);
    bool diagonal = true;
    for (const auto& e : g.elements()) diagonal = diagonal && e.is_diagonal();
    if (diagonal) r.value("in_ch", groups::ch_filter(g, cls, act, groups::coordinate_stabilizers(g)).size());
    if (a.fixture == "cyclic" && in.action_name == "flip") {
      const std::size_t stated = a.n % 2 == 0 ? 1 : 2;
      r.value("flip_invariant_elements_stated", stated, "paper");
      r.check("flip-parity", Status::open_question,
              "engine counts " + std::to_string(fixed_elems) + ", the text states " + std::to_string(stated));
    }
  }
}

// ---- toric ----------------------------------------------------------------------------------

void cmd_toric(const Args& a, RunReport& r) {
  std::size_t n = a.n;
  std::string gen_text = a.gens, perm_text = a.perm;
  if (!a.fixture.empty()) {
    if (a.fixture == "z5sq-cycle") {
      n = 3;
      gen_text = "1,4,0@5;0,1,4@5";
      perm_text = "(1 2 3)";
    } else if (a.fixture == "z2-swap") {
      n = 2;
      gen_text = "1,1@2";
      perm_text = "(1 2)";
    } else {
      throw ParseError("unknown toric fixture '" + a.fixture + "'");
    }
  }
  toric::LatticePair lp;
  toric::Triangulation t;
  if (!a.triangulation.empty()) {
    auto doc = toric::read_triangulation(read_file(a.triangulation));
    lp = std::move(doc.lp);
    t = std::move(doc.t);
    n = lp.n;
  } else {
    if (n == 0) throw ParseError("toric needs --n or --fixture");
    lp = toric::build_lattice_pair(n, toric::parse_h_generators(gen_text, n));
  }
  const auto s = toric::parse_perm(perm_text, n);
  if (!toric::preserves(lp, s)) throw NotInvariant("the permutation does not preserve N");
  const auto order = a.order == "reverse-lex" ? toric::InsertionOrder::reverse_lex : toric::InsertionOrder::lex;
  if (a.order != "lex" && a.order != "reverse-lex") throw ParseError("--order must be lex or reverse-lex");
  const bool constructed = a.triangulation.empty();
  if (constructed) t = toric::adjusted_triangulation(lp, s, order);

  r.set_input(toric::write_triangulation(lp, t) + s.to_string());
  r.value("n", n);
  r.value("generators", toric::format_h_generators(lp.gens));
  r.value("perm", s.to_string());
  r.value("group_order", int_json(lp.order));

  const auto crep = toric::verify_crepant(t, lp);
  r.value("simplices", t.simplices.size());
  r.value("crepant", crep.ok);
  r.value("face_to_face", crep.face_to_face);
  r.check("crepant", crep.ok ? Status::pass : Status::fail,
          crep.failures.empty() ? "" : crep.failures.front());

  const auto rep = toric::theorem2_check(t, lp, s);
  r.value("L", int_json(rep.lefschetz));
  r.value("fixed", int_json(rep.fixed_elements));
  r.value("index", int_json(rep.lattice_index));
  r.value("cycle_product", int_json(rep.cycle_product));
  r.value("cone_volume", exact::to_string(rep.cone_volume));
  r.value("affine_volume", exact::to_string(rep.affine_volume));
  r.value("adjusted", rep.adjusted);
  r.value("invariant_maximal", rep.invariant_maximal);
  r.check("adjusted", rep.adjusted ? Status::pass : Status::fail);
  r.check("claim1", rep.claim1 ? Status::pass : Status::fail, "L = Π l · V");
  r.check("claim2", rep.claim2 ? Status::pass : Status::fail, "V = |H^h| / Π l = index / Π l");
  r.check("final_equality", rep.final_equality ? Status::pass : Status::fail, "L = |H^h|");
  if (constructed) {
    const auto other = order == toric::InsertionOrder::lex ? toric::InsertionOrder::reverse_lex
                                                            : toric::InsertionOrder::lex;
    const auto t2 = toric::adjusted_triangulation(lp, s, other);
    const auto l2 = toric::toric_lefschetz(t2, lp, s);
    r.value("L_other_order", int_json(l2));
    bool same = l2 == rep.lefschetz;
    std::string detail = t2.simplices == t.simplices ? "insertion orders agree" : "insertion orders differ";
    if (const auto f = toric::flip_orbit(t, s)) {
      const auto l3 = toric::toric_lefschetz(*f, lp, s);
      r.value("L_flipped", int_json(l3));
      same = same && l3 == rep.lefschetz;
      detail += "; flipped orbit compared";
    }
    r.check("choice_independence", same ? Status::pass : Status::fail, detail);
  }
  if (!a.out.empty()) write_file(a.out, toric::write_triangulation(lp, t));
}

// ---- orbifold -------------------------------------------------------------------------------

void cmd_orbifold(const Args& a, RunReport& r) {
  orbifold::GSpaceSheet sheet;
  if (!a.sheet.empty()) {
    const std::string text = read_file(a.sheet);
    sheet = orbifold::read_sheet(text);
    r.set_input(text);
  } else if (a.fixture == "quintic-swap") {
    sheet = orbifold::quintic_sheet(orbifold::QuinticVariant::swap);
  } else if (a.fixture == "quintic-swap-two-pairs") {
    sheet = orbifold::quintic_sheet(orbifold::QuinticVariant::swap_two_pairs);
  } else if (a.fixture == "quintic-identity") {
    sheet = orbifold::quintic_sheet(orbifold::QuinticVariant::identity);
  } else if (a.fixture == "lt-complete-intersection") {
    sheet = orbifold::lt_sheet();
  } else if (a.fixture == "point") {
    sheet = orbifold::point_sheet();
  } else {
    throw ParseError(a.fixture.empty() ? "orbifold needs --fixture or --sheet"
                                       : "unknown orbifold fixture '" + a.fixture + "'");
  }
  r.value("sheet", sheet.name);
  r.value("group_order", int_json(sheet.group_order));
  std::size_t in_ch = 0;
  for (const auto& c : sheet.classes) in_ch += c.in_ch ? 1 : 0;
  r.value("classes", sheet.classes.size());
  r.value("in_ch", in_ch);

  bool has_euler = true;
  for (const auto& c : sheet.classes) has_euler = has_euler && c.euler_quotient.has_value();
  if (has_euler) {
    try {
      r.value("e", int_json(orbifold::euler_orbifold(sheet)));
      if (auto dc = orbifold::euler_double_count(sheet)) {
        r.value("e_double_count", exact::to_string(*dc));
        r.check("euler_double_count", Status::pass);
      }
    } catch (const InconsistentSheet& e) {
      r.check("euler_double_count", Status::fail, e.what());
    }
  }

  const auto L = orbifold::lefschetz_theorem1(sheet);
  // a value is only as strong as its weakest input
  std::string prov = "derived";
  bool any_paper = false, all_trivial = true;
  for (const auto& c : sheet.classes)
    if (c.in_ch && c.lefschetz_quotient) {
      any_paper = any_paper || c.lefschetz_quotient->provenance == orbifold::Provenance::paper;
      all_trivial = all_trivial && c.lefschetz_quotient->provenance == orbifold::Provenance::trivial;
    }
  if (any_paper) prov = "paper";
  else if (all_trivial) prov = "trivial";
  r.value("L", int_json(L), prov);

  json decomp = json::object();
  for (const auto& [k, v] : orbifold::lefschetz_decomposition(sheet)) {
    const std::string key = k == orbifold::identity_key ? "identity" : k == -2 ? "unknown_dim" : "dim" + std::to_string(k);
    decomp[key] = {{"count", v.count}, {"total", int_json(v.total)}};
  }
  r.value("decomposition", decomp);

  const auto chain = orbifold::chain_check(sheet);
  if (chain.has_strata) {
    r.value("chain_strata_stage", exact::to_string(chain.strata_stage));
    r.check("chain", chain.ok ? Status::pass : Status::fail, chain.mismatch);
  }
  for (const auto& p : sheet.stated_checks)
    r.check("stated: " + p.quantity, p.agrees() ? Status::pass : Status::fail,
            "stated " + p.stated.get_str() + ", engine " + p.engine.get_str());
  if (!a.out.empty()) write_file(a.out, orbifold::write_sheet(sheet));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant McKay and Lefschetz computations"};
  app.require_subcommand(1);
  Args a;
  auto add_common = [&](CLI::App* sub) { sub->add_flag("--json", a.json, "Print the structured report"); };

  auto* g = app.add_subcommand("group", "Close a matrix group and count invariant classes");
  g->add_option("--fixture", a.fixture, "cyclic | binary-dihedral | binary-tetrahedral | quaternion | quintic | lt");
  g->add_option("--n", a.n, "Order for cyclic, r for binary-dihedral")->each([&](const std::string&) { a.n_set = true; });
  g->add_option("--gens", a.gens, "Generators, e.g. \"[[z4^1,0],[0,z4^3]]\" separated by ';'");
  g->add_option("--action", a.action, "identity | swap | flip | triality | swap-two-pairs | default | matrix");
  g->add_option("--cap", a.cap, "Closure cap");
  g->add_flag("--projective", a.projective, "Close modulo scalars");
  add_common(g);

  auto* t = app.add_subcommand("toric", "Build and check an h-adjusted crepant triangulation");
  t->add_option("--fixture", a.fixture, "z5sq-cycle | z2-swap");
  t->add_option("--n", a.n, "Dimension");
  t->add_option("--gen,--gens", a.gens, "H generators \"a_1,...,a_n@m;...\"");
  t->add_option("--perm", a.perm, "Permutation in cycle notation");
  t->add_option("--order", a.order, "Insertion order: lex | reverse-lex");
  t->add_option("--triangulation", a.triangulation, "Verify a triangulation document instead of building one");
  t->add_option("--out", a.out, "Write the triangulation document");
  add_common(t);

  auto* o = app.add_subcommand("orbifold", "Evaluate the orbifold Euler and Lefschetz formulas");
  o->add_option("--fixture", a.fixture,
                "quintic-swap | quintic-swap-two-pairs | quintic-identity | lt-complete-intersection | point");
  o->add_option("--sheet", a.sheet, "Sheet document");
  o->add_option("--out", a.out, "Write the sheet document");
  add_common(o);

  auto* v = app.add_subcommand("verify", "Run the property suite");
  v->add_option("--seed", a.seed, "Random seed");
  v->add_option("--only", a.only, "Comma-separated check names");
  v->add_option("--max-n", a.max_n, "Largest |H| in the planar sweep");
  v->add_option("--random", a.random_instances, "Random three-dimensional instances");
  add_common(v);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::parse_error;
  }

  CLI::App* chosen = app.get_subcommands().front();
  RunReport report(chosen->get_name(), args);
  try {
    if (chosen == g) {
      cmd_group(a, report);
    } else if (chosen == t) {
      cmd_toric(a, report);
    } else if (chosen == o) {
      cmd_orbifold(a, report);
    } else {
      VerifyOptions vo;
      vo.seed = a.seed;
      vo.max_n = a.max_n;
      vo.random_instances = a.random_instances;
      std::stringstream ss(a.only);
      for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) vo.only.insert(item);
      for (const auto& name : vo.only) {
        const auto& known = verify_check_names();
        if (std::find(known.begin(), known.end(), name) == known.end())
          throw ParseError("unknown check '" + name + "'");
      }
      run_verify(vo, report);
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::cap_exceeded;
  } catch (const UnsupportedDimension& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::unsupported;
  } catch (const InconsistentSheet& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::property_failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::parse_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::parse_error;
  }

  if (a.json) {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.summary();
  }
  return report.failed() ? exit_code::property_failure : exit_code::ok;
}

}  // namespace mckay::cli
