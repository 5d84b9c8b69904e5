#include "mckay/toric/lattice_pair.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "mckay/errors.hpp"
#include "mckay/exact/lattice.hpp"
#include "mckay/exact/linalg.hpp"

namespace mckay::toric {

Point frac(const Point& x) {
  Point r;
  r.reserve(x.size());
  for (const auto& v : x) r.push_back(exact::frac(v));
  return r;
}

LatticePair build_lattice_pair(std::size_t n, std::vector<HGenerator> gens) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  LatticePair lp;
  lp.n = n;
  RatMat all(n + gens.size(), n);
  for (std::size_t i = 0; i < n; ++i) all(i, i) = 1;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const auto& g = gens[j];
    if (g.a.size() != n) throw std::invalid_argument("generator length differs from dimension");
    if (g.m <= 0) throw std::invalid_argument("generator modulus must be positive");
    Int sum = std::accumulate(g.a.begin(), g.a.end(), Int(0));
    if (sum % g.m != 0) throw NotSpecialLinear("generator " + format_h_generators({g}) + " has exponent sum " +
                                               sum.get_str() + " not divisible by " + g.m.get_str());
    for (std::size_t i = 0; i < n; ++i) all(n + j, i) = exact::make_rat(g.a[i], g.m);
  }
  lp.gens = std::move(gens);
  lp.basis = exact::lattice_basis(all);
  lp.order = exact::lattice_index(RatMat::identity(n), lp.basis);
  return lp;
}

std::vector<Int> LatticePair::coordinates(const Point& x) const {
  auto c = exact::lattice_coordinates(basis, x);
  if (!c) throw std::domain_error("point is not in N");
  return *c;
}

bool LatticePair::contains(const Point& x) const { return exact::lattice_contains(basis, x); }

std::vector<Point> LatticePair::coset_representatives() const {
  std::set<Point, decltype(&exact::lex_less)> seen(&exact::lex_less);
  std::vector<Point> frontier{Point(n, Rat(0))};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Point> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Point y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = exact::frac(x[i] + exact::make_rat(g.a[i], g.m));
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Point> LatticePair::base_points() const {
  std::vector<Point> out;
  for (auto& r : coset_representatives()) {
    Rat s = std::accumulate(r.begin(), r.end(), Rat(0));
    if (s == 1) out.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Point e(n, Rat(0));
    e[i] = 1;
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), exact::lex_less);
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p == s.npos ? s.npos : p - start)));
    if (p == s.npos) return out;
    start = p + 1;
  }
}

}  // namespace

std::vector<HGenerator> parse_h_generators(std::string_view text, std::size_t n) {
  std::vector<HGenerator> out;
  for (auto item : split(text, ';')) {
    if (item.empty()) continue;
    auto at = item.find('@');
    if (at == item.npos) throw ParseError("generator '" + std::string(item) + "' lacks '@m'");
    HGenerator g;
    for (auto a : split(item.substr(0, at), ',')) g.a.push_back(exact::parse_int(a));
    g.m = exact::parse_int(trim(item.substr(at + 1)));
    if (g.a.size() != n)
      throw ParseError("generator '" + std::string(item) + "' has " + std::to_string(g.a.size()) +
                       " entries, expected " + std::to_string(n));
    if (g.m <= 0) throw ParseError("generator modulus must be positive in '" + std::string(item) + "'");
    out.push_back(std::move(g));
  }
  return out;
}

std::string format_h_generators(const std::vector<HGenerator>& gens) {
  std::string out;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (j) out += ";";
    for (std::size_t i = 0; i < gens[j].a.size(); ++i) {
      if (i) out += ",";
      out += gens[j].a[i].get_str();
    }
    out += "@" + gens[j].m.get_str();
  }
  return out;
}

PermSymmetry PermSymmetry::identity(std::size_t n) {
  PermSymmetry s;
  s.perm.resize(n);
  std::iota(s.perm.begin(), s.perm.end(), 0);
  return s;
}

std::vector<std::vector<std::size_t>> PermSymmetry::cycles() const {
  std::vector<bool> seen(n(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < n(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> c;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::size_t> PermSymmetry::cycle_type() const {
  std::vector<std::size_t> t;
  for (const auto& c : cycles()) t.push_back(c.size());
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::size_t PermSymmetry::order() const {
  std::size_t l = 1;
  for (auto c : cycle_type()) l = std::lcm(l, c);
  return l;
}

bool PermSymmetry::is_identity() const {
  for (std::size_t i = 0; i < n(); ++i)
    if (perm[i] != i) return false;
  return true;
}

Point PermSymmetry::apply(const Point& x) const {
  Point y(x.size());
  for (std::size_t i = 0; i < n(); ++i) y[perm[i]] = x[i];
  return y;
}

PermSymmetry PermSymmetry::inverse() const {
  PermSymmetry s;
  s.perm.resize(n());
  for (std::size_t i = 0; i < n(); ++i) s.perm[perm[i]] = i;
  return s;
}

IntMat PermSymmetry::matrix() const {
  IntMat p(n(), n());
  for (std::size_t i = 0; i < n(); ++i) p(perm[i], i) = 1;
  return p;
}

std::string PermSymmetry::to_string() const {
  std::string out;
  for (const auto& c : cycles()) {
    if (c.size() == 1) continue;
    out += "(";
    for (std::size_t k = 0; k < c.size(); ++k) out += (k ? " " : "") + std::to_string(c[k] + 1);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

PermSymmetry parse_perm(std::string_view text, std::size_t n) {
  PermSymmetry s = PermSymmetry::identity(n);
  std::vector<bool> used(n, false);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in permutation '" + std::string(text) + "'");
    ++i;
    std::vector<std::size_t> cyc;
    for (;;) {
      skip();
      if (i >= text.size()) throw ParseError("unterminated cycle in '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ParseError("unexpected character in permutation '" + std::string(text) + "'");
      long v = std::stol(std::string(text.substr(start, i - start)));
      if (v < 1 || static_cast<std::size_t>(v) > n)
        throw ParseError("permutation point " + std::to_string(v) + " outside 1.." + std::to_string(n));
      std::size_t p = static_cast<std::size_t>(v - 1);
      if (used[p]) throw ParseError("point " + std::to_string(v) + " appears twice in '" + std::string(text) + "'");
      used[p] = true;
      cyc.push_back(p);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) s.perm[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip();
  }
  return s;
}

bool preserves(const LatticePair& lp, const PermSymmetry& s) {
  if (s.n() != lp.n) return false;
  for (std::size_t i = 0; i < lp.basis.rows(); ++i)
    if (!lp.contains(s.apply(lp.basis.row_vector(i)))) return false;
  return true;
}

RatMat fixed_subspace(const PermSymmetry& s) {
  auto cyc = s.cycles();
  RatMat L(cyc.size(), s.n());
  for (std::size_t k = 0; k < cyc.size(); ++k)
    for (auto i : cyc[k]) L(k, i) = 1;
  return L;
}

}  // namespace mckay::toric
