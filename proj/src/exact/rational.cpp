#include "mckay/exact/rational.hpp"

#include <stdexcept>

#include "mckay/errors.hpp"

namespace mckay::exact {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Int parse_int(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw ParseError("empty integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ParseError("bad integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rat(num, den);
}

Int floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rat frac(const Rat& r) {
  Rat f = r - Rat(floor(r));
  f.canonicalize();
  return f;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

bool lex_less(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

}  // namespace mckay::exact
