#include "mckay/exact/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "mckay/errors.hpp"

namespace mckay::exact {

namespace {

using Poly = std::vector<Int>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Exact division by a monic divisor; throws if a remainder is left.
Poly poly_divexact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("polynomial division underflow");
  Poly q(num.size() - dn, Int(0));
  for (std::size_t k = num.size(); k-- > dn;) {
    Int lead = num[k];
    q[k - dn] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= lead * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j)
    if (num[j] != 0) throw std::logic_error("inexact polynomial division");
  return q;
}

// In-place reduction modulo a monic polynomial of degree d.
void reduce_mod(Poly& p, const Poly& mod) {
  const std::size_t d = mod.size() - 1;
  for (std::size_t k = p.size(); k-- > d;) {
    Int lead = p[k];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) p[k - d + j] -= lead * mod[j];
  }
  p.resize(d, Int(0));
}

Poly compute_phi(unsigned m) {
  Poly num(m + 1, Int(0));
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) num = poly_divexact(std::move(num), cyclotomic_polynomial(d));
  return num;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  static std::mutex mu;
  static std::map<unsigned, Poly> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  Poly phi = compute_phi(m);
  std::lock_guard lock(mu);
  return cache.emplace(m, std::move(phi)).first->second;
}

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CycloInt::CycloInt(const Int& value, unsigned conductor) : m_(conductor) {
  if (conductor == 0) throw std::invalid_argument("conductor must be positive");
  c_.assign(euler_phi(conductor), Int(0));
  c_[0] = value;
}

CycloInt CycloInt::from_poly(unsigned m, std::vector<Int> poly) {
  CycloInt r(Int(0), m);
  reduce_mod(poly, cyclotomic_polynomial(m));
  r.c_ = std::move(poly);
  return r;
}

CycloInt CycloInt::root_of_unity(unsigned m, long k) {
  long e = k % static_cast<long>(m);
  if (e < 0) e += m;
  Poly p(static_cast<std::size_t>(e) + 1, Int(0));
  p[static_cast<std::size_t>(e)] = 1;
  return from_poly(m, std::move(p));
}

CycloInt CycloInt::lifted(unsigned M) const {
  if (M == m_) return *this;
  if (M % m_ != 0) throw std::invalid_argument("lift target must be a multiple of the conductor");
  const unsigned step = M / m_;
  Poly p(c_.size() * step, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
  return from_poly(M, std::move(p));
}

bool CycloInt::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycloInt::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

CycloInt CycloInt::operator-() const {
  CycloInt r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloInt operator+(const CycloInt& a, const CycloInt& b) {
  const unsigned M = std::lcm(a.m_, b.m_);
  CycloInt r = a.lifted(M);
  const CycloInt bl = b.lifted(M);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += bl.c_[i];
  return r;
}

CycloInt operator-(const CycloInt& a, const CycloInt& b) { return a + (-b); }

CycloInt operator*(const CycloInt& a, const CycloInt& b) {
  if (a.is_zero() || b.is_zero()) return CycloInt(Int(0), std::lcm(a.m_, b.m_));
  const unsigned M = std::lcm(a.m_, b.m_);
  const CycloInt al = a.lifted(M);
  const CycloInt bl = b.lifted(M);
  return CycloInt::from_poly(M, poly_mul(al.c_, bl.c_));
}

CycloInt CycloInt::pow(unsigned e) const {
  CycloInt result(Int(1), m_);
  CycloInt base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const CycloInt& a, const CycloInt& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  const unsigned M = std::lcm(a.m_, b.m_);
  return a.lifted(M).c_ == b.lifted(M).c_;
}

bool is_zero_value(const CycloInt& x) { return x.is_zero(); }

std::string CycloInt::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Int& c = c_[i];
    if (c == 0) continue;
    Int mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "z" + std::to_string(m_) + "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i{0};
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  bool eat(char ch) {
    skip();
    if (i < s.size() && s[i] == ch) {
      ++i;
      return true;
    }
    return false;
  }
  std::string_view digits() {
    skip();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw ParseError("expected digits at offset " + std::to_string(start) + " in '" + std::string(s) + "'");
    return s.substr(start, i - start);
  }
};

long to_long(std::string_view d) {
  if (d.size() > 9) throw ParseError("number too large: " + std::string(d));
  return std::stol(std::string(d));
}

CycloInt parse_term(Cursor& cur) {
  cur.skip();
  Int coeff = 1;
  bool have_coeff = false;
  if (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
    coeff = Int(std::string(cur.digits()));
    have_coeff = true;
    if (!cur.eat('*')) return CycloInt(coeff);
  }
  if (!cur.eat('z')) {
    throw ParseError(have_coeff ? "expected 'z' after '*'" : "expected a term in '" + std::string(cur.s) + "'");
  }
  long m = to_long(cur.digits());
  if (m <= 0) throw ParseError("root-of-unity order must be positive");
  long k = 1;
  if (cur.eat('^')) {
    bool neg = cur.eat('-');
    k = to_long(cur.digits());
    if (neg) k = -k;
  }
  return CycloInt::root_of_unity(static_cast<unsigned>(m), k) * CycloInt(coeff);
}

}  // namespace

CycloInt parse_cyclo(std::string_view text) {
  Cursor cur{text};
  if (cur.done()) throw ParseError("empty cyclotomic expression");
  bool neg = cur.eat('-');
  CycloInt acc = parse_term(cur);
  if (neg) acc = -acc;
  while (!cur.done()) {
    if (cur.eat('+')) {
      acc = acc + parse_term(cur);
    } else if (cur.eat('-')) {
      acc = acc - parse_term(cur);
    } else {
      throw ParseError("unexpected character '" + std::string(1, cur.s[cur.i]) + "' in '" + std::string(text) + "'");
    }
  }
  return acc;
}

}  // namespace mckay::exact
