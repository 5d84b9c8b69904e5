#include "mckay/exact/linalg.hpp"

#include <stdexcept>

namespace mckay::exact {

Int determinant(const IntMat& a) {
  if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Int(1);
  IntMat m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return Int(0);
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

RatMat rref(const RatMat& a, std::vector<std::size_t>* pivots) {
  RatMat m = a;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    Rat inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

Rat determinant(const RatMat& a) {
  if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
  RatMat m = a;
  const std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      m.swap_rows(c, p);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rat f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::size_t rank(const RatMat& a) {
  std::vector<std::size_t> piv;
  rref(a, &piv);
  return piv.size();
}

std::optional<std::vector<Rat>> solve(const RatMat& a, const std::vector<Rat>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  RatMat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> piv;
  RatMat r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  std::vector<Rat> x(a.cols(), Rat(0));
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, a.cols());
  return x;
}

RatMat inverse(const RatMat& a) {
  if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  RatMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  RatMat r = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

IntMat clear_denominators(const RatMat& a, Int* scale) {
  Int s = 1;
  for (const auto& x : a.data()) s = lcm(s, Int(x.get_den()));
  IntMat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Rat v = a(i, j) * s;
      out(i, j) = v.get_num();
    }
  }
  if (scale) *scale = s;
  return out;
}

IntMat to_integer(const RatMat& a) {
  IntMat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!is_integer(a(i, j))) throw std::domain_error("fractional entry");
      out(i, j) = a(i, j).get_num();
    }
  }
  return out;
}

RatMat nullspace(const RatMat& a) {
  std::vector<std::size_t> piv;
  RatMat r = rref(a, &piv);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(a.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  RatMat out(basis.size(), a.cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = basis[i][j];
  return out;
}

}  // namespace mckay::exact
