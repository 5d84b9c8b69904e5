#include "mckay/exact/smith.hpp"

namespace mckay::exact {

namespace {

void add_row_multiple(IntMat& m, std::size_t dst, std::size_t src, const Int& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= f * m(src, j);
}

void add_col_multiple(IntMat& m, std::size_t dst, std::size_t src, const Int& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= f * m(i, src);
}

void negate_row(IntMat& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMat& a) {
  const std::size_t R = a.rows();
  const std::size_t C = a.cols();
  IntMat D = a;
  IntMat U = IntMat::identity(R);
  IntMat V = IntMat::identity(C);
  std::size_t t = 0;
  for (; t < R && t < C; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block.
      std::size_t pr = R, pc = C;
      for (std::size_t i = t; i < R; ++i) {
        for (std::size_t j = t; j < C; ++j) {
          if (D(i, j) == 0) continue;
          if (pr == R || abs(D(i, j)) < abs(D(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == R) goto finished;
      D.swap_rows(t, pr);
      U.swap_rows(t, pr);
      D.swap_cols(t, pc);
      V.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (D(i, t) == 0) continue;
        Int q = tdiv(D(i, t), D(t, t));
        add_row_multiple(D, i, t, q);
        add_row_multiple(U, i, t, q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (D(t, j) == 0) continue;
        Int q = tdiv(D(t, j), D(t, t));
        add_col_multiple(D, j, t, q);
        add_col_multiple(V, j, t, q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and retry.
      std::size_t bad = R;
      for (std::size_t i = t + 1; i < R && bad == R; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == R) break;
      add_row_multiple(D, t, bad, Int(-1));
      add_row_multiple(U, t, bad, Int(-1));
    }
    if (D(t, t) < 0) {
      negate_row(D, t);
      negate_row(U, t);
    }
  }
finished:
  SmithForm out{std::move(U), std::move(D), std::move(V), 0};
  for (std::size_t i = 0; i < R && i < C; ++i)
    if (out.D(i, i) != 0) ++out.rank;
  return out;
}

std::vector<Int> invariant_factors(const IntMat& a) {
  SmithForm s = smith_normal_form(a);
  std::vector<Int> out;
  for (std::size_t i = 0; i < s.rank; ++i) out.push_back(s.D(i, i));
  return out;
}

IntMat hermite_normal_form(const IntMat& a) {
  IntMat m = a;
  const std::size_t R = m.rows();
  const std::size_t C = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    // Euclid down the column until one nonzero entry remains.
    for (;;) {
      std::size_t best = R;
      for (std::size_t i = r; i < R; ++i)
        if (m(i, c) != 0 && (best == R || abs(m(i, c)) < abs(m(best, c)))) best = i;
      if (best == R) break;
      m.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < R; ++i) {
        if (m(i, c) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
        add_row_multiple(m, i, r, q);
        if (m(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) negate_row(m, r);
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
      add_row_multiple(m, i, r, q);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  IntMat out(r, C);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < C; ++j) out(i, j) = m(i, j);
  return out;
}

IntMat integer_left_kernel(const IntMat& a) {
  SmithForm s = smith_normal_form(a);
  const std::size_t R = a.rows();
  IntMat k(R - s.rank, R);
  for (std::size_t i = s.rank; i < R; ++i)
    for (std::size_t j = 0; j < R; ++j) k(i - s.rank, j) = s.U(i, j);
  return hermite_normal_form(k);
}

}  // namespace mckay::exact
