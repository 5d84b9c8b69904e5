#include "mckay/orbifold/quintic.hpp"

#include <bit>
#include <stdexcept>

namespace mckay::orbifold::quintic {

namespace {

// A basis vector of an eigenspace of h·g': a fixed coordinate, or x_i + c·x_j for a 2-cycle.
// `vanishing` marks c^5 = -1, where the Fermat part restricts to zero on the line.
struct Item {
  Mask coords;
  bool vanishing;
};

using Eigenspace = std::vector<Item>;

// Eigenvalues live in μ_10; ω_5 = ζ_10^2.
std::vector<Eigenspace> eigenspaces(const Involution& h, const Exponents& a) {
  std::array<Eigenspace, 10> by_value;
  for (int i = 0; i < 5; ++i) {
    const int j = h[static_cast<std::size_t>(i)];
    if (j == i) {
      by_value[static_cast<std::size_t>((2 * a[i]) % 10)].push_back({Mask{1} << i, false});
    } else if (i < j) {
      const int s = a[i] + a[j];
      const int plus = (6 * s) % 10;  // the square root κ with κ^5 = 1
      const Mask m = (Mask{1} << i) | (Mask{1} << j);
      by_value[static_cast<std::size_t>(plus)].push_back({m, false});
      by_value[static_cast<std::size_t>((plus + 5) % 10)].push_back({m, true});
    }
  }
  std::vector<Eigenspace> out;
  for (auto& e : by_value)
    if (!e.empty()) out.push_back(std::move(e));
  return out;
}

// e(X ∩ P(W ∩ E_K)) where E_K is the coordinate subspace on K.
long restricted_euler(const Eigenspace& w, Mask k) {
  long a = 0, b = 0;
  Mask support = 0;
  for (const auto& it : w) {
    if ((it.coords & ~k) != 0) continue;
    support |= it.coords;
    (it.vanishing ? b : a) += 1;
  }
  if (support == 0) return 0;
  if (support == all_coordinates) {
    if (b != 0) throw std::logic_error("full-support eigenspace with a vanishing direction");
    return fermat_euler(static_cast<unsigned>(a));
  }
  // a cone with vertex P^{b-1} over a Fermat quintic in a variables
  return b + fermat_euler(static_cast<unsigned>(a));
}

}  // namespace

std::vector<Exponents> group_exponents() {
  std::vector<Exponents> out;
  for (int a1 = 0; a1 < 5; ++a1)
    for (int a2 = 0; a2 < 5; ++a2)
      for (int a3 = 0; a3 < 5; ++a3) {
        const int a4 = ((-(a1 + a2 + a3)) % 5 + 5) % 5;
        out.push_back({0, a1, a2, a3, a4});
      }
  return out;
}

long fermat_euler(unsigned k) {
  if (k <= 1) return 0;
  const long n = static_cast<long>(k) - 1;
  long p = 1;
  for (long i = 0; i <= n; ++i) p *= -4;
  return (p - 1) / 5 + n + 1;
}

std::vector<Mask> eigen_classes(const Exponents& a) {
  std::vector<Mask> out;
  Mask seen = 0;
  for (int i = 0; i < 5; ++i) {
    if (seen & (Mask{1} << i)) continue;
    Mask m = 0;
    for (int j = i; j < 5; ++j)
      if (a[j] == a[i]) m |= Mask{1} << j;
    seen |= m;
    out.push_back(m);
  }
  return out;
}

int fixed_dimension(const Exponents& a) {
  int d = -1;
  for (Mask m : eigen_classes(a)) d = std::max(d, std::popcount(m) - 2);
  return d;
}

Exponents conjugate(const Involution& h, const Exponents& a) {
  Exponents b{};
  for (int i = 0; i < 5; ++i) b[h[i]] = a[i];
  const int shift = b[0];
  for (auto& x : b) x = ((x - shift) % 5 + 5) % 5;
  return b;
}

long twisted_euler(const Involution& h, const Exponents& g, const Exponents& gp) {
  long total = 0;
  const auto ks = eigen_classes(g);
  for (const auto& w : eigenspaces(h, gp))
    for (Mask k : ks) total += restricted_euler(w, k);
  return total;
}

long open_twisted_euler(const Involution& h, Mask J, const Exponents& gp) {
  long total = 0;
  const int nj = std::popcount(J);
  for (const auto& w : eigenspaces(h, gp)) {
    // inclusion-exclusion over the coordinate subspaces inside J
    for (Mask k = J;; k = (k - 1) & J) {
      if (k != 0) {
        const long sign = ((nj - std::popcount(k)) % 2 == 0) ? 1 : -1;
        total += sign * restricted_euler(w, k);
      }
      if (k == 0) break;
    }
  }
  return total;
}

long open_euler(Mask J) {
  long total = 0;
  const int nj = std::popcount(J);
  for (Mask k = J; k != 0; k = (k - 1) & J) {
    const long sign = ((nj - std::popcount(k)) % 2 == 0) ? 1 : -1;
    total += sign * fermat_euler(static_cast<unsigned>(std::popcount(k)));
  }
  return total;
}

std::vector<long> twisted_table_serial(const Involution& h, const std::vector<Exponents>& group) {
  const std::size_t n = group.size();
  std::vector<long> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = twisted_euler(h, group[i], group[j]);
  return t;
}

std::vector<long> twisted_table_parallel(const Involution& h, const std::vector<Exponents>& group) {
  const std::size_t n = group.size();
  std::vector<long> t(n * n);
  const long total = static_cast<long>(n * n);
#pragma omp parallel for schedule(static)
  for (long idx = 0; idx < total; ++idx) {
    const auto u = static_cast<std::size_t>(idx);
    t[u] = twisted_euler(h, group[u / n], group[u % n]);
  }
  return t;
}

std::vector<long> twisted_table(const Involution& h, const std::vector<Exponents>& group, Exec exec) {
  return exec == Exec::parallel ? twisted_table_parallel(h, group) : twisted_table_serial(h, group);
}

Involution identity_involution() { return {0, 1, 2, 3, 4}; }

}  // namespace mckay::orbifold::quintic
