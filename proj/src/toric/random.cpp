#include "mckay/toric/random.hpp"

namespace mckay::toric {

namespace {

HGenerator random_generator(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> mod(2, 7);
  const long m = mod(rng);
  std::uniform_int_distribution<long> coef(0, m - 1);
  const long a0 = coef(rng), a1 = coef(rng);
  const long a2 = ((-(a0 + a1)) % m + m) % m;
  return HGenerator{{Int(a0), Int(a1), Int(a2)}, Int(m)};
}

HGenerator image(const HGenerator& g, const PermSymmetry& s) {
  HGenerator out{std::vector<Int>(g.a.size()), g.m};
  for (std::size_t i = 0; i < g.a.size(); ++i) out.a[s.perm[i]] = g.a[i];
  return out;
}

}  // namespace

RandomInstance random_instance(std::mt19937_64& rng, unsigned max_order) {
  std::bernoulli_distribution three(0.5), two_gens(0.3);
  for (;;) {
    PermSymmetry s = three(rng) ? PermSymmetry{{1, 2, 0}} : PermSymmetry{{1, 0, 2}};
    std::vector<HGenerator> gens;
    const int count = two_gens(rng) ? 2 : 1;
    for (int k = 0; k < count; ++k) {
      HGenerator g = random_generator(rng);
      for (std::size_t j = 0; j < s.order(); ++j) {
        gens.push_back(g);
        g = image(g, s);
      }
    }
    LatticePair lp = build_lattice_pair(3, gens);
    if (lp.order > 1 && lp.order <= max_order) return {std::move(lp), std::move(s)};
  }
}

}  // namespace mckay::toric
