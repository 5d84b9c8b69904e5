#include <stdexcept>

#include "mckay/groups/group.hpp"

namespace mckay::groups {

namespace {

std::uint32_t product_index(const std::vector<GroupElement>& el, const std::map<Key, std::size_t>& lookup,
                            unsigned M, Normalization norm, std::size_t i, std::size_t j) {
  GroupElement p = el[i] * el[j];
  if (norm == Normalization::projective) p = projective_normalize(p);
  auto it = lookup.find(p.key(M));
  if (it == lookup.end()) throw std::logic_error("product left the element set");
  return static_cast<std::uint32_t>(it->second);
}

}  // namespace

std::vector<std::uint32_t> multiplication_table_serial(const std::vector<GroupElement>& elements,
                                                       const std::map<Key, std::size_t>& lookup,
                                                       unsigned conductor, Normalization norm) {
  const std::size_t n = elements.size();
  std::vector<std::uint32_t> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = product_index(elements, lookup, conductor, norm, i, j);
  return t;
}

std::vector<std::uint32_t> multiplication_table_parallel(const std::vector<GroupElement>& elements,
                                                         const std::map<Key, std::size_t>& lookup,
                                                         unsigned conductor, Normalization norm) {
  const std::size_t n = elements.size();
  std::vector<std::uint32_t> t(n * n);
  // Warm the shared Φ_m cache before threads start.
  (void)exact::cyclotomic_polynomial(conductor);
  bool failed = false;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      try {
        t[i * n + j] = product_index(elements, lookup, conductor, norm, i, j);
      } catch (...) {
#pragma omp atomic write
        failed = true;
      }
    }
  }
  if (failed) throw std::logic_error("product left the element set");
  return t;
}

}  // namespace mckay::groups
