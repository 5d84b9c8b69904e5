#include "mckay/groups/group.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

#include "mckay/errors.hpp"

namespace mckay::groups {

GroupElement projective_normalize(const GroupElement& g) {
  for (const auto& x : g.matrix().data()) {
    if (x.is_zero()) continue;
    if (x.is_one()) return g;
    // Roots of unity in Q(ζ_m) have order dividing 2m.
    const unsigned m = x.conductor();
    if (!x.pow(2 * m).is_one()) throw std::invalid_argument("leading entry is not a root of unity");
    return g.scaled(x.pow(2 * m - 1));
  }
  throw std::invalid_argument("zero matrix");
}

GroupElement FiniteMatrixGroup::normalize(const GroupElement& g) const {
  return norm_ == Normalization::projective ? projective_normalize(g) : g;
}

Key FiniteMatrixGroup::key_of(const GroupElement& g) const { return normalize(g).key(conductor_); }

std::optional<std::size_t> FiniteMatrixGroup::find(const GroupElement& g) const {
  if (g.dim() != dim()) return std::nullopt;
  GroupElement ng;
  try {
    ng = normalize(g);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (conductor_ % ng.conductor() == 0) {
    auto it = index_.find(ng.key(conductor_));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  // Entries written over a larger field; compare after lifting.
  for (std::size_t i = 0; i < order(); ++i)
    if (elements_[i] == ng) return i;
  return std::nullopt;
}

FiniteMatrixGroup FiniteMatrixGroup::close(const std::vector<GroupElement>& gens, const ClosureOptions& opts) {
  if (gens.empty()) throw std::invalid_argument("at least one generator is required");
  FiniteMatrixGroup G;
  G.gens_ = gens;
  G.norm_ = opts.normalization;
  const std::size_t n = gens.front().dim();
  for (const auto& g : gens) {
    if (g.dim() != n) throw std::invalid_argument("generators have different dimensions");
    G.conductor_ = std::lcm(G.conductor_, g.conductor());
  }

  std::vector<GroupElement> gen_norm;
  for (const auto& g : gens) gen_norm.push_back(G.normalize(g));

  std::map<Key, GroupElement> seen;
  std::deque<GroupElement> queue;
  GroupElement e = GroupElement::identity(n);
  seen.emplace(e.key(G.conductor_), e);
  queue.push_back(e);
  while (!queue.empty()) {
    GroupElement x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gen_norm) {
      GroupElement y = G.normalize(x * g);
      Key k = y.key(G.conductor_);
      if (seen.count(k)) continue;
      if (seen.size() >= opts.cap)
        throw CapExceeded("group closure exceeded cap of " + std::to_string(opts.cap) + " elements");
      seen.emplace(std::move(k), y);
      queue.push_back(std::move(y));
    }
  }

  G.elements_.reserve(seen.size());
  for (auto& [k, v] : seen) {
    G.index_.emplace(k, G.elements_.size());
    G.elements_.push_back(std::move(v));
  }
  G.identity_ = G.index_.at(e.key(G.conductor_));
  G.table_ = opts.exec == Exec::parallel
                 ? multiplication_table_parallel(G.elements_, G.index_, G.conductor_, G.norm_)
                 : multiplication_table_serial(G.elements_, G.index_, G.conductor_, G.norm_);
  const std::size_t N = G.order();
  G.inverse_.assign(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (G.mul(i, j) == G.identity_) {
        G.inverse_[i] = j;
        break;
      }
  return G;
}

bool FiniteMatrixGroup::is_abelian() const {
  for (std::size_t i = 0; i < order(); ++i)
    for (std::size_t j = i + 1; j < order(); ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

}  // namespace mckay::groups
