#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mckay/exec.hpp"
#include "mckay/groups/element.hpp"

namespace mckay::groups {

enum class Normalization {
  none,
  /// Each element is rescaled so that its first nonzero entry (row-major) is 1.
  projective,
};

struct ClosureOptions {
  std::size_t cap = 10000;
  Normalization normalization = Normalization::none;
  Exec exec = Exec::parallel;
};

using Key = std::vector<Int>;

/// Rescales g as described by Normalization::projective. Throws std::invalid_argument when the
/// leading entry is not a root of unity.
GroupElement projective_normalize(const GroupElement& g);

/// Product table kernels: entry i*n+j is the index of elements[i]*elements[j].
/// `lookup` maps normalized keys to indices; throws std::logic_error on a missing product.
std::vector<std::uint32_t> multiplication_table_serial(const std::vector<GroupElement>& elements,
                                                       const std::map<Key, std::size_t>& lookup,
                                                       unsigned conductor, Normalization norm);
std::vector<std::uint32_t> multiplication_table_parallel(const std::vector<GroupElement>& elements,
                                                         const std::map<Key, std::size_t>& lookup,
                                                         unsigned conductor, Normalization norm);

class FiniteMatrixGroup {
 public:
  /// Smallest group containing gens, elements sorted by canonical key. Throws CapExceeded.
  static FiniteMatrixGroup close(const std::vector<GroupElement>& gens, const ClosureOptions& opts = {});

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t dim() const noexcept { return elements_.front().dim(); }
  unsigned conductor() const noexcept { return conductor_; }
  Normalization normalization() const noexcept { return norm_; }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<GroupElement>& generators() const noexcept { return gens_; }

  std::size_t identity_index() const noexcept { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::uint32_t>& table() const noexcept { return table_; }

  /// Canonical form of g under this group's normalization.
  GroupElement normalize(const GroupElement& g) const;
  Key key_of(const GroupElement& g) const;
  std::optional<std::size_t> find(const GroupElement& g) const;

  bool is_abelian() const;

 private:
  std::vector<GroupElement> gens_;
  std::vector<GroupElement> elements_;
  std::map<Key, std::size_t> index_;
  std::vector<std::uint32_t> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_{0};
  unsigned conductor_{1};
  Normalization norm_{Normalization::none};
};

}  // namespace mckay::groups
