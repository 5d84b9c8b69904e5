#pragma once

#include <vector>

#include "mckay/groups/group.hpp"

namespace mckay::groups {

struct ConjClassSet {
  std::vector<std::vector<std::size_t>> classes;  // sorted element indices
  std::vector<std::size_t> representatives;       // smallest index of each class
  std::vector<std::size_t> class_of;              // element index -> class index
  std::size_t size() const noexcept { return classes.size(); }
};

ConjClassSet conjugacy_classes(const FiniteMatrixGroup& g);

/// Sorted element indices of a subgroup of an ambient FiniteMatrixGroup.
struct Subgroup {
  std::vector<std::size_t> members;
  std::size_t order() const noexcept { return members.size(); }
  bool contains(std::size_t i) const;
};

Subgroup whole_group(const FiniteMatrixGroup& g);
Subgroup generated_subgroup(const FiniteMatrixGroup& g, const std::vector<std::size_t>& gens);
bool is_subgroup(const FiniteMatrixGroup& g, const Subgroup& s);

/// Materializes a subgroup as a standalone group.
FiniteMatrixGroup as_group(const FiniteMatrixGroup& g, const Subgroup& s);

Subgroup centralizer(const FiniteMatrixGroup& g, std::size_t x);
/// Throws ElementNotInGroup.
Subgroup centralizer(const FiniteMatrixGroup& g, const GroupElement& x);

/// Conjugation g ↦ h·g·h⁻¹ by a normalizing element h.
struct OuterAction {
  GroupElement h;
  std::vector<std::size_t> element_perm;
  std::vector<std::size_t> class_perm;
};

/// Throws NotNormalizing when some h·g·h⁻¹ falls outside g.
OuterAction outer_action(const FiniteMatrixGroup& g, const ConjClassSet& classes, const GroupElement& h);

std::size_t invariant_class_count(const OuterAction& a);

bool is_invariant(const OuterAction& a, const Subgroup& s);

/// Number of h-invariant conjugacy classes of s (s must be h-invariant).
std::size_t con(const FiniteMatrixGroup& g, const OuterAction& a, const Subgroup& s);

/// Classes [x] such that for every h-invariant stabilizer S ∋ x, h(x) is S-conjugate to x.
/// Throws StabilizerNotSubgroup.
std::vector<std::size_t> ch_filter(const FiniteMatrixGroup& g, const ConjClassSet& classes, const OuterAction& a,
                                   const std::vector<Subgroup>& stabilizers);

/// Stabilizers of coordinate-support patterns for a diagonal group. Linear groups include the
/// stabilizer of the origin (the whole group); projective groups use nonempty supports.
std::vector<Subgroup> coordinate_stabilizers(const FiniteMatrixGroup& g);

}  // namespace mckay::groups
