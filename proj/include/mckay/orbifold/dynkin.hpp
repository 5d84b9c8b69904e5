#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mckay/groups/classes.hpp"

namespace mckay::orbifold {

/// Resolution graph of a surface singularity: nodes are exceptional curves, with an automorphism
/// given as a node permutation.
struct DynkinGraph {
  std::string name;
  std::size_t nodes{0};
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> automorphism;
};

/// Throws NotInvariant when the permutation does not preserve the edge set.
void check_automorphism(const DynkinGraph& g);

/// A_k chain, optionally with the end-to-end reversal.
DynkinGraph a_chain(std::size_t k, bool reversal);
/// D_r, optionally swapping the two short legs (the chain of r-2 nodes stays fixed).
DynkinGraph d_diagram(std::size_t r, bool swap_legs);
/// D_4 with the order-3 rotation of its legs.
DynkinGraph d4_triality();
/// E_6, optionally with its diagram flip.
DynkinGraph e6(bool flip);

/// 1 + number of fixed nodes: the trace on H^0 ⊕ H^2 of the resolved surface.
long dynkin_lefschetz(const DynkinGraph& g);

struct McKayReport {
  std::size_t group_order{0};
  std::size_t classes{0};
  std::size_t invariant_classes{0};
  long dynkin{0};
  bool ok() const { return static_cast<long>(invariant_classes) == dynkin; }
};

McKayReport mckay_check(const groups::FiniteMatrixGroup& g, const groups::GroupElement& h, const DynkinGraph& graph);

}  // namespace mckay::orbifold
