#pragma once

#include <vector>

#include "mckay/exec.hpp"
#include "mckay/toric/construct.hpp"
#include "mckay/toric/triangulation.hpp"

namespace mckay::toric {

/// Torus orbit of the cone over an invariant face, with σ acting on N/(N ∩ span face).
struct OrbitRecord {
  Simplex face;         // empty for the dense orbit
  RatMat quotient_basis;  // rows in N projecting to a basis of the quotient
  IntMat action;        // σ_* on the quotient, row-vector convention
  Int contribution{0};  // det(I − action)
};

std::vector<OrbitRecord> orbit_records_serial(const Triangulation& t, const LatticePair& lp, const PermSymmetry& s);
std::vector<OrbitRecord> orbit_records_parallel(const Triangulation& t, const LatticePair& lp, const PermSymmetry& s);

/// Σ over σ-invariant faces (including the empty face) of det(I − σ_*). Throws
/// NotInvariantTriangulation if σ does not map the triangulation to itself.
Int toric_lefschetz(const Triangulation& t, const LatticePair& lp, const PermSymmetry& s, Exec exec = Exec::parallel);

/// Invariant faces τ ⊂ τ' (τ' invariant, one extra σ-fixed vertex) whose orbit contribution is
/// nonzero. Always empty; exposed for property tests.
std::vector<Simplex> fixed_ray_violations(const std::vector<OrbitRecord>& records, const Triangulation& t,
                                          const PermSymmetry& s);

/// s×s block with ones on the superdiagonal and a last row of −1.
IntMat block_matrix(unsigned s);
/// det(I − A_s): s + 1 for s ≥ 2, and 0 for s = 1 (A_1 taken as the 1×1 identity block).
Int block_det(unsigned s);

/// |H^σ| by enumerating N/M.
Int count_fixed_elements_serial(const LatticePair& lp, const PermSymmetry& s);
Int count_fixed_elements_parallel(const LatticePair& lp, const PermSymmetry& s);
Int count_fixed_elements(const LatticePair& lp, const PermSymmetry& s, Exec exec = Exec::parallel);

/// [N ∩ L : M ∩ L].
Int fixed_lattice_index(const LatticePair& lp, const PermSymmetry& s);

struct Theorem2Report {
  Int lefschetz{0};
  Int fixed_elements{0};
  Int lattice_index{0};
  Int cycle_product{1};  // Π of cycle lengths
  Rat cone_volume{0};    // |det| of the cycle barycenters in a basis of N ∩ L
  Rat affine_volume{0};  // normalized volume of L ∩ bΔ in its affine lattice (informational)
  std::size_t simplex_count{0};
  std::size_t invariant_maximal{0};
  bool crepant{false};
  bool adjusted{false};
  bool claim1{false};  // L = Π l · V
  bool claim2{false};  // V = |H^σ| / Π l
  bool final_equality{false};  // L = |H^σ|
  bool ok() const { return crepant && adjusted && claim1 && claim2 && final_equality; }
};

Theorem2Report theorem2_check(const LatticePair& lp, const PermSymmetry& s, InsertionOrder order = InsertionOrder::lex,
                              Exec exec = Exec::parallel);
Theorem2Report theorem2_check(const Triangulation& t, const LatticePair& lp, const PermSymmetry& s,
                              Exec exec = Exec::parallel);

}  // namespace mckay::toric
