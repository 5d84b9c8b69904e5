#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mckay/exact/rational.hpp"

namespace mckay::orbifold {

using exact::Int;
using exact::Rat;

enum class Provenance { paper, derived, trivial };

std::string to_string(Provenance p);
/// Throws ParseError on an unknown tag.
Provenance parse_provenance(const std::string& s);

struct Tagged {
  Int value{0};
  Provenance provenance{Provenance::derived};
  friend bool operator==(const Tagged&, const Tagged&) = default;
};

struct ClassRecord {
  std::string label;
  Int size{1};
  Int centralizer_order{1};
  bool identity{false};
  bool in_ch{false};
  std::optional<int> fixed_dim;               // dimension of X^g; -1 when empty
  std::optional<Tagged> euler_quotient;       // e(X^g/C(g))
  std::optional<Tagged> lefschetz_quotient;   // L(h, X^g/C(g))
  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

/// One G-conjugacy class of stabilizers [S] and its stratum X^{[S]}.
struct StratumRecord {
  std::string label;
  Int order{1};             // |S|
  Int class_count{1};       // conjugacy classes of S
  Tagged euler_stratum;     // e(X^{[S]})
  std::optional<Tagged> lefschetz_stratum;  // L(h, X^{[S]})
  bool h_invariant{true};
  Int con_h{0};
  friend bool operator==(const StratumRecord&, const StratumRecord&) = default;
};

/// `pairs` commuting pairs (g, g') with g ∈ [g_class], g' ∈ [h_class] sharing e(X^g ∩ X^{g'}) = euler.
struct CommutingPairRecord {
  std::string g_class, h_class;
  Int pairs{1};
  Int euler{0};
  friend bool operator==(const CommutingPairRecord&, const CommutingPairRecord&) = default;
};

/// A stated constant next to the value the engine recomputed for it.
struct StatedCheck {
  std::string quantity;
  Int stated{0};
  Int engine{0};
  bool agrees() const { return stated == engine; }
  friend bool operator==(const StatedCheck&, const StatedCheck&) = default;
};

struct GSpaceSheet {
  std::string name;
  Int group_order{1};
  std::vector<ClassRecord> classes;
  std::vector<StratumRecord> strata;
  std::vector<CommutingPairRecord> commuting_pairs;
  std::vector<StatedCheck> stated_checks;
  std::map<std::string, std::string> metadata;
  friend bool operator==(const GSpaceSheet&, const GSpaceSheet&) = default;
};

/// Σ class sizes = |G| and size·|C(g)| = |G| per record; con_h within bounds. Throws InconsistentSheet.
void validate(const GSpaceSheet& sheet);

/// Σ_[g] e(X^g/C(g)). When commuting pairs are present the double count
/// (1/|G|) Σ_{gh=hg} e(X^g ∩ X^h) must agree, else InconsistentSheet. Throws MissingValue.
Int euler_orbifold(const GSpaceSheet& sheet);

/// (1/|G|) Σ pairs · euler, or nullopt without a commuting-pair table.
std::optional<Rat> euler_double_count(const GSpaceSheet& sheet);

/// Σ over in_ch classes of L(h, X^g/C(g)). Throws MissingValue.
Int lefschetz_theorem1(const GSpaceSheet& sheet);

struct DecompositionEntry {
  std::size_t count{0};
  Int total{0};
};
/// in_ch contributions grouped by fixed-set dimension; the identity class is reported under
/// `identity_key`, classes without a recorded dimension under -2.
inline constexpr int identity_key = 1000;
std::map<int, DecompositionEntry> lefschetz_decomposition(const GSpaceSheet& sheet);

struct ChainReport {
  bool has_strata{false};
  Rat strata_stage{0};  // Σ_{h[S]=[S]} L(h, X^{[S]}) · |S|/|G| · con(h, S)
  Int class_stage{0};   // Σ_{[g] ∈ C(h)} L(h, X^g/C(g))
  std::vector<Rat> stratum_terms;
  bool ok{false};
  std::string mismatch;
};

ChainReport chain_check(const GSpaceSheet& sheet);

}  // namespace mckay::orbifold
