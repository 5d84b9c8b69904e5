#pragma once

#include <string>

#include "mckay/exec.hpp"
#include "mckay/groups/classes.hpp"
#include "mckay/orbifold/sheet.hpp"

namespace mckay::orbifold {

enum class QuinticVariant { identity, swap, swap_two_pairs };

/// Mirror-quintic sheet: G = Z_5^3 acting on the Fermat-type quintic threefold, h one of the
/// coordinate involutions. Classes, strata and the commuting-pair table are all populated.
GSpaceSheet quintic_sheet(QuinticVariant variant, Exec exec = Exec::parallel);

/// Complete intersection of two cubics in P^5 with its group of order 81 and the involution
/// swapping x_1, x_2 and x_4, x_5. Only Lefschetz values are known; Euler values are absent.
GSpaceSheet lt_sheet();

/// X = point with the trivial h. Every class contributes 1.
GSpaceSheet point_sheet(const groups::FiniteMatrixGroup& g);
GSpaceSheet point_sheet();

}  // namespace mckay::orbifold
