#pragma once

#include <cstdint>
#include <random>

#include "mckay/toric/lattice_pair.hpp"

namespace mckay::toric {

struct RandomInstance {
  LatticePair lp;
  PermSymmetry s;
};

/// Random n = 3 instance: σ is (1 2) or (1 2 3) with equal odds, and H is the σ-closure of one or
/// two random SL generators, redrawn until 1 < |H| ≤ max_order.
RandomInstance random_instance(std::mt19937_64& rng, unsigned max_order = 49);

}  // namespace mckay::toric
