#pragma once

#include <cstdint>
#include <utility>

#include "mvrp/model.hpp"

namespace mvrp {

// Work counters for the exhaustive enumeration, exposed so callers (and
// tests) can check the search space size against closed forms.
struct ExactStats {
  std::uint64_t partitions = 0;    // set partitions of the POIs examined
  std::uint64_t route_orders = 0;  // block permutations evaluated across all partitions
};

struct ExactResult {
  Solution solution;
  CostBreakdown cost;
  ExactStats stats;
};

// Exhaustive small-instance optimum: enumerates every set partition of the
// POIs into at most num_vehicles non-empty blocks, every permutation of each
// block as a route order, assigns each route with the exact assignment DP,
// and returns the minimum-total solution. Ties are broken by the
// lexicographically smallest route encoding. Deterministic.
//
// Guarded to at most 8 POIs and 3 vehicles; throws std::invalid_argument
// beyond that rather than silently truncating the search.
ExactResult solve_exact(const Instance& instance, const Weights& weights);

// Convenience overload using the instance's own weights.
ExactResult solve_exact(const Instance& instance);

}  // namespace mvrp
