#pragma once

#include <cstdint>
#include <vector>

#include "mvrp/model.hpp"

namespace mvrp {

// Builds the initial mTSP routes with a seeded randomized sweep: POIs are
// sorted by angle around the depot (rotation offset drawn from the seed),
// split into num_vehicles contiguous arcs balanced by POI count, and each arc
// is ordered by nearest-neighbor from the depot and then improved by
// exhaustive 2-opt until no improving move remains.
//
// Always returns exactly instance.num_vehicles route slots; when there are
// fewer POIs than vehicles the surplus routes are empty.
std::vector<Route> build_initial_routes(const Instance& instance, const CostMatrix& matrix,
                                        std::uint64_t seed);

// Builds the initial feasible solution: the sweep routes, forward and
// reversed, each paired with rule1 or rule2 applied to all routes (four
// candidates total), keeping the candidate with the lowest weighted total.
// Ties keep the earliest candidate in the order
// forward+rule1, forward+rule2, reversed+rule1, reversed+rule2.
Solution construct(const Instance& instance, const CostMatrix& matrix, std::uint64_t seed);

}  // namespace mvrp
