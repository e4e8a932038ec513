#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "mvrp/construction.hpp"
#include "mvrp/exact.hpp"
#include "mvrp/instances.hpp"
#include "mvrp/model.hpp"
#include "mvrp/svns.hpp"

using namespace mvrp;

namespace {

// All coordinates below are picked so every pairwise distance (and therefore
// every asserted total) is an exact double; the checks use plain ==.

Instance one_poi_instance() {
  Instance inst;
  inst.depot = {0.0, 0.0};
  inst.pois = {{1, {3.0, 4.0}, 2}};
  inst.num_vehicles = 1;
  inst.ugv_capacity = 4;
  inst.hri_table = default_hri_table(4);
  return inst;
}

// One far POI with a big demand, one near POI with a small one. Serving them
// with one team forces either carrying the big team everywhere or a costly
// replenishment at the far POI, so the team cost weight decides whether the
// optimum splits into two routes.
Instance split_or_merge_instance(double gamma) {
  Instance inst;
  inst.depot = {0.0, 0.0};
  inst.pois = {{1, {10.0, 0.0}, 8}, {2, {0.25, 0.0}, 1}};
  inst.num_vehicles = 2;
  inst.ugv_capacity = 12;
  inst.hri_table = default_hri_table(12);
  inst.weights = {1.0, 1.0, gamma};
  return inst;
}

}  // namespace

TEST_CASE("single poi and vehicle: the only tour is returned with exact cost") {
  const Instance inst = one_poi_instance();
  const ExactResult result = solve_exact(inst);

  REQUIRE(result.solution.routes.size() == 1);
  CHECK(result.solution.routes[0].route.pois == std::vector<int>{1});
  CHECK(result.solution.routes[0].assignment.initial_dispatch == 2);
  CHECK(result.cost.path_cost == 10.0);          // out and back on a 3-4-5 triangle
  CHECK(result.cost.replenishment_cost == 0.0);  // carrying beats a depot trip
  CHECK(result.cost.hri_cost == 20.0);
  CHECK(result.cost.team_cost_total == 50.0);
  CHECK(result.cost.total == 80.0);
  CHECK(result.stats.partitions == 1);
  CHECK(result.stats.route_orders == 1);
}

TEST_CASE("team cost weight decides between splitting and merging routes") {
  SUBCASE("cheap teams: two dedicated routes win") {
    const ExactResult result = solve_exact(split_or_merge_instance(0.125));
    REQUIRE(result.solution.routes.size() == 2);
    CHECK(result.solution.routes[0].route.pois == std::vector<int>{1});
    CHECK(result.solution.routes[1].route.pois == std::vector<int>{2});
    CHECK(result.cost.replenishment_cost == 0.0);
    CHECK(result.cost.hri_cost == 140.0);
    CHECK(result.cost.team_cost_total == 100.0);
    CHECK(result.cost.total == 173.0);
  }
  SUBCASE("expensive teams: one route with a far replenishment wins") {
    const ExactResult result = solve_exact(split_or_merge_instance(0.25));
    REQUIRE(result.solution.routes.size() == 2);
    CHECK(result.solution.routes[0].route.pois == std::vector<int>{2, 1});
    CHECK(result.solution.routes[1].route.empty());
    CHECK(result.cost.path_cost == 20.0);
    CHECK(result.cost.replenishment_cost == 10.0);  // top-up driven out to poi 1
    CHECK(result.cost.hri_cost == 140.0);
    CHECK(result.cost.team_cost_total == 50.0);
    CHECK(result.cost.total == 182.5);
  }
}

TEST_CASE("cost ties are broken by the lexicographically smallest encoding") {
  // Two unit-demand POIs mirrored around the depot with gamma = 0: one merged
  // route (either direction) and the split both cost exactly 40.
  Instance inst;
  inst.depot = {0.0, 0.0};
  inst.pois = {{1, {5.0, 0.0}, 1}, {2, {-5.0, 0.0}, 1}};
  inst.num_vehicles = 2;
  inst.ugv_capacity = 2;
  inst.hri_table = default_hri_table(2);
  inst.weights = {1.0, 1.0, 0.0};

  const ExactResult result = solve_exact(inst);
  CHECK(result.cost.total == 40.0);
  REQUIRE(result.solution.routes.size() == 2);
  CHECK(result.solution.routes[0].route.pois == std::vector<int>{1});
  CHECK(result.solution.routes[1].route.pois == std::vector<int>{2});
  CHECK(result.cost.team_cost_total == 100.0);  // unweighted component is still reported
  CHECK(result.stats.partitions == 2);
  CHECK(result.stats.route_orders == 4);
}

TEST_CASE("enumeration counters match the closed forms") {
  auto instance_with = [](int num_pois, int num_vehicles) {
    Instance inst;
    inst.depot = {0.0, 0.0};
    for (int i = 1; i <= num_pois; ++i) {
      inst.pois.push_back({i, {static_cast<double>(i), 0.0}, 1});
    }
    inst.num_vehicles = num_vehicles;
    inst.ugv_capacity = 2;
    inst.hri_table = default_hri_table(2);
    return inst;
  };

  SUBCASE("one vehicle explores exactly the n! tours") {
    const ExactResult result = solve_exact(instance_with(4, 1));
    CHECK(result.stats.partitions == 1);
    CHECK(result.stats.route_orders == 24);
  }
  SUBCASE("four pois, two vehicles") {
    const ExactResult result = solve_exact(instance_with(4, 2));
    CHECK(result.stats.partitions == 8);     // S(4,1) + S(4,2) = 1 + 7
    CHECK(result.stats.route_orders == 64);  // 24 + 4*(1!+3!) + 3*(2!+2!)
  }
  SUBCASE("five pois, two vehicles") {
    const ExactResult result = solve_exact(instance_with(5, 2));
    CHECK(result.stats.partitions == 16);     // S(5,1) + S(5,2) = 1 + 15
    CHECK(result.stats.route_orders == 325);  // 120 + 5*25 + 10*8
  }
}

TEST_CASE("size guards reject instances beyond the enumeration budget") {
  Instance big;
  big.depot = {0.0, 0.0};
  for (int i = 1; i <= 9; ++i) {
    big.pois.push_back({i, {static_cast<double>(i), 1.0}, 1});
  }
  big.num_vehicles = 2;
  big.ugv_capacity = 2;
  big.hri_table = default_hri_table(2);
  CHECK_THROWS_AS(solve_exact(big), std::invalid_argument);

  Instance wide;
  wide.depot = {0.0, 0.0};
  wide.pois = {{1, {1.0, 0.0}, 1}, {2, {2.0, 0.0}, 1}};
  wide.num_vehicles = 4;
  wide.ugv_capacity = 2;
  wide.hri_table = default_hri_table(2);
  CHECK_THROWS_AS(solve_exact(wide), std::invalid_argument);
}

TEST_CASE("exact optimum lower-bounds the heuristics") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Instance inst = generate(small_spec(seed));
    const CostMatrix matrix = build_cost_matrix(inst);
    const ExactResult exact = solve_exact(inst);

    CHECK(check_feasibility(exact.solution, inst).ok());
    CHECK(exact.cost.total <= evaluate(construct(inst, matrix, seed), inst, matrix).total + 1e-9);

    SvnsParams params;
    params.seed = seed;
    CHECK(exact.cost.total <= solve(inst, params).cost.total + 1e-9);
  }
}

TEST_CASE("the exact solver is deterministic") {
  const Instance inst = generate(small_spec(23));
  const ExactResult a = solve_exact(inst);
  const ExactResult b = solve_exact(inst);
  CHECK(a.solution == b.solution);
  CHECK(a.cost.total == b.cost.total);
  CHECK(a.stats.partitions == b.stats.partitions);
  CHECK(a.stats.route_orders == b.stats.route_orders);
}
