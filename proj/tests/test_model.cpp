#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "mvrp/model.hpp"

using namespace mvrp;

namespace {

// Depot at the origin, three POIs on Pythagorean coordinates so every
// distance used below is exact in double precision:
//   poi 1 at (3,4) demand 2, poi 2 at (3,0) demand 1, poi 3 at (0,4) demand 3.
Instance triangle_instance() {
  Instance instance;
  instance.depot = {0.0, 0.0};
  instance.pois = {
      {1, {3.0, 4.0}, 2},
      {2, {3.0, 0.0}, 1},
      {3, {0.0, 4.0}, 3},
  };
  instance.num_vehicles = 2;
  instance.ugv_capacity = 4;
  instance.hri_table = {0.0, 10.0, 20.0, 30.0, 40.0};
  instance.team_cost = 50.0;
  instance.weights = {1.0, 1.0, 1.0};
  return instance;
}

// Two routes covering all three POIs:
//   route 0: 2 -> 1 with dispatch 1 and one replenishment of 1 at poi 1,
//   route 1: 3 with dispatch 3.
Solution triangle_solution() {
  Solution solution;
  solution.routes.resize(2);
  solution.routes[0].route.pois = {2, 1};
  solution.routes[0].assignment = {1, {0, 1}};
  solution.routes[1].route.pois = {3};
  solution.routes[1].assignment = {3, {0}};
  return solution;
}

}  // namespace

TEST_CASE("cost matrix holds Euclidean distances, symmetric, zero diagonal") {
  Instance instance;
  instance.depot = {0.0, 0.0};
  instance.pois = {{1, {3.0, 4.0}, 1}, {2, {1.0, 0.0}, 1}, {3, {0.0, 1.0}, 1}};
  instance.num_vehicles = 1;
  instance.ugv_capacity = 2;
  instance.hri_table = {0.0, 1.0, 2.0};

  const CostMatrix matrix = build_cost_matrix(instance);
  REQUIRE(matrix.size() == 4);
  CHECK(matrix(0, 1) == 5.0);                  // 3-4-5 triangle
  CHECK(matrix(2, 3) == 1.4142135623730951);   // unit square diagonal
  for (int i = 0; i < matrix.size(); ++i) {
    CHECK(matrix(i, i) == 0.0);
    for (int j = 0; j < matrix.size(); ++j) {
      CHECK(matrix(i, j) == matrix(j, i));
    }
  }
}

TEST_CASE("euclidean distance of a point to itself is zero") {
  const Point p{12.5, -3.25};
  CHECK(euclidean(p, p) == 0.0);
}

TEST_CASE("assignment team sizes are prefix sums of replenishments") {
  const Assignment assignment{2, {0, 3, 0, 1}};
  CHECK(assignment.team_sizes() == std::vector<int>{2, 5, 5, 6});
  CHECK(assignment.replenishment_events() == 2);

  const Assignment no_events{4, {0, 0}};
  CHECK(no_events.replenishment_events() == 0);
}

TEST_CASE("instance validation accepts a well-formed instance") {
  CHECK(triangle_instance().validate().empty());
}

TEST_CASE("instance validation reports each broken invariant") {
  Instance instance = triangle_instance();

  SUBCASE("demand above capacity names the poi") {
    instance.pois[1].ugv_demand = 13;
    const auto problems = instance.validate();
    REQUIRE(problems.size() == 1);
    CHECK(problems[0].find("poi 2") != std::string::npos);
    CHECK(problems[0].find("13") != std::string::npos);
  }
  SUBCASE("duplicate poi ids") {
    instance.pois[2].id = 1;
    CHECK_FALSE(instance.validate().empty());
  }
  SUBCASE("hri table must have capacity+1 entries") {
    instance.hri_table.pop_back();
    CHECK_FALSE(instance.validate().empty());
  }
  SUBCASE("hri table must start at zero") {
    instance.hri_table[0] = 1.0;
    CHECK_FALSE(instance.validate().empty());
  }
  SUBCASE("at least one vehicle") {
    instance.num_vehicles = 0;
    CHECK_FALSE(instance.validate().empty());
  }
  SUBCASE("weights must not all be zero") {
    instance.weights = {0.0, 0.0, 0.0};
    CHECK_FALSE(instance.validate().empty());
  }
}

TEST_CASE("poi_index and demand_of resolve ids") {
  const Instance instance = triangle_instance();
  CHECK(instance.poi_index(1) == 0);
  CHECK(instance.poi_index(3) == 2);
  CHECK(instance.poi_index(99) == -1);
  CHECK(instance.demand_of(3) == 3);
  CHECK_THROWS_AS(instance.demand_of(99), std::invalid_argument);
}

TEST_CASE("evaluate sums path, replenishment, HRI and team components") {
  const Instance instance = triangle_instance();
  const CostMatrix matrix = build_cost_matrix(instance);
  const CostBreakdown cost = evaluate(triangle_solution(), instance, matrix);

  // route 0: 0->2 (3) + 2->1 (4) + 1->0 (5) = 12; route 1: 4+4 = 8.
  CHECK(cost.path_cost == 20.0);
  // One replenishment event at poi 1, depot distance 5.
  CHECK(cost.replenishment_cost == 5.0);
  // Team sizes 1,2 on route 0 and 3 on route 1: 10+20+30.
  CHECK(cost.hri_cost == 60.0);
  CHECK(cost.team_cost_total == 100.0);
  CHECK(cost.total == 185.0);
}

TEST_CASE("evaluate result satisfies the weighted recombination identity") {
  Instance instance = triangle_instance();
  instance.weights = {0.6, 0.1, 0.3};
  const CostMatrix matrix = build_cost_matrix(instance);
  const CostBreakdown cost = evaluate(triangle_solution(), instance, matrix);
  CHECK(cost.total == weighted_total(cost.path_cost, cost.replenishment_cost, cost.hri_cost,
                                     cost.team_cost_total, instance.weights));
}

TEST_CASE("weights mask components they zero out") {
  Instance instance;
  instance.depot = {0.0, 0.0};
  instance.pois = {{1, {5.0, 0.0}, 1}};
  instance.num_vehicles = 1;
  instance.ugv_capacity = 2;
  instance.hri_table = {0.0, 7.0, 9.0};
  instance.weights = {1.0, 0.0, 0.0};

  Solution solution;
  solution.routes.resize(1);
  solution.routes[0].route.pois = {1};
  solution.routes[0].assignment = {1, {1}};  // pointless replenishment to get R2 > 0

  const CostMatrix matrix = build_cost_matrix(instance);
  const CostBreakdown cost = evaluate(solution, instance, matrix);
  CHECK(cost.path_cost == 10.0);
  CHECK(cost.replenishment_cost == 5.0);
  CHECK(cost.total == 15.0);
}

TEST_CASE("empty solution evaluates to zero everywhere") {
  Instance instance = triangle_instance();
  instance.pois.clear();
  Solution solution;
  solution.routes.resize(2);
  const CostMatrix matrix = build_cost_matrix(instance);
  const CostBreakdown cost = evaluate(solution, instance, matrix);
  CHECK(cost.path_cost == 0.0);
  CHECK(cost.replenishment_cost == 0.0);
  CHECK(cost.hri_cost == 0.0);
  CHECK(cost.team_cost_total == 0.0);
  CHECK(cost.total == 0.0);
}

TEST_CASE("path cost is invariant under route reversal") {
  const Instance instance = triangle_instance();
  const CostMatrix matrix = build_cost_matrix(instance);

  Solution forward = triangle_solution();
  Solution backward = forward;
  backward.routes[0].route.pois = {1, 2};
  backward.routes[0].assignment = {2, {0, 0}};  // demands reversed: 2 then 1

  CHECK(evaluate(forward, instance, matrix).path_cost ==
        evaluate(backward, instance, matrix).path_cost);
}

TEST_CASE("removing a replenishment event never increases replenishment cost") {
  const Instance instance = triangle_instance();
  const CostMatrix matrix = build_cost_matrix(instance);

  Solution with_event = triangle_solution();
  Solution without_event = with_event;
  without_event.routes[0].assignment = {2, {0, 0}};  // dispatch covers both demands

  CHECK(evaluate(without_event, instance, matrix).replenishment_cost <
        evaluate(with_event, instance, matrix).replenishment_cost);
}

TEST_CASE("optional depot HRI adds the dispatch-size cost once per route") {
  Instance instance = triangle_instance();
  const CostMatrix matrix = build_cost_matrix(instance);
  const double base = evaluate(triangle_solution(), instance, matrix).hri_cost;

  instance.hri_at_depot = true;
  const double with_depot = evaluate(triangle_solution(), instance, matrix).hri_cost;
  // Dispatches are 1 and 3: h[1] + h[3] = 10 + 30 on top of the base 60.
  CHECK(base == 60.0);
  CHECK(with_depot == 100.0);
}

TEST_CASE("feasibility: clean solution passes") {
  const FeasibilityReport report = check_feasibility(triangle_solution(), triangle_instance());
  CHECK(report.ok());
  CHECK(report.violations.empty());
}

TEST_CASE("feasibility: uncovered poi is reported missing") {
  Solution solution = triangle_solution();
  solution.routes[1].route.pois.clear();
  solution.routes[1].assignment = {};

  const FeasibilityReport report = check_feasibility(solution, triangle_instance());
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const Violation& v : report.violations) {
    if (v.kind == ViolationKind::poi_missing && v.poi_id == 3) found = true;
  }
  CHECK(found);
}

TEST_CASE("feasibility: poi served twice is reported duplicated") {
  Solution solution = triangle_solution();
  solution.routes[1].route.pois = {3, 2};  // poi 2 already on route 0
  solution.routes[1].assignment = {3, {0, 0}};

  const FeasibilityReport report = check_feasibility(solution, triangle_instance());
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const Violation& v : report.violations) {
    if (v.kind == ViolationKind::poi_duplicated && v.poi_id == 2) found = true;
  }
  CHECK(found);
}

TEST_CASE("feasibility: team smaller than demand is reported at route and position") {
  Instance instance;
  instance.depot = {0.0, 0.0};
  instance.pois = {{1, {1.0, 0.0}, 5}};
  instance.num_vehicles = 1;
  instance.ugv_capacity = 6;
  instance.hri_table = {0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0};

  Solution solution;
  solution.routes.resize(1);
  solution.routes[0].route.pois = {1};
  solution.routes[0].assignment = {4, {0}};

  const FeasibilityReport report = check_feasibility(solution, instance);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == ViolationKind::demand_unmet);
  CHECK(report.violations[0].route == 0);
  CHECK(report.violations[0].pos == 0);
}

TEST_CASE("feasibility: team above capacity is reported") {
  Solution solution = triangle_solution();
  solution.routes[1].assignment = {4, {1}};  // 5 > capacity 4

  const FeasibilityReport report = check_feasibility(solution, triangle_instance());
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].kind == ViolationKind::capacity_exceeded);
}

TEST_CASE("feasibility: replenishment vector must match route length") {
  Solution solution = triangle_solution();
  solution.routes[0].assignment.replenishments = {0};

  const FeasibilityReport report = check_feasibility(solution, triangle_instance());
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const Violation& v : report.violations) {
    if (v.kind == ViolationKind::assignment_length_mismatch && v.route == 0) found = true;
  }
  CHECK(found);
}

TEST_CASE("feasibility: solution must carry exactly num_vehicles route slots") {
  Solution solution = triangle_solution();
  solution.routes.pop_back();

  const FeasibilityReport report = check_feasibility(solution, triangle_instance());
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].kind == ViolationKind::route_count_mismatch);
}

TEST_CASE("evaluate rejects infeasible solutions") {
  Solution solution = triangle_solution();
  solution.routes[1].route.pois.clear();  // poi 3 now missing
  solution.routes[1].assignment = {};

  const Instance instance = triangle_instance();
  const CostMatrix matrix = build_cost_matrix(instance);
  CHECK_THROWS_AS(evaluate(solution, instance, matrix), std::invalid_argument);
}

TEST_CASE("known component rows recombine to their totals") {
  const Weights unit{1.0, 1.0, 1.0};
  CHECK(std::abs(weighted_total(422.71, 83.34, 160.03, 100.0, unit) - 766.08) <= 0.01);
  CHECK(std::abs(weighted_total(226.60, 36.50, 190.02, 100.0, unit) - 553.12) <= 0.05);
}
