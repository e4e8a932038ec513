#ifndef MVRP_MODEL_HPP
#define MVRP_MODEL_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace mvrp {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double euclidean(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

/// Objective weights: total = alpha*(path+replenishment) + beta*hri + gamma*team.
struct Weights {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
};

struct Poi {
  int id = 0;  // unique, >= 1
  Point location;
  int ugv_demand = 1;
};

/// One problem instance: depot, POIs with UGV demands, fleet size, UGV
/// capacity per team, HRI cost table indexed by team size, and the fixed
/// cost per deployed team.
struct Instance {
  Point depot;
  std::vector<Poi> pois;
  int num_vehicles = 1;
  int ugv_capacity = 1;
  std::vector<double> hri_table;  // size ugv_capacity + 1, hri_table[0] == 0
  double team_cost = 50.0;
  Weights weights;
  // When true the HRI cost also counts the team size at the depot (the
  // initial dispatch) once per non-empty route. Off by default.
  bool hri_at_depot = false;

  // Position of a POI id in `pois`, or -1 if unknown.
  int poi_index(int id) const;
  int demand_of(int id) const;  // throws std::invalid_argument on unknown id

  // Empty when all invariants hold, otherwise one message per violation.
  std::vector<std::string> validate() const;
};

/// Symmetric Euclidean cost matrix. Index 0 is the depot, indices 1..|P|
/// are the POIs in instance order.
class CostMatrix {
 public:
  CostMatrix() = default;
  explicit CostMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const { return n_; }
  double operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  double& at(int i, int j) { return d_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_ = 0;
  std::vector<double> d_;
};

CostMatrix build_cost_matrix(const Instance& instance);

/// Visit sequence of one team: depot -> pois -> depot. May be empty.
struct Route {
  std::vector<int> pois;  // POI ids, no duplicates

  bool empty() const { return pois.empty(); }
  std::size_t size() const { return pois.size(); }
  int operator[](std::size_t t) const { return pois[t]; }
  bool operator==(const Route&) const = default;
};

/// UGV plan for one route: `initial_dispatch` UGVs leave the depot with the
/// team and `replenishments[t]` more join at route position t. The team size
/// at position t is initial_dispatch + sum of replenishments up to t, and is
/// non-decreasing along the route.
struct Assignment {
  int initial_dispatch = 0;
  std::vector<int> replenishments;  // one entry per route position

  std::vector<int> team_sizes() const;
  int replenishment_events() const;  // number of positions with z > 0
  bool operator==(const Assignment&) const = default;
};

struct RoutePlan {
  Route route;
  Assignment assignment;
  bool operator==(const RoutePlan&) const = default;
};

/// Exactly num_vehicles route slots; empty routes are idle teams.
struct Solution {
  std::vector<RoutePlan> routes;
  bool operator==(const Solution&) const = default;
};

struct CostBreakdown {
  double path_cost = 0.0;           // R1
  double replenishment_cost = 0.0;  // R2
  double hri_cost = 0.0;            // H
  double team_cost_total = 0.0;
  double total = 0.0;
};

inline double weighted_total(double path, double replenishment, double hri,
                             double team, const Weights& w) {
  return w.alpha * (path + replenishment) + w.beta * hri + w.gamma * team;
}

inline CostBreakdown make_breakdown(double path, double replenishment, double hri,
                                    double team, const Weights& w) {
  return {path, replenishment, hri, team,
          weighted_total(path, replenishment, hri, team, w)};
}

enum class ViolationKind {
  poi_missing,
  poi_duplicated,
  demand_unmet,
  capacity_exceeded,
  assignment_length_mismatch,
  unknown_poi,
  negative_assignment,
  route_count_mismatch,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  int poi_id = -1;
  int route = -1;
  int pos = -1;
};

struct FeasibilityReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

/// Checks POI coverage, demand satisfaction, capacity and assignment shape.
/// Violations are reported, never thrown.
FeasibilityReport check_feasibility(const Solution& solution, const Instance& instance);

/// Unweighted cost components of a single route with its assignment.
struct RouteCost {
  double path = 0.0;
  double replenishment = 0.0;
  double hri = 0.0;
};

// Assumes the plan is feasible for the instance; evaluate() is the checked entry point.
RouteCost route_cost(const Route& route, const Assignment& assignment,
                     const Instance& instance, const CostMatrix& matrix);

/// Full evaluation. Throws std::invalid_argument when the solution is
/// infeasible for the instance (message lists the violations).
CostBreakdown evaluate(const Solution& solution, const Instance& instance,
                       const CostMatrix& matrix);

}  // namespace mvrp

#endif  // MVRP_MODEL_HPP
