#include "mvrp/assignment.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mvrp {

namespace {

std::vector<int> route_demands(const Route& route, const Instance& instance) {
  std::vector<int> d(route.size());
  for (std::size_t t = 0; t < route.size(); ++t) d[t] = instance.demand_of(route[t]);
  return d;
}

std::vector<double> depot_distances(const Route& route, const Instance& instance,
                                    const CostMatrix& matrix) {
  std::vector<double> c(route.size());
  for (std::size_t t = 0; t < route.size(); ++t) {
    c[t] = matrix(0, instance.poi_index(route[t]) + 1);
  }
  return c;
}

}  // namespace

std::string to_string(AssignmentScheme scheme) {
  switch (scheme) {
    case AssignmentScheme::rule1: return "rule1";
    case AssignmentScheme::rule2: return "rule2";
    case AssignmentScheme::rule3: return "rule3";
  }
  return "?";
}

Assignment assign_rule1(const Route& route, const Instance& instance) {
  if (route.empty()) return {};
  int max_demand = 0;
  for (std::size_t t = 0; t < route.size(); ++t) {
    max_demand = std::max(max_demand, instance.demand_of(route[t]));
  }
  if (max_demand > instance.ugv_capacity) {
    throw std::invalid_argument("infeasible route: demand " + std::to_string(max_demand) +
                                " exceeds capacity " + std::to_string(instance.ugv_capacity));
  }
  return {max_demand, std::vector<int>(route.size(), 0)};
}

Assignment assign_rule2(const Route& route, const Instance& instance) {
  if (route.empty()) return {};
  Assignment asg;
  asg.initial_dispatch = instance.demand_of(route[0]);
  asg.replenishments.assign(route.size(), 0);
  int y = asg.initial_dispatch;
  for (std::size_t t = 1; t < route.size(); ++t) {
    const int deficit = instance.demand_of(route[t]) - y;
    if (deficit > 0) {
      asg.replenishments[t] = deficit;
      y += deficit;
    }
  }
  return asg;
}

double assignment_objective(const Route& route, const Assignment& assignment,
                            const Instance& instance, const CostMatrix& matrix,
                            const Weights& weights) {
  const RouteCost rc = route_cost(route, assignment, instance, matrix);
  return weights.alpha * rc.replenishment + weights.beta * rc.hri;
}

Assignment assign_rule3(const Route& route, const Instance& instance,
                        const CostMatrix& matrix, const Weights& weights) {
  if (route.empty()) return {};
  const int cap = instance.ugv_capacity;
  const std::vector<int> demand = route_demands(route, instance);
  const std::vector<double> event_cost = depot_distances(route, instance, matrix);
  const std::vector<double>& h = instance.hri_table;
  const int len = static_cast<int>(route.size());

  // value[t][y] = best (cost, events) of the suffix starting at position t
  // with team size y there; the position's own HRI term is included.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> cost(len, std::vector<double>(cap + 1, inf));
  std::vector<std::vector<int>> events(len, std::vector<int>(cap + 1, 0));

  for (int y = demand[len - 1]; y <= cap; ++y) {
    cost[len - 1][y] = weights.beta * h[y];
    events[len - 1][y] = 0;
  }
  for (int t = len - 2; t >= 0; --t) {
    for (int y = demand[t]; y <= cap; ++y) {
      double best_cost = inf;
      int best_events = 0;
      if (y >= demand[t + 1]) {  // carry the team forward
        best_cost = cost[t + 1][y];
        best_events = events[t + 1][y];
      }
      const int jump_from = std::max(y + 1, demand[t + 1]);
      for (int y2 = jump_from; y2 <= cap; ++y2) {  // replenish at t+1
        const double c = weights.alpha * event_cost[t + 1] + cost[t + 1][y2];
        const int e = 1 + events[t + 1][y2];
        if (c < best_cost || (c == best_cost && e < best_events)) {
          best_cost = c;
          best_events = e;
        }
      }
      cost[t][y] = weights.beta * h[y] + best_cost;
      events[t][y] = best_events;
    }
  }

  // Forward reconstruction; smallest team size wins ties, which makes the
  // chosen vector lexicographically minimal among the optima.
  std::vector<int> team(len, 0);
  {
    double best_cost = inf;
    int best_events = 0;
    for (int y = demand[0]; y <= cap; ++y) {
      const double depot_term = instance.hri_at_depot ? weights.beta * h[y] : 0.0;
      const double c = depot_term + cost[0][y];
      const int e = events[0][y];
      if (c < best_cost || (c == best_cost && e < best_events)) {
        best_cost = c;
        best_events = e;
        team[0] = y;
      }
    }
  }
  for (int t = 1; t < len; ++t) {
    const int prev = team[t - 1];
    double best_cost = inf;
    int best_events = 0;
    int best_y = -1;
    if (prev >= demand[t]) {
      best_cost = cost[t][prev];
      best_events = events[t][prev];
      best_y = prev;
    }
    for (int y = std::max(prev + 1, demand[t]); y <= cap; ++y) {
      const double c = weights.alpha * event_cost[t] + cost[t][y];
      const int e = 1 + events[t][y];
      if (c < best_cost || (c == best_cost && e < best_events)) {
        best_cost = c;
        best_events = e;
        best_y = y;
      }
    }
    team[t] = best_y;
  }

  Assignment asg;
  asg.initial_dispatch = team[0];
  asg.replenishments.assign(len, 0);
  for (int t = 1; t < len; ++t) asg.replenishments[t] = team[t] - team[t - 1];
  return asg;
}

Assignment assign_oracle(const Route& route, const Instance& instance,
                         const CostMatrix& matrix, const Weights& weights) {
  if (route.empty()) return {};
  if (route.size() > 6 || instance.ugv_capacity > 12) {
    throw std::invalid_argument("instance too large for assignment oracle: route length <= 6 "
                                "and capacity <= 12 required");
  }
  const int cap = instance.ugv_capacity;
  const std::vector<int> demand = route_demands(route, instance);
  const int len = static_cast<int>(route.size());

  std::vector<int> team(len, 0);
  Assignment best;
  double best_cost = std::numeric_limits<double>::infinity();
  int best_events = 0;

  // Depth-first in ascending team size, so vectors come out in lexicographic
  // order and the first optimum found is the lexicographically smallest.
  auto enumerate = [&](auto&& self, int t) -> void {
    if (t == len) {
      Assignment asg;
      asg.initial_dispatch = team[0];
      asg.replenishments.assign(len, 0);
      for (int u = 1; u < len; ++u) asg.replenishments[u] = team[u] - team[u - 1];
      const double c = assignment_objective(route, asg, instance, matrix, weights);
      const int e = asg.replenishment_events();
      if (c < best_cost || (c == best_cost && e < best_events)) {
        best_cost = c;
        best_events = e;
        best = std::move(asg);
      }
      return;
    }
    const int low = std::max(t > 0 ? team[t - 1] : 0, demand[t]);
    for (int y = low; y <= cap; ++y) {
      team[t] = y;
      self(self, t + 1);
    }
  };
  enumerate(enumerate, 0);
  return best;
}

Assignment apply_scheme(AssignmentScheme scheme, const Route& route,
                        const Instance& instance, const CostMatrix& matrix,
                        const Weights& weights) {
  switch (scheme) {
    case AssignmentScheme::rule1: return assign_rule1(route, instance);
    case AssignmentScheme::rule2: return assign_rule2(route, instance);
    case AssignmentScheme::rule3: return assign_rule3(route, instance, matrix, weights);
  }
  throw std::invalid_argument("unknown assignment scheme");
}

std::pair<Assignment, RouteCost> best_rule12(const Route& route, const Instance& instance,
                                             const CostMatrix& matrix, const Weights& weights) {
  if (route.empty()) return {{}, {}};
  Assignment a1 = assign_rule1(route, instance);
  const RouteCost c1 = route_cost(route, a1, instance, matrix);
  Assignment a2 = assign_rule2(route, instance);
  const RouteCost c2 = route_cost(route, a2, instance, matrix);
  const double o1 = weights.alpha * c1.replenishment + weights.beta * c1.hri;
  const double o2 = weights.alpha * c2.replenishment + weights.beta * c2.hri;
  if (o2 < o1) return {std::move(a2), c2};
  return {std::move(a1), c1};  // ties keep rule1 (zero events)
}

}  // namespace mvrp
