#include "mvrp/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "mvrp/assignment.hpp"
#include "mvrp/neighborhoods.hpp"

namespace mvrp {

namespace {

// Orders one arc of POI indices (1-based matrix indices) by repeatedly
// visiting the nearest unvisited POI, starting from the depot.
std::vector<int> nearest_neighbor_order(const std::vector<int>& arc, const CostMatrix& matrix) {
  std::vector<int> remaining = arc;
  std::vector<int> ordered;
  ordered.reserve(arc.size());
  int current = 0;  // depot
  while (!remaining.empty()) {
    std::size_t best = 0;
    double best_dist = matrix(current, remaining[0]);
    for (std::size_t i = 1; i < remaining.size(); ++i) {
      const double d = matrix(current, remaining[i]);
      if (d < best_dist) {
        best_dist = d;
        best = i;
      }
    }
    current = remaining[best];
    ordered.push_back(current);
    remaining.erase(remaining.begin() + best);
  }
  return ordered;
}

double tour_length(const std::vector<int>& order, const CostMatrix& matrix) {
  double len = 0.0;
  int prev = 0;
  for (int idx : order) {
    len += matrix(prev, idx);
    prev = idx;
  }
  len += matrix(prev, 0);
  return len;
}

// Exhaustive best-improvement 2-opt on the closed tour depot -> order -> depot.
void two_opt_improve(std::vector<int>& order, const CostMatrix& matrix) {
  const int n = static_cast<int>(order.size());
  if (n < 2) return;
  bool improved = true;
  while (improved) {
    improved = false;
    double best_delta = 0.0;
    int best_i = -1;
    int best_j = -1;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        // Reversing order[i..j] replaces edges (i-1, i) and (j, j+1) with
        // (i-1, j) and (i, j+1); interior edges only change direction.
        const int before = (i == 0) ? 0 : order[i - 1];
        const int after = (j == n - 1) ? 0 : order[j + 1];
        const double delta = matrix(before, order[j]) + matrix(order[i], after) -
                             matrix(before, order[i]) - matrix(order[j], after);
        if (delta < best_delta - 1e-12) {
          best_delta = delta;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_i >= 0) {
      std::reverse(order.begin() + best_i, order.begin() + best_j + 1);
      improved = true;
    }
  }
}

// Applies one assignment scheme to every route; empty routes get an empty
// assignment. Throws only if a single POI's demand exceeds capacity, which
// instance validation already rules out.
Solution assign_all(const std::vector<Route>& routes, const Instance& instance,
                    const CostMatrix& matrix, AssignmentScheme scheme) {
  Solution solution;
  solution.routes.reserve(routes.size());
  for (const Route& route : routes) {
    RoutePlan plan;
    plan.route = route;
    if (!route.empty()) {
      plan.assignment = apply_scheme(scheme, route, instance, matrix, instance.weights);
    }
    solution.routes.push_back(std::move(plan));
  }
  return solution;
}

}  // namespace

std::vector<Route> build_initial_routes(const Instance& instance, const CostMatrix& matrix,
                                        std::uint64_t seed) {
  const int n = static_cast<int>(instance.pois.size());
  const int m = instance.num_vehicles;

  // Sort POIs by angle around the depot, rotated by a seeded offset so
  // different seeds cut the circle at different places.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle_dist(0.0, 2.0 * std::numbers::pi);
  const double theta0 = angle_dist(rng);

  struct AngledPoi {
    double angle;
    int matrix_index;  // 1-based index into the cost matrix
  };
  std::vector<AngledPoi> angled;
  angled.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Point& p = instance.pois[i].location;
    double a = std::atan2(p.y - instance.depot.y, p.x - instance.depot.x) - theta0;
    const double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    if (a < 0) a += two_pi;
    angled.push_back({a, i + 1});
  }
  std::stable_sort(angled.begin(), angled.end(),
                   [](const AngledPoi& a, const AngledPoi& b) { return a.angle < b.angle; });

  // Split into m contiguous arcs balanced by POI count: the first (n mod m)
  // arcs get one extra POI.
  std::vector<Route> routes(m);
  const int base = (m > 0) ? n / m : 0;
  const int extra = (m > 0) ? n % m : 0;
  int cursor = 0;
  for (int r = 0; r < m; ++r) {
    const int take = base + (r < extra ? 1 : 0);
    std::vector<int> arc;
    arc.reserve(take);
    for (int k = 0; k < take; ++k) arc.push_back(angled[cursor++].matrix_index);
    std::vector<int> order = nearest_neighbor_order(arc, matrix);
    two_opt_improve(order, matrix);
    routes[r].pois.reserve(order.size());
    for (int idx : order) routes[r].pois.push_back(instance.pois[idx - 1].id);
  }
  return routes;
}

Solution construct(const Instance& instance, const CostMatrix& matrix, std::uint64_t seed) {
  const std::vector<Route> forward = build_initial_routes(instance, matrix, seed);
  std::vector<Route> reversed;
  reversed.reserve(forward.size());
  for (const Route& r : forward) reversed.push_back(reverse(r));

  const std::pair<const std::vector<Route>*, AssignmentScheme> candidates[] = {
      {&forward, AssignmentScheme::rule1},
      {&forward, AssignmentScheme::rule2},
      {&reversed, AssignmentScheme::rule1},
      {&reversed, AssignmentScheme::rule2},
  };

  Solution best;
  double best_total = 0.0;
  bool have_best = false;
  for (const auto& [routes, scheme] : candidates) {
    Solution candidate = assign_all(*routes, instance, matrix, scheme);
    const CostBreakdown cost = evaluate(candidate, instance, matrix);
    if (!have_best || cost.total < best_total) {
      best = std::move(candidate);
      best_total = cost.total;
      have_best = true;
    }
  }
  return best;
}

}  // namespace mvrp
