#include "mvrp/svns.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "mvrp/assignment.hpp"
#include "mvrp/construction.hpp"
#include "mvrp/neighborhoods.hpp"

namespace mvrp {

namespace {

// Weighted contribution of one route (path + replenishment + HRI terms); the
// team cost is added per non-empty route by the caller.
double route_contribution(const Route& route, const Assignment& assignment,
                          const Instance& instance, const CostMatrix& matrix,
                          const Weights& weights) {
  if (route.empty()) return 0.0;
  const RouteCost cost = route_cost(route, assignment, instance, matrix);
  return weights.alpha * (cost.path + cost.replenishment) + weights.beta * cost.hri;
}

// Weighted contribution of a route under its best rule1/rule2 assignment.
double best12_contribution(const Route& route, const Instance& instance,
                           const CostMatrix& matrix, const Weights& weights) {
  if (route.empty()) return 0.0;
  const auto [assignment, cost] = best_rule12(route, instance, matrix, weights);
  (void)assignment;
  return weights.alpha * (cost.path + cost.replenishment) + weights.beta * cost.hri;
}

int count_nonempty(const std::vector<Route>& routes) {
  int n = 0;
  for (const Route& r : routes) {
    if (!r.empty()) ++n;
  }
  return n;
}

std::vector<Route> routes_of(const Solution& solution) {
  std::vector<Route> routes;
  routes.reserve(solution.routes.size());
  for (const RoutePlan& plan : solution.routes) routes.push_back(plan.route);
  return routes;
}

// Rebuilds a full solution from routes, assigning each non-empty route the
// better of rule1/rule2.
Solution complete_with_best12(const std::vector<Route>& routes, const Instance& instance,
                              const CostMatrix& matrix, const Weights& weights) {
  Solution solution;
  solution.routes.resize(routes.size());
  for (std::size_t r = 0; r < routes.size(); ++r) {
    solution.routes[r].route = routes[r];
    if (!routes[r].empty()) {
      solution.routes[r].assignment = best_rule12(routes[r], instance, matrix, weights).first;
    } else {
      solution.routes[r].assignment = Assignment{};
    }
  }
  return solution;
}

// In-place best-improvement pass over one route-move neighborhood.
// Candidates are scored with best rule1/rule2 assignments on the touched
// routes and the cached best12 contributions everywhere else; the winning
// move (if any) is applied and the whole solution re-completed with best12.
// Returns true when the solution strictly improved.
//
// Candidate totals are summed route-by-route in index order, exactly as
// solution_total sums the completed solution. Any other summation (e.g. a
// running delta against a cached baseline) can disagree with the recomputed
// total by an ulp, which lets two equal-valued neighbors each look "strictly
// better" than the other and traps the descent in an endless two-cycle.
bool improve_with_route_moves(Solution& solution, double& total, MoveKind kind,
                              const Instance& instance, const CostMatrix& matrix,
                              const Weights& weights, int max_seg_len) {
  const std::vector<Route> routes = routes_of(solution);
  const int m = static_cast<int>(routes.size());

  // Per-route best12 contributions of the current routes. The current
  // solution's own assignments may be better (rule3); candidates are
  // nevertheless completed with best12 per the local-search contract. The
  // cached values are bitwise what complete_with_best12 + solution_total
  // would recompute for an untouched route.
  std::vector<double> contribution(m, 0.0);
  for (int r = 0; r < m; ++r) {
    contribution[r] = best12_contribution(routes[r], instance, matrix, weights);
  }

  const std::vector<Move> moves = enumerate_moves(routes, kind, max_seg_len);
  double best_total = total;
  const Move* best_move = nullptr;
  std::vector<Route> scratch;
  for (const Move& move : moves) {
    scratch = apply_move(routes, move, max_seg_len);
    const bool pair_move = move.kind != MoveKind::two_opt_intra;
    const double c1 = best12_contribution(scratch[move.r1], instance, matrix, weights);
    const double c2 =
        pair_move ? best12_contribution(scratch[move.r2], instance, matrix, weights) : 0.0;
    double candidate = 0.0;
    int teams = 0;
    for (int r = 0; r < m; ++r) {
      if (scratch[r].empty()) continue;
      ++teams;
      if (r == move.r1) {
        candidate += c1;
      } else if (pair_move && r == move.r2) {
        candidate += c2;
      } else {
        candidate += contribution[r];
      }
    }
    candidate += weights.gamma * instance.team_cost * static_cast<double>(teams);
    if (candidate < best_total) {
      best_total = candidate;
      best_move = &move;
    }
  }
  if (best_move == nullptr) return false;

  const std::vector<Route> improved = apply_move(routes, *best_move, max_seg_len);
  solution = complete_with_best12(improved, instance, matrix, weights);
  total = solution_total(solution, instance, matrix, weights);
  assert(total == best_total);
  return true;
}

// The asgn-rule3 neighborhood: routes fixed, exact assignment DP per route.
bool improve_with_rule3(Solution& solution, double& total, const Instance& instance,
                        const CostMatrix& matrix, const Weights& weights) {
  Solution candidate = solution;
  double candidate_total = 0.0;
  for (RoutePlan& plan : candidate.routes) {
    if (plan.route.empty()) continue;
    plan.assignment = assign_rule3(plan.route, instance, matrix, weights);
    candidate_total += route_contribution(plan.route, plan.assignment, instance, matrix, weights);
  }
  candidate_total += weights.gamma * instance.team_cost *
                     count_nonempty(routes_of(candidate));
  if (candidate_total < total) {
    solution = std::move(candidate);
    total = candidate_total;
    return true;
  }
  return false;
}

}  // namespace

double solution_total(const Solution& solution, const Instance& instance,
                      const CostMatrix& matrix, const Weights& weights) {
  double total = 0.0;
  int teams = 0;
  for (const RoutePlan& plan : solution.routes) {
    if (plan.route.empty()) continue;
    ++teams;
    total += route_contribution(plan.route, plan.assignment, instance, matrix, weights);
  }
  total += weights.gamma * instance.team_cost * static_cast<double>(teams);
  return total;
}

Solution shake(const Solution& solution, int k, const Instance& instance,
               const CostMatrix& matrix, const Weights& weights, std::mt19937_64& rng) {
  std::vector<Route> routes = routes_of(solution);
  std::vector<int> swappable;
  for (std::size_t r = 0; r < routes.size(); ++r) {
    if (routes[r].size() >= 2) swappable.push_back(static_cast<int>(r));
  }
  if (swappable.empty()) return solution;

  const int swaps = std::max(1, k);
  for (int s = 0; s < swaps; ++s) {
    std::uniform_int_distribution<std::size_t> route_dist(0, swappable.size() - 1);
    Route& route = routes[swappable[route_dist(rng)]];
    const int len = static_cast<int>(route.size());
    std::uniform_int_distribution<int> first(0, len - 1);
    std::uniform_int_distribution<int> second(0, len - 2);
    const int i = first(rng);
    int j = second(rng);
    if (j >= i) ++j;
    std::swap(route.pois[i], route.pois[j]);
  }
  return complete_with_best12(routes, instance, matrix, weights);
}

Solution local_search(const Solution& solution, const Instance& instance,
                      const CostMatrix& matrix, const Weights& weights,
                      const SvnsParams& params) {
  struct Neighborhood {
    unsigned bit;
    MoveKind kind;     // meaningful for route-move neighborhoods only
    bool route_move;
  };
  static constexpr Neighborhood kOrder[] = {
      {kNeighborhoodTwoOpt, MoveKind::two_opt_intra, true},
      {kNeighborhoodRemoveInsert, MoveKind::remove_insert, true},
      {kNeighborhoodSwapInter, MoveKind::swap_inter, true},
      {kNeighborhoodSeqExchange, MoveKind::seq_exchange, true},
      {kNeighborhoodAsgnRule3, MoveKind::seq_exchange, false},
  };

  Solution current = solution;
  double total = solution_total(current, instance, matrix, weights);
  int j = 0;
  while (j < 5) {
    const Neighborhood& nb = kOrder[j];
    if ((params.neighborhood_mask & nb.bit) == 0) {
      ++j;
      continue;
    }
    const bool improved =
        nb.route_move
            ? improve_with_route_moves(current, total, nb.kind, instance, matrix, weights,
                                       params.max_seg_len)
            : improve_with_rule3(current, total, instance, matrix, weights);
    j = improved ? 0 : j + 1;
  }
  return current;
}

SvnsResult solve(const Instance& instance, const SvnsParams& params) {
  const CostMatrix matrix = build_cost_matrix(instance);
  const Weights& weights = instance.weights;
  std::mt19937_64 rng(params.seed);

  Solution f = construct(instance, matrix, params.seed);
  double f_total = solution_total(f, instance, matrix, weights);

  SvnsResult result;
  result.solution = f;
  double incumbent_total = f_total;

  result.trace.push_back({0, TracePhase::construction, 0, f_total, f_total,
                          incumbent_total, 0.0, false, false});

  int iteration = 0;
  int unimproved = 0;
  while (unimproved < params.unimproved_max) {
    int k = 0;
    while (k < params.k_max) {
      Solution shaken = shake(f, k, instance, matrix, weights, rng);
      Solution candidate = local_search(shaken, instance, matrix, weights, params);
      const double candidate_total = solution_total(candidate, instance, matrix, weights);
      const double gap = 100.0 * (candidate_total - f_total) / f_total;

      TraceRecord record;
      record.iteration = ++iteration;
      record.phase = TracePhase::iteration;
      record.k = k;
      record.candidate_total = candidate_total;
      record.gap_percent = gap;

      if (candidate_total < f_total) {
        f = std::move(candidate);
        f_total = candidate_total;
        k = 0;
        unimproved = 0;
        record.accepted = true;
        if (f_total < incumbent_total) {
          incumbent_total = f_total;
          result.solution = f;
        }
      } else {
        ++unimproved;
        if (gap >= params.recenter_gap_low && gap <= params.recenter_gap_high) {
          f = std::move(candidate);
          f_total = candidate_total;
          k = 0;
          record.recentered = true;
        } else {
          ++k;
        }
      }
      record.current_total = f_total;
      record.incumbent_total = incumbent_total;
      result.trace.push_back(record);
    }
  }

  result.cost = evaluate(result.solution, instance, matrix);
  return result;
}

}  // namespace mvrp
