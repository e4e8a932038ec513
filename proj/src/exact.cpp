#include "mvrp/exact.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvrp/assignment.hpp"

namespace mvrp {

namespace {

constexpr int kMaxPois = 8;
constexpr int kMaxVehicles = 3;

// Flattened route encoding used for deterministic tie-breaking: the POI ids
// of every non-empty route in order, with -1 separating routes. Plain
// lexicographic vector comparison then orders candidate solutions.
std::vector<int> encode_routes(const Solution& solution) {
  std::vector<int> enc;
  for (const RoutePlan& plan : solution.routes) {
    if (plan.route.empty()) continue;
    enc.insert(enc.end(), plan.route.pois.begin(), plan.route.pois.end());
    enc.push_back(-1);
  }
  return enc;
}

struct BlockBest {
  Route route;
  Assignment assignment;
  RouteCost cost;           // raw components of the best permutation
  double weighted = 0.0;    // alpha*(path+repl) + beta*hri
};

// Best permutation of one block of POI ids: minimizes the weighted route
// contribution, ties going to the lexicographically smallest order (the
// permutations are enumerated in lex order and only strict improvements are
// kept). Returns the number of permutations examined via `orders`.
BlockBest best_block_route(std::vector<int> ids, const Instance& instance,
                           const CostMatrix& matrix, const Weights& weights,
                           std::uint64_t& orders) {
  std::sort(ids.begin(), ids.end());
  BlockBest best;
  bool have_best = false;
  do {
    ++orders;
    Route route{ids};
    Assignment assignment = assign_rule3(route, instance, matrix, weights);
    const RouteCost cost = route_cost(route, assignment, instance, matrix);
    const double weighted =
        weights.alpha * (cost.path + cost.replenishment) + weights.beta * cost.hri;
    if (!have_best || weighted < best.weighted) {
      best = {std::move(route), std::move(assignment), cost, weighted};
      have_best = true;
    }
  } while (std::next_permutation(ids.begin(), ids.end()));
  return best;
}

}  // namespace

ExactResult solve_exact(const Instance& instance, const Weights& weights) {
  const int n = static_cast<int>(instance.pois.size());
  if (n > kMaxPois) {
    throw std::invalid_argument("instance too large for exact enumeration: " +
                                std::to_string(n) + " POIs (max " +
                                std::to_string(kMaxPois) + ")");
  }
  if (instance.num_vehicles > kMaxVehicles) {
    throw std::invalid_argument("instance too large for exact enumeration: " +
                                std::to_string(instance.num_vehicles) + " vehicles (max " +
                                std::to_string(kMaxVehicles) + ")");
  }

  const CostMatrix matrix = build_cost_matrix(instance);

  ExactResult result;
  ExactStats& stats = result.stats;
  bool have_best = false;
  double best_total = 0.0;
  std::vector<int> best_encoding;

  // Evaluates one set partition: blocks are independent once fixed, so each
  // block's route order and assignment are optimized on their own.
  auto evaluate_partition = [&](const std::vector<std::vector<int>>& blocks) {
    ++stats.partitions;
    Solution solution;
    solution.routes.resize(instance.num_vehicles);
    double path = 0.0, repl = 0.0, hri = 0.0, weighted = 0.0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      BlockBest block = best_block_route(blocks[b], instance, matrix, weights,
                                         stats.route_orders);
      path += block.cost.path;
      repl += block.cost.replenishment;
      hri += block.cost.hri;
      weighted += block.weighted;
      solution.routes[b].route = std::move(block.route);
      solution.routes[b].assignment = std::move(block.assignment);
    }
    const double team_total = instance.team_cost * static_cast<double>(blocks.size());
    const double total = weighted + weights.gamma * team_total;

    bool take = false;
    std::vector<int> encoding;
    if (!have_best || total < best_total) {
      take = true;
      encoding = encode_routes(solution);
    } else if (total == best_total) {
      encoding = encode_routes(solution);
      if (encoding < best_encoding) take = true;
    }
    if (take) {
      best_total = total;
      best_encoding = std::move(encoding);
      result.solution = std::move(solution);
      result.cost = make_breakdown(path, repl, hri, team_total, weights);
      have_best = true;
    }
  };

  if (n == 0) {
    evaluate_partition({});
  } else {
    // Restricted-growth-string recursion over set partitions: POI i joins an
    // existing block or opens a new one, capped at num_vehicles blocks.
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> recurse = [&](int i) {
      if (i == n) {
        evaluate_partition(blocks);
        return;
      }
      const int id = instance.pois[i].id;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        blocks[b].push_back(id);
        recurse(i + 1);
        blocks[b].pop_back();
      }
      if (static_cast<int>(blocks.size()) < instance.num_vehicles) {
        blocks.push_back({id});
        recurse(i + 1);
        blocks.pop_back();
      }
    };
    recurse(0);
  }

  return result;
}

ExactResult solve_exact(const Instance& instance) {
  return solve_exact(instance, instance.weights);
}

}  // namespace mvrp
