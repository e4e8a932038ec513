#include "mvrp/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace mvrp {

int Instance::poi_index(int id) const {
  for (std::size_t i = 0; i < pois.size(); ++i) {
    if (pois[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

int Instance::demand_of(int id) const {
  const int idx = poi_index(id);
  if (idx < 0) throw std::invalid_argument("unknown POI id " + std::to_string(id));
  return pois[idx].ugv_demand;
}

std::vector<std::string> Instance::validate() const {
  std::vector<std::string> errors;
  if (!std::isfinite(depot.x) || !std::isfinite(depot.y)) {
    errors.push_back("depot coordinates must be finite");
  }
  std::set<int> seen;
  for (const Poi& p : pois) {
    if (p.id < 1) {
      errors.push_back("poi " + std::to_string(p.id) + ": id must be >= 1");
    }
    if (!seen.insert(p.id).second) {
      errors.push_back("poi " + std::to_string(p.id) + ": duplicate id");
    }
    if (!std::isfinite(p.location.x) || !std::isfinite(p.location.y)) {
      errors.push_back("poi " + std::to_string(p.id) + ": coordinates must be finite");
    }
    if (p.ugv_demand < 1 || p.ugv_demand > ugv_capacity) {
      errors.push_back("poi " + std::to_string(p.id) + ": demand " +
                       std::to_string(p.ugv_demand) + " outside [1, " +
                       std::to_string(ugv_capacity) + "]");
    }
  }
  if (num_vehicles < 1) errors.push_back("num_vehicles must be >= 1");
  if (ugv_capacity < 1) errors.push_back("ugv_capacity must be >= 1");
  if (static_cast<int>(hri_table.size()) != ugv_capacity + 1) {
    errors.push_back("hri_table must have capacity+1 = " +
                     std::to_string(ugv_capacity + 1) + " entries, has " +
                     std::to_string(hri_table.size()));
  } else {
    if (hri_table[0] != 0.0) errors.push_back("hri_table[0] must be 0");
    for (std::size_t n = 0; n < hri_table.size(); ++n) {
      if (!(hri_table[n] >= 0.0)) {
        errors.push_back("hri_table[" + std::to_string(n) + "] must be >= 0");
        break;
      }
    }
  }
  if (!(team_cost >= 0.0)) errors.push_back("team_cost must be >= 0");
  if (!(weights.alpha >= 0.0) || !(weights.beta >= 0.0) || !(weights.gamma >= 0.0)) {
    errors.push_back("weights must be non-negative");
  } else if (weights.alpha + weights.beta + weights.gamma <= 0.0) {
    errors.push_back("weights must not all be zero");
  }
  return errors;
}

CostMatrix build_cost_matrix(const Instance& instance) {
  const int n = static_cast<int>(instance.pois.size()) + 1;
  CostMatrix m(n);
  std::vector<Point> points;
  points.reserve(n);
  points.push_back(instance.depot);
  for (const Poi& p : instance.pois) points.push_back(p.location);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = euclidean(points[i], points[j]);
      m.at(i, j) = d;
      m.at(j, i) = d;
    }
  }
  return m;
}

std::vector<int> Assignment::team_sizes() const {
  std::vector<int> y(replenishments.size());
  int acc = initial_dispatch;
  for (std::size_t t = 0; t < replenishments.size(); ++t) {
    acc += replenishments[t];
    y[t] = acc;
  }
  return y;
}

int Assignment::replenishment_events() const {
  int events = 0;
  for (int z : replenishments) {
    if (z > 0) ++events;
  }
  return events;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::poi_missing: return "poi-missing";
    case ViolationKind::poi_duplicated: return "poi-duplicated";
    case ViolationKind::demand_unmet: return "demand-unmet";
    case ViolationKind::capacity_exceeded: return "capacity-exceeded";
    case ViolationKind::assignment_length_mismatch: return "assignment-length-mismatch";
    case ViolationKind::unknown_poi: return "unknown-poi";
    case ViolationKind::negative_assignment: return "negative-assignment";
    case ViolationKind::route_count_mismatch: return "route-count-mismatch";
  }
  return "?";
}

std::string FeasibilityReport::describe() const {
  if (ok()) return "OK";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const Violation& v = violations[i];
    if (i > 0) out << "; ";
    out << to_string(v.kind);
    if (v.poi_id >= 0) out << " poi " << v.poi_id;
    if (v.route >= 0) out << " route " << v.route;
    if (v.pos >= 0) out << " pos " << v.pos;
  }
  return out.str();
}

FeasibilityReport check_feasibility(const Solution& solution, const Instance& instance) {
  FeasibilityReport report;
  auto add = [&report](ViolationKind kind, int poi_id = -1, int route = -1, int pos = -1) {
    report.violations.push_back({kind, poi_id, route, pos});
  };

  if (static_cast<int>(solution.routes.size()) != instance.num_vehicles) {
    add(ViolationKind::route_count_mismatch);
  }

  std::unordered_map<int, int> visits;
  for (std::size_t r = 0; r < solution.routes.size(); ++r) {
    const Route& route = solution.routes[r].route;
    const Assignment& asg = solution.routes[r].assignment;

    if (asg.replenishments.size() != route.size()) {
      add(ViolationKind::assignment_length_mismatch, -1, static_cast<int>(r));
      continue;  // team sizes are meaningless without matching lengths
    }
    if (asg.initial_dispatch < 0) {
      add(ViolationKind::negative_assignment, -1, static_cast<int>(r));
    }

    int y = asg.initial_dispatch;
    for (std::size_t t = 0; t < route.size(); ++t) {
      const int id = route[t];
      ++visits[id];
      if (asg.replenishments[t] < 0) {
        add(ViolationKind::negative_assignment, id, static_cast<int>(r), static_cast<int>(t));
      }
      y += asg.replenishments[t];
      const int idx = instance.poi_index(id);
      if (idx < 0) {
        add(ViolationKind::unknown_poi, id, static_cast<int>(r), static_cast<int>(t));
        continue;
      }
      if (y < instance.pois[idx].ugv_demand) {
        add(ViolationKind::demand_unmet, id, static_cast<int>(r), static_cast<int>(t));
      }
      if (y > instance.ugv_capacity) {
        add(ViolationKind::capacity_exceeded, id, static_cast<int>(r), static_cast<int>(t));
      }
    }
  }

  for (const Poi& p : instance.pois) {
    auto it = visits.find(p.id);
    if (it == visits.end()) {
      add(ViolationKind::poi_missing, p.id);
    } else if (it->second > 1) {
      add(ViolationKind::poi_duplicated, p.id);
    }
  }
  return report;
}

RouteCost route_cost(const Route& route, const Assignment& assignment,
                     const Instance& instance, const CostMatrix& matrix) {
  RouteCost cost;
  if (route.empty()) return cost;

  int prev = 0;  // depot
  int y = assignment.initial_dispatch;
  if (instance.hri_at_depot) cost.hri += instance.hri_table[y];
  for (std::size_t t = 0; t < route.size(); ++t) {
    const int idx = instance.poi_index(route[t]) + 1;
    cost.path += matrix(prev, idx);
    const int z = assignment.replenishments[t];
    if (z > 0) cost.replenishment += matrix(0, idx);
    y += z;
    cost.hri += instance.hri_table[y];
    prev = idx;
  }
  cost.path += matrix(prev, 0);
  return cost;
}

CostBreakdown evaluate(const Solution& solution, const Instance& instance,
                       const CostMatrix& matrix) {
  const FeasibilityReport report = check_feasibility(solution, instance);
  if (!report.ok()) {
    throw std::invalid_argument("infeasible solution: " + report.describe());
  }

  double r1 = 0.0, r2 = 0.0, h = 0.0;
  int teams = 0;
  for (const RoutePlan& plan : solution.routes) {
    if (plan.route.empty()) continue;
    ++teams;
    const RouteCost rc = route_cost(plan.route, plan.assignment, instance, matrix);
    r1 += rc.path;
    r2 += rc.replenishment;
    h += rc.hri;
  }
  return make_breakdown(r1, r2, h, instance.team_cost * teams, instance.weights);
}

}  // namespace mvrp
