#ifndef MVRP_ASSIGNMENT_HPP
#define MVRP_ASSIGNMENT_HPP

#include <string>
#include <utility>

#include "mvrp/model.hpp"

namespace mvrp {

enum class AssignmentScheme { rule1, rule2, rule3 };

std::string to_string(AssignmentScheme scheme);

/// Carry the route maximum demand from the depot, no replenishments.
Assignment assign_rule1(const Route& route, const Instance& instance);

/// Start with the first POI's demand and top up deficits as they appear;
/// yields the pointwise-minimal team size at every position.
Assignment assign_rule2(const Route& route, const Instance& instance);

/// Exact assignment for a fixed route: dynamic program over (position,
/// team size) minimizing alpha*replenishment + beta*hri. Replenishment
/// events may jump the team size to any feasible level, so the DP picks
/// the replenishment POIs optimally. Ties prefer fewer replenishment
/// events, then the lexicographically smallest team-size vector.
Assignment assign_rule3(const Route& route, const Instance& instance,
                        const CostMatrix& matrix, const Weights& weights);

/// Exhaustive minimizer over all non-decreasing team-size vectors, same
/// objective and tie-breaking as assign_rule3. Guarded to route length <= 6
/// and capacity <= 12; throws std::invalid_argument beyond that.
Assignment assign_oracle(const Route& route, const Instance& instance,
                         const CostMatrix& matrix, const Weights& weights);

Assignment apply_scheme(AssignmentScheme scheme, const Route& route,
                        const Instance& instance, const CostMatrix& matrix,
                        const Weights& weights);

/// alpha*R2 + beta*H of one route's assignment (the part the assignment
/// rules control; path cost does not depend on the assignment).
double assignment_objective(const Route& route, const Assignment& assignment,
                            const Instance& instance, const CostMatrix& matrix,
                            const Weights& weights);

/// The better of rule1/rule2 for this route under assignment_objective,
/// with its unweighted cost components. Ties go to rule1 (no events).
std::pair<Assignment, RouteCost> best_rule12(const Route& route, const Instance& instance,
                                             const CostMatrix& matrix, const Weights& weights);

}  // namespace mvrp

#endif  // MVRP_ASSIGNMENT_HPP
