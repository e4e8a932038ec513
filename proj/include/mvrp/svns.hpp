#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mvrp/model.hpp"

namespace mvrp {

// The five local-search neighborhoods, in sweep order. Bits into
// SvnsParams::neighborhood_mask.
enum : unsigned {
  kNeighborhoodTwoOpt = 1u << 0,
  kNeighborhoodRemoveInsert = 1u << 1,
  kNeighborhoodSwapInter = 1u << 2,
  kNeighborhoodSeqExchange = 1u << 3,
  kNeighborhoodAsgnRule3 = 1u << 4,
  kNeighborhoodAll = (1u << 5) - 1,
};

struct SvnsParams {
  int k_max = 30;
  int unimproved_max = 40;
  double recenter_gap_low = 20.0;   // percent
  double recenter_gap_high = 50.0;  // percent
  int max_seg_len = 3;
  std::uint64_t seed = 0;
  // Which local-search neighborhoods run; defaults to all five. Used by the
  // per-neighborhood benchmark, which enables one bit at a time.
  unsigned neighborhood_mask = kNeighborhoodAll;
};

enum class TracePhase { construction, iteration };

// One record per shake + local-search step (plus one construction record).
// gap_percent is 100*(candidate - f)/f measured against the search center f
// before this step, the quantity that gates skewed recentering.
struct TraceRecord {
  int iteration = 0;  // 0 for the construction record, then 1, 2, ...
  TracePhase phase = TracePhase::iteration;
  int k = 0;                     // shake intensity used this step
  double candidate_total = 0.0;  // local-search result total this step
  double current_total = 0.0;    // total of the search center f after this step
  double incumbent_total = 0.0;  // best total ever seen, after this step
  double gap_percent = 0.0;
  bool accepted = false;    // candidate strictly improved the search center
  bool recentered = false;  // candidate adopted by skewed recentering
};

using SearchTrace = std::vector<TraceRecord>;

struct SvnsResult {
  Solution solution;
  CostBreakdown cost;
  SearchTrace trace;
};

// Applies max(1, k) random intra-route swaps, each on a uniformly chosen
// route of length >= 2 with two distinct uniform positions, then recomputes
// every route's assignment as the better of rule1/rule2. Returns the input
// unchanged when no route has length >= 2.
Solution shake(const Solution& solution, int k, const Instance& instance,
               const CostMatrix& matrix, const Weights& weights, std::mt19937_64& rng);

// Sequential best-improvement descent over the enabled neighborhoods in the
// order 2-opt-intra, remove-insert, swap-inter, seq-exchange, asgn-rule3.
// Route-move candidates are completed with the better of rule1/rule2 per
// route; the asgn-rule3 neighborhood keeps the routes fixed and applies the
// exact assignment DP per route. A strict improvement restarts the sweep at
// the first neighborhood; returns when no enabled neighborhood improves.
Solution local_search(const Solution& solution, const Instance& instance,
                      const CostMatrix& matrix, const Weights& weights,
                      const SvnsParams& params);

// Full skewed VNS run on the instance's own weights: construct, then shake /
// local-search loops with skewed recentering. Returns the best solution ever
// observed together with its cost breakdown and the search trace.
// Deterministic for a fixed (instance, params.seed).
SvnsResult solve(const Instance& instance, const SvnsParams& params);

// Weighted total of a (feasible) solution under explicit weights; the
// quantity SVNS minimizes. Exposed for tests and the benchmark harness.
double solution_total(const Solution& solution, const Instance& instance,
                      const CostMatrix& matrix, const Weights& weights);

}  // namespace mvrp
