#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bidscape/graph.hpp"
#include "bidscape/money.hpp"

namespace bidscape {

// Discretization for the dynamic programs: explicit bid levels (ascending,
// starting at 0) and an integer budget unit. Costs are charged in whole
// units, rounded up, so returned vectors never overspend the true budget.
// Unit 1 makes the programs exact on integer micro-money costs.
struct GridSpec {
  std::vector<Money> bid_levels;
  Money budget_unit = 10000;  // one cent
};

// Zero plus every interesting bid, cent budget units.
GridSpec default_grid(const Instance& inst);

// A (cost, traffic) outcome tagged with the solution that produced it.
// The oracle, the greedy solvers, and the budget sweep all reduce to upper
// hulls over these points.
struct SweepPoint {
  Money cost = 0;
  double traffic = 0.0;
  std::size_t tag = 0;
};

// Strict corners of the upper hull, ascending in cost: dominated points and
// collinear interior points are dropped. Ties keep the lowest tag.
std::vector<SweepPoint> upper_corners(std::vector<SweepPoint> pts);

// Best randomized traffic at the budget: linear interpolation between the
// bracketing corners. Every solver reports randomized traffic through this
// one function so equal real values stay equal in floating point.
double corners_value_at(const std::vector<SweepPoint>& corners, Money budget);

struct ExactSolution {
  MixedStrategy strategy;
  Money spend = 0;  // expected; exact because the cut fraction cancels
  double traffic = 0.0;
};

// Greedy over per-query hull pieces in cost-per-click order; the at most one
// fractional piece becomes a two-bid randomization on its query's keyword.
// Optimal for matchings (fractional knapsack).
ExactSolution solve_matching(const Instance& inst, Money budget);

// Keyword-centered stars collapse to aggregate landscapes, query-centered
// stars keep their lowest keyword; then the matching greedy runs over the
// resulting independent units.
ExactSolution solve_union_of_stars(const Instance& inst, Money budget);

// Per-layer increments along a nested order: traffic and cost over
// Q_i minus Q_{i-1} at each bid level. Both rows are non-decreasing in the
// bid level.
struct IncrementalStats {
  std::vector<std::vector<double>> traffic;  // [layer][level]
  std::vector<std::vector<Money>> cost;
};

IncrementalStats incremental_stats(const Instance& inst,
                                   const std::vector<std::size_t>& order,
                                   const GridSpec& grid);

struct DpSolution {
  BidVector bids;
  Money spend = 0;  // of evaluate(inst, bids), the authoritative outcome
  double traffic = 0.0;
};

// Exact DP over nested neighborhoods: innermost keywords bid highest, each
// layer extends the next-inner optimum via a suffix maximum over bids.
DpSolution solve_nested_dp(const Instance& inst, Money budget, const GridSpec& grid);

// Adds dummy keywords (each covering the union of two sibling subtrees)
// until every laminar tree node has at most two children. Keyword count at
// most doubles; the grid optimum is unchanged.
Instance binarize_laminar(const Instance& inst);

// Exact DP over a laminar forest: binarizes, solves children pairs by a
// budget-split convolution, and strips dummy keywords from the result.
// Keywords with equal neighborhoods are solved as one node and share a bid.
DpSolution solve_laminar_dp(const Instance& inst, Money budget, const GridSpec& grid);

// Deterministic optimum at every grid budget 0, unit, ..., up to the budget,
// routed to the nested or laminar DP by structure.
struct SweepEntry {
  Money budget = 0;
  Money spend = 0;
  double traffic = 0.0;
  BidVector bids;
};

std::vector<SweepEntry> budget_sweep(const Instance& inst, Money budget,
                                     const GridSpec& grid);

struct RandomizedSolution {
  MixedStrategy strategy;
  double spend = 0.0;  // expected, micro-units
  double traffic = 0.0;
};

// Hull over (budget, traffic) sweep points; the optimum randomized solution
// mixes the deterministic solutions at the two bracketing corners.
RandomizedSolution randomize_over_budgets(const std::vector<SweepEntry>& sweep,
                                          Money budget);

}  // namespace bidscape
