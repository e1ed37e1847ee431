#pragma once

#include "bidscape/exact.hpp"
#include "bidscape/graph.hpp"

namespace bidscape {

struct OracleResult {
  BidVector bids;
  Money spend = 0;
  double traffic = 0.0;
};

// Exhaustive search over all bid vectors drawn from the grid levels.
// Ties break toward the lexicographically smallest vector (keyword 0 most
// significant). Guard: |levels|^|K| <= 1e7.
OracleResult brute_force_deterministic(const Instance& inst, Money budget,
                                       const GridSpec& grid);

// Single-threaded reference for the parallel search above.
OracleResult brute_force_deterministic_serial(const Instance& inst, Money budget,
                                              const GridSpec& grid);

// Optimal mixed strategy supported on the grid: the upper concave envelope
// of every pure outcome, evaluated at the budget. At most two atoms.
// Guard: |levels|^|K| <= 1e6 (all outcomes are materialized).
RandomizedSolution brute_force_randomized(const Instance& inst, Money budget,
                                          const GridSpec& grid);

}  // namespace bidscape
