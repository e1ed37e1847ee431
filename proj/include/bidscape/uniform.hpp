#pragma once

#include <vector>

#include "bidscape/graph.hpp"
#include "bidscape/landscape.hpp"
#include "bidscape/money.hpp"

namespace bidscape {

// A strategy supported on uniform bid vectors: at most two bids, or one
// non-zero bid mixed with zero.
struct UniformStrategy {
  enum class Kind { two_bid, single_bid };
  Kind kind = Kind::two_bid;
  std::vector<std::pair<Money, double>> atoms;  // (uniform bid, weight), <= 2
  double traffic = 0.0;
  double spend = 0.0;  // expected, micro-units
};

// Union of per-query interesting bids, ascending and deduplicated. Bidding
// between two consecutive values never beats rounding down onto the grid.
std::vector<Money> interesting_bids(const Instance& inst);

// Landscape of uniform bidding: one point per interesting bid holding the
// exact total spend and weighted traffic of that uniform bid. Built by one
// sorted sweep over all landscape deltas: O(N log N) in the total number of
// landscape points, independent of how bids and queries intersect.
Landscape aggregate_landscape(const Instance& inst);

// Same sweep restricted to a subset of queries (ascending indices).
Landscape aggregate_landscape(const Instance& inst,
                              const std::vector<std::size_t>& queries);

// Best randomization over uniform bids under the budget: at most two bids
// from the aggregate hull, spending min(budget, max aggregate cost).
UniformStrategy best_uniform(const Instance& inst, Money budget);

// Best strategy mixing one uniform bid with zero: either the best affordable
// pure bid or a scaled-down overshooting bid, whichever wins more traffic
// (ties keep the pure bid).
UniformStrategy best_single_bid(const Instance& inst, Money budget);

// Expands a strategy over uniform bid values into explicit bid vectors.
MixedStrategy uniform_mixture(const Instance& inst, const UniformStrategy& s);

}  // namespace bidscape
