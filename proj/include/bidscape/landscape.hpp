#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bidscape/money.hpp"

namespace bidscape {

// One advertiser position in a query's auction: the occupant's bid and the
// click-through rate of the position. Winning the position costs ctr * bid.
struct Slot {
  Money bid = 0;
  double ctr = 0.0;
};

struct Outcome {
  Money cost = 0;
  double clicks = 0.0;
};

// Competing bids for one query, best position first. Bids and ctrs must both
// be non-increasing and non-negative; ctr lies in [0, 1].
class SlotTable {
 public:
  SlotTable() = default;
  explicit SlotTable(std::vector<Slot> slots);

  const std::vector<Slot>& slots() const { return slots_; }
  std::size_t size() const { return slots_.size(); }
  bool empty() const { return slots_.empty(); }

  // Highest position whose occupant bid is <= b. Ties on the bid value are
  // won by the challenger, so equal competing bids yield the better position.
  std::optional<std::size_t> position_for_bid(Money b) const;

  Outcome cost_clicks_at(Money b) const;

 private:
  std::vector<Slot> slots_;
};

struct LandscapePoint {
  Money bid = 0;
  Money cost = 0;
  double clicks = 0.0;
};

// Bidding landscape: reachable (cost, clicks) outcomes keyed by the lowest
// bid attaining them, ascending by bid, starting at the origin. Cost and
// clicks are non-decreasing along the point list.
class Landscape {
 public:
  Landscape() { points_.push_back({0, 0, 0.0}); }
  explicit Landscape(std::vector<LandscapePoint> points);

  const std::vector<LandscapePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  // Point with the largest bid <= b (the origin when b underbids everything).
  const LandscapePoint& outcome_at(Money b) const;

  Money max_cost() const { return points_.back().cost; }
  double max_clicks() const { return points_.back().clicks; }

 private:
  std::vector<LandscapePoint> points_;
};

// Landscape of a single query. Every slot contributes the point
// (bid_i, round(ctr_i * bid_i), ctr_i); unreachable duplicates are dropped.
Landscape landscape_from_slots(const SlotTable& table);

// Per-click prices of the landscape points, rounded to micro-units,
// deduplicated and ascending. On integral-cost tables these equal the slot
// bids exactly.
std::vector<Money> interesting_bids(const Landscape& ls);

struct HullPoint {
  Money bid = 0;
  Money cost = 0;
  double clicks = 0.0;
};

// Upper concave hull of the landscape in the (cost, clicks) plane. Collinear
// interior points are dropped. The hull starts at the origin.
std::vector<HullPoint> convex_hull(const Landscape& ls);

// Randomization over at most a handful of bids; weights sum to 1.
struct BidDistribution {
  std::vector<std::pair<Money, double>> atoms;
};

struct LandscapeMix {
  BidDistribution dist;
  double clicks = 0.0;
  double spend = 0.0;  // expected, micro-units
};

// Best randomized single-query strategy under the budget: a mix of at most
// two hull bids, spending the whole budget unless the top point is cheaper.
LandscapeMix optimal_landscape_mix(const Landscape& ls, Money budget);

// Expected (cost, clicks) of a bid distribution against one landscape.
std::pair<double, double> evaluate_distribution(const Landscape& ls,
                                                const BidDistribution& dist);

}  // namespace bidscape
