#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bidscape/graph.hpp"
#include "bidscape/money.hpp"
#include "bidscape/uniform.hpp"

namespace bidscape {

// Ω, the adversary free to bid per query: greedy fractional fill over the
// per-query hull pieces in increasing price order. Spend is an exact integer
// total; when the budget cuts a hull segment the partial piece is kept as a
// separate record so every stored bid stays a true landscape vertex.
struct OmegaSolution {
  struct Allocation {
    std::size_t query = 0;
    Money bid = 0;       // hull vertex bid; cost/clicks at it equals the bid
    Money cost = 0;
    double traffic = 0;  // weighted clicks
  };
  struct Piece {
    std::size_t query = 0;
    Money bid_lo = 0;
    Money bid_hi = 0;
    double fraction = 0.0;  // share of the (lo -> hi) increment taken
    Money cost = 0;         // exactly the budget remainder
    double traffic = 0.0;
    double price = 0.0;     // cost per weighted click of the cut segment
  };
  std::vector<Allocation> allocations;
  std::optional<Piece> piece;
  double clicks = 0.0;  // C_omega, weighted
  Money spend = 0;      // U_omega
};

OmegaSolution omega_bound(const Instance& inst, Money budget);

struct CurveStep {
  double width = 0.0;   // weighted clicks
  double height = 0.0;  // price per click, micro-units (= cost / width)
  Money cost = 0;       // exact money under this step
};

// The click-price curve h: step heights ascending over cumulative clicks
// [0, C_omega]. Step costs sum to U_omega exactly, the integral identity.
class ClickPriceCurve {
 public:
  explicit ClickPriceCurve(std::vector<CurveStep> steps);

  const std::vector<CurveStep>& steps() const { return steps_; }
  double total_clicks() const { return total_clicks_; }
  Money total_cost() const { return total_cost_; }

  // h(r): price of the r-th click; 0 at r <= 0, clamped to the top beyond.
  double height_at(double r) const;

 private:
  std::vector<CurveStep> steps_;
  double total_clicks_ = 0.0;
  Money total_cost_ = 0;
};

// One step per allocation plus the fractional piece as its own step, sorted
// by height with equal heights merged.
ClickPriceCurve build_curve(const OmegaSolution& omega);

// Half-of-omega strategy: bid h(C_omega/2) with the probability that yields
// exactly C_omega/2 expected traffic, zero otherwise.
UniformStrategy half_strategy(const Instance& inst, Money budget);

// (1 - 1/e) strategy: mixture over single-bid atoms at clicks targets
// r_k = C_omega * e^(k/atoms - 1), k = 0..atoms-1, weight 1/atoms each.
// Left endpoints keep the expected spend within U_omega.
MixedStrategy one_minus_inv_e_strategy(const Instance& inst, Money budget,
                                       int atoms);

// The adversarial curve that makes uniform bidding (1-1/e)-tight, normalized
// to total clicks 1 and budget 1: 0 below 1/e, then (e - 1/r)/(e - 2).
double worst_case_curve(double r);

}  // namespace bidscape
