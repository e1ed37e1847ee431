#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "bidscape/graph.hpp"

namespace bidscape {

// Adversarial click-price curve to realize as an instance. The curve is
// non-decreasing and nonnegative on [0, clicks], with budget = its integral.
// clicks must be at most 1 so per-query ctrs stay valid probabilities.
struct CurveSpec {
  std::function<double(double)> f;
  double clicks = 1.0;
  double budget = 1.0;
  double slack = 1e-3;
};

struct TightInstance {
  Instance inst;
  std::vector<double> grid;   // cumulative clicks r_1 .. r_m
  std::vector<Money> price;   // per-click price at each grid point
  Money budget = 0;
  double clicks = 0.0;
};

// Matching instance whose click-price curve is the given spec: one keyword
// per query, query i carrying one slot per grid point j >= i, all with ctr
// equal to the grid step. A uniform bid of price[i] wins the first i queries
// at that price per click and nothing else.
TightInstance build_tight_instance(const CurveSpec& spec);

struct SingleBidTight {
  Instance inst;
  Money budget = 0;
  double optimal = 0.0;
};

// Two-keyword, two-query instance on which every single-bid strategy loses
// roughly half of the optimum: the cheap slot and the expensive slot can only
// be taken together by bidding unevenly.
SingleBidTight tight_single_bid_instance(double alpha, Money eps);

struct VcGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct VcInstance {
  Instance inst;
  Money budget = 0;
  Money eps = 0;
  double threshold = 0.0;
};

// Vertex-cover reduction: a keyword per vertex, a one-slot query per edge and
// a two-slot query per vertex. The threshold click count fits in the budget
// iff the graph has a vertex cover of size at most k_star.
VcInstance from_vertex_cover(const VcGraph& h, std::size_t k_star, Money eps);

struct CoverageInstance {
  Instance inst;
  Money budget = 0;
};

// Maximum-coverage reduction: a keyword per set, a weight-1 query per element
// and n^2 weight-0 unit-ctr budget-sink copies per set. The oracle's weighted
// optimum equals the best coverage achievable with k_star sets.
CoverageInstance from_max_coverage(const std::vector<std::vector<std::size_t>>& sets,
                                   std::size_t n_elements, std::size_t k_star);

enum class Shape { general, matching, nested, laminar };

// Reproducible random instance: dyadic ctrs (k/64) and bids (multiples of
// 64 micro) so every cost is an exact integer and every click sum is exact
// in double arithmetic.
Instance random_instance(std::uint64_t seed, std::size_t n_keywords,
                         std::size_t n_queries, std::size_t max_slots,
                         Shape shape);

}  // namespace bidscape
