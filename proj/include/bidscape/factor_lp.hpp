#pragma once

#include <utility>
#include <vector>

#include "bidscape/simplex.hpp"

namespace bidscape {

// Clicks and budget are normalized to C = U = 1; a scaling argument carries
// the results to arbitrary totals.

// One randomized two-target strategy: buy u clicks with probability p1,
// v clicks with probability p2, so that p1*u + p2*v = alpha*C.
struct GridPair {
  int u = 0;  // grid indices, value = index / K
  int v = 0;
  double p1 = 0.0;
  double p2 = 0.0;
};

struct FactorGrid {
  int K = 0;          // grid resolution, eps = 1/K
  int alpha_mil = 0;  // candidate ratio in thousandths
  std::vector<GridPair> pairs;

  double eps() const { return 1.0 / K; }
  double alpha() const { return alpha_mil / 1000.0; }
  double point(int i) const { return static_cast<double>(i) / K; }
};

// Enumerates S = {(u, v) on the grid : 0 <= u <= alpha*C <= v <= C}.
// Grid membership is decided in exact integer arithmetic.
FactorGrid make_factor_grid(int K, int alpha_mil);

// Worst-case curve: min sum eps*h_r subject to, for every pair,
// p1*u*h_u + p2*v*h_v >= U, h >= 0. One row per pair.
LpProblem build_primal(const FactorGrid& grid);

// Exact LP dual of build_primal: max U * sum w over pairs, subject to one
// row per grid point r bounding sum of p*value coefficients by eps.
// Solving this smaller problem also recovers h as the row multipliers.
LpProblem build_dual(const FactorGrid& grid);

struct AlphaResult {
  int alpha_mil = 0;
  double alpha = 0.0;
  double objective = 0.0;  // LP objective at the returned alpha
};

// Smallest alpha on a 1e-3 grid whose LP objective has dropped to U.
// The objective decreases in alpha, so this is the achievability threshold.
AlphaResult search_alpha(int K);

// Marginalizes optimal dual weights w_{u,v} into a distribution over
// clicks-targets r, via p1 mass at u and p2 mass at v.
std::vector<std::pair<double, double>> dual_to_strategy(const LpSolution& sol,
                                                        const FactorGrid& grid);

}  // namespace bidscape
