#include "bidscape/factor_lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bidscape {

FactorGrid make_factor_grid(int K, int alpha_mil) {
  if (K < 2) throw std::invalid_argument("grid step must be below C");
  if (alpha_mil <= 0 || alpha_mil >= 1000)
    throw std::invalid_argument("alpha must lie strictly inside (0, 1)");

  FactorGrid g;
  g.K = K;
  g.alpha_mil = alpha_mil;
  const double ac = g.alpha();  // alpha * C with C = 1

  // i/K <= alpha  <=>  1000*i <= alpha_mil*K, exactly in integers.
  const long long aK = static_cast<long long>(alpha_mil) * K;
  for (int i = 0; i <= K; ++i) {
    if (1000LL * i > aK) break;
    for (int j = i; j <= K; ++j) {
      if (1000LL * j < aK) continue;
      GridPair p;
      p.u = i;
      p.v = j;
      if (i == j) {
        // u = v = alpha*C; any split works, the constraint is alpha*C*h.
        p.p1 = 0.5;
        p.p2 = 0.5;
      } else {
        p.p2 = (ac - g.point(i)) / (g.point(j) - g.point(i));
        p.p1 = 1.0 - p.p2;
      }
      g.pairs.push_back(p);
    }
  }
  return g;
}

LpProblem build_primal(const FactorGrid& grid) {
  const std::size_t n = grid.K + 1;
  LpProblem lp;
  lp.maximize = false;
  lp.objective.assign(n, grid.eps());
  lp.rows.reserve(grid.pairs.size());
  for (const auto& p : grid.pairs) {
    std::vector<double> row(n, 0.0);
    row[p.u] += p.p1 * grid.point(p.u);
    row[p.v] += p.p2 * grid.point(p.v);
    lp.rows.push_back(std::move(row));
    lp.senses.push_back(LpSense::ge);
    lp.rhs.push_back(1.0);  // U
  }
  return lp;
}

LpProblem build_dual(const FactorGrid& grid) {
  const std::size_t n = grid.pairs.size();
  LpProblem lp;
  lp.maximize = true;
  lp.objective.assign(n, 1.0);  // U per unit of mixture weight
  lp.rows.assign(grid.K + 1, std::vector<double>(n, 0.0));
  for (std::size_t s = 0; s < n; ++s) {
    const auto& p = grid.pairs[s];
    lp.rows[p.u][s] += p.p1 * grid.point(p.u);
    lp.rows[p.v][s] += p.p2 * grid.point(p.v);
  }
  lp.senses.assign(grid.K + 1, LpSense::le);
  lp.rhs.assign(grid.K + 1, grid.eps());
  return lp;
}

namespace {

double objective_at(int K, int alpha_mil) {
  const FactorGrid g = make_factor_grid(K, alpha_mil);
  const LpSolution sol = solve_lp(build_dual(g));
  if (sol.status != LpStatus::optimal)
    throw std::runtime_error("factor LP solve failed");
  return sol.objective;
}

}  // namespace

AlphaResult search_alpha(int K) {
  if (K < 4) throw std::invalid_argument("grid step must be at most 0.25");
  // objective(alpha) decreases from far above U toward 0; find the first
  // thousandth where it has reached U.
  int lo = 1, hi = 999;
  double obj_hi = objective_at(K, hi);
  if (obj_hi > 1.0 + 1e-9)
    throw std::runtime_error("ratio threshold above search range");
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    const double obj = objective_at(K, mid);
    if (obj <= 1.0 + 1e-9) {
      hi = mid;
      obj_hi = obj;
    } else {
      lo = mid + 1;
    }
  }
  AlphaResult r;
  r.alpha_mil = hi;
  r.alpha = hi / 1000.0;
  r.objective = obj_hi;
  return r;
}

std::vector<std::pair<double, double>> dual_to_strategy(const LpSolution& sol,
                                                        const FactorGrid& grid) {
  if (sol.status != LpStatus::optimal)
    throw std::invalid_argument("dual solution is not optimal");
  if (sol.x.size() != grid.pairs.size())
    throw std::invalid_argument("solution does not match grid");

  std::vector<double> mass(grid.K + 1, 0.0);
  double total = 0.0;
  for (std::size_t s = 0; s < grid.pairs.size(); ++s) {
    const auto& p = grid.pairs[s];
    const double w = sol.x[s];
    if (w <= 0.0) continue;
    mass[p.u] += p.p1 * w;
    mass[p.v] += p.p2 * w;
    total += w;
  }
  if (total <= 0.0) throw std::invalid_argument("dual solution carries no mass");

  std::vector<std::pair<double, double>> out;
  for (int i = 0; i <= grid.K; ++i)
    if (mass[i] > 1e-15) out.emplace_back(grid.point(i), mass[i] / total);
  return out;
}

}  // namespace bidscape
