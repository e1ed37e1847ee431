#include "bidscape/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace bidscape {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-9;
constexpr std::size_t kMaxIters = 100000;
// Consecutive degenerate pivots before switching to Bland's rule.
constexpr std::size_t kStallLimit = 64;

struct Tableau {
  std::size_t m = 0;      // constraint rows
  std::size_t width = 0;  // structural + slack/surplus + artificial columns
  std::vector<std::vector<double>> a;  // m rows of width+1 (last = rhs)
  std::vector<double> cost;            // reduced-cost row, width+1 (last = -z)
  std::vector<std::size_t> basis;      // basic column per row
  std::vector<bool> barred;            // columns excluded from entering

  double& rhs(std::size_t i) { return a[i][width]; }

  void pivot(std::size_t row, std::size_t col) {
    const double p = a[row][col];
    const double inv = 1.0 / p;
    for (auto& v : a[row]) v *= inv;
    a[row][col] = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row) continue;
      const double f = a[i][col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= width; ++j) a[i][j] -= f * a[row][j];
      a[i][col] = 0.0;
    }
    const double f = cost[col];
    if (f != 0.0) {
      for (std::size_t j = 0; j <= width; ++j) cost[j] -= f * a[row][j];
      cost[col] = 0.0;
    }
    basis[row] = col;
  }

  // Returns optimal/unbounded/failure.
  LpStatus run() {
    std::size_t stalled = 0;
    for (std::size_t iter = 0; iter < kMaxIters; ++iter) {
      const bool bland = stalled >= kStallLimit;
      std::size_t enter = width;
      double best = -kCostTol;
      for (std::size_t j = 0; j < width; ++j) {
        if (barred[j]) continue;
        if (cost[j] < best) {
          enter = j;
          if (bland) break;
          best = cost[j];
        }
      }
      if (enter == width) return LpStatus::optimal;

      std::size_t leave = m;
      double ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m; ++i) {
        if (a[i][enter] <= kPivotTol) continue;
        const double r = rhs(i) / a[i][enter];
        if (r < ratio - kPivotTol ||
            (r < ratio + kPivotTol && (leave == m || basis[i] < basis[leave]))) {
          ratio = r;
          leave = i;
        }
      }
      if (leave == m) return LpStatus::unbounded;
      stalled = ratio <= kPivotTol ? stalled + 1 : 0;
      pivot(leave, enter);
    }
    return LpStatus::failure;
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& lp) {
  const std::size_t n = lp.n_vars();
  const std::size_t m = lp.n_rows();
  if (lp.senses.size() != m || lp.rhs.size() != m)
    throw std::invalid_argument("lp row metadata size mismatch");
  for (const auto& row : lp.rows)
    if (row.size() != n) throw std::invalid_argument("lp row width mismatch");

  // Internal form: minimize over rows normalized to rhs >= 0.
  std::vector<double> c(lp.objective);
  if (lp.maximize)
    for (auto& v : c) v = -v;

  std::vector<int> flip(m, 1);
  std::vector<LpSense> sense(lp.senses);
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.rhs[i] < 0.0) {
      flip[i] = -1;
      if (sense[i] == LpSense::le)
        sense[i] = LpSense::ge;
      else if (sense[i] == LpSense::ge)
        sense[i] = LpSense::le;
    }
  }

  std::size_t n_slack = 0, n_art = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (sense[i] != LpSense::eq) ++n_slack;
    if (sense[i] != LpSense::le) ++n_art;
  }

  Tableau t;
  t.m = m;
  t.width = n + n_slack + n_art;
  t.a.assign(m, std::vector<double>(t.width + 1, 0.0));
  t.cost.assign(t.width + 1, 0.0);
  t.basis.assign(m, 0);
  t.barred.assign(t.width, false);

  // slack_col[i] / art_col[i] = column index or width if absent
  std::vector<std::size_t> slack_col(m, t.width), art_col(m, t.width);
  std::size_t next = n;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.a[i][j] = flip[i] * lp.rows[i][j];
    t.rhs(i) = flip[i] * lp.rhs[i];
    if (sense[i] == LpSense::le) {
      slack_col[i] = next;
      t.a[i][next] = 1.0;
      t.basis[i] = next++;
    } else if (sense[i] == LpSense::ge) {
      slack_col[i] = next;
      t.a[i][next++] = -1.0;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (sense[i] == LpSense::le) continue;
    art_col[i] = next;
    t.a[i][next] = 1.0;
    t.basis[i] = next++;
  }

  LpSolution out;

  if (n_art > 0) {
    // Phase 1: minimize the artificial sum.
    for (std::size_t i = 0; i < m; ++i) {
      if (art_col[i] == t.width) continue;
      for (std::size_t j = 0; j <= t.width; ++j) t.cost[j] -= t.a[i][j];
      t.cost[art_col[i]] = 0.0;
    }
    const LpStatus st = t.run();
    if (st != LpStatus::optimal) {
      out.status = LpStatus::failure;
      return out;
    }
    if (-t.cost[t.width] > 1e-7) {
      out.status = LpStatus::infeasible;
      return out;
    }
    // Drive any residual artificial out of the basis when its row allows.
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] < n + n_slack) continue;
      for (std::size_t j = 0; j < n + n_slack; ++j) {
        if (std::abs(t.a[i][j]) > kPivotTol) {
          t.pivot(i, j);
          break;
        }
      }
    }
    for (std::size_t j = n + n_slack; j < t.width; ++j) t.barred[j] = true;
  }

  // Phase 2: original costs expressed over the current basis.
  std::fill(t.cost.begin(), t.cost.end(), 0.0);
  for (std::size_t j = 0; j < n; ++j) t.cost[j] = c[j];
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t b = t.basis[i];
    const double f = b < n ? c[b] : 0.0;
    if (f == 0.0) continue;
    for (std::size_t j = 0; j <= t.width; ++j) t.cost[j] -= f * t.a[i][j];
    t.cost[b] = 0.0;
  }

  out.status = t.run();
  if (out.status != LpStatus::optimal) return out;

  out.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] < n) out.x[t.basis[i]] = t.rhs(i);
  double z = 0.0;
  for (std::size_t j = 0; j < n; ++j) z += lp.objective[j] * out.x[j];
  out.objective = z;

  // Row multipliers from the reduced costs of each row's unit column:
  // slack +1 gives -cost, surplus -1 gives +cost, artificial +1 gives -cost.
  out.duals.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double y;
    if (art_col[i] != t.width)
      y = -t.cost[art_col[i]];
    else if (sense[i] == LpSense::le)
      y = -t.cost[slack_col[i]];
    else
      y = t.cost[slack_col[i]];
    y *= flip[i];
    out.duals[i] = lp.maximize ? -y : y;
  }

  // Reject numerically corrupt bases rather than returning garbage.
  for (std::size_t i = 0; i < m; ++i) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < n; ++j) lhs += lp.rows[i][j] * out.x[j];
    const double resid = lhs - lp.rhs[i];
    const double scale = std::max({1.0, std::abs(lp.rhs[i]), std::abs(lhs)});
    const bool ok = lp.senses[i] == LpSense::le  ? resid <= 1e-7 * scale
                    : lp.senses[i] == LpSense::ge ? resid >= -1e-7 * scale
                                                  : std::abs(resid) <= 1e-7 * scale;
    if (!ok) {
      out.status = LpStatus::failure;
      return out;
    }
  }
  for (double v : out.x) {
    if (v < -1e-7) {
      out.status = LpStatus::failure;
      return out;
    }
  }
  return out;
}

}  // namespace bidscape
