#pragma once

#include <vector>

namespace bidscape {

enum class LpSense : char { le, ge, eq };

enum class LpStatus { optimal, infeasible, unbounded, failure };

struct LpProblem {
  bool maximize = false;
  std::vector<double> objective;          // one coefficient per variable
  std::vector<std::vector<double>> rows;  // dense constraint coefficients
  std::vector<LpSense> senses;
  std::vector<double> rhs;

  std::size_t n_vars() const { return objective.size(); }
  std::size_t n_rows() const { return rows.size(); }
};

struct LpSolution {
  LpStatus status = LpStatus::failure;
  std::vector<double> x;
  double objective = 0.0;
  // One multiplier per row; b'duals equals the objective at optimality.
  // Signs follow the usual convention for the problem's direction.
  std::vector<double> duals;
};

// Dense two-phase tableau simplex over variables x >= 0. Dantzig pricing
// with a Bland fallback against cycling; pivot tolerance 1e-9; iteration
// cap 1e5 per phase reported as failure.
LpSolution solve_lp(const LpProblem& lp);

}  // namespace bidscape
