#pragma once

#include <vector>

#include "tupleqa/ilp/program.hpp"

namespace tupleqa::ilp {

enum class LpStatus { Optimal, Infeasible, IterationLimit };

struct LpRow {
  std::vector<std::pair<size_t, double>> terms;
  Relation relation = Relation::LessEq;
  double rhs = 0.0;
};

// maximize objective . x  subject to rows, 0 <= x_j <= upper_j
struct LpProblem {
  std::vector<double> objective;
  std::vector<double> upper;
  std::vector<LpRow> rows;
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  std::vector<double> x;
  int iterations = 0;
};

// Two-phase primal simplex with bounded variables, dense tableau.
// Deterministic pivoting: Dantzig rule with lowest-index tie-breaks,
// switching to Bland's rule after an iteration threshold.
LpResult solve_lp(const LpProblem& problem);

}  // namespace tupleqa::ilp
