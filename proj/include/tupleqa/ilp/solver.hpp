#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tupleqa/ilp/program.hpp"

namespace tupleqa::ilp {

enum class SolveStatus { Optimal, Infeasible };

enum class BoundMode {
  LpRelaxation,  // simplex on the relaxation at every node
  PositiveSum,   // fixed objective + positive coefficients of free variables
};

struct SolveStats {
  long nodes_explored = 0;
  double wall_seconds = 0.0;
};

// Snapshot of a branch node, exposed for bound-admissibility checks.
struct NodeInfo {
  std::vector<int> fixed;  // per-variable value, -1 while free
  double bound = 0.0;
};

struct SolveOptions {
  BoundMode bound_mode = BoundMode::LpRelaxation;
  std::function<void(const NodeInfo&)> node_observer;
};

struct Solution {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<double> objective;
  Assignment assignment;
  SolveStats stats;
};

// Exact maximization over binary variables by depth-first branch and bound.
// Deterministic: most-fractional branching on the relaxation (lowest index
// on ties), value 1 explored before 0.
Solution solve(const BinaryProgram& program, const SolveOptions& options = {});

// Exhaustive enumeration oracle; throws std::invalid_argument("oracle limit")
// beyond 25 free variables.
Solution brute_force(const BinaryProgram& program);

}  // namespace tupleqa::ilp
