#include "tupleqa/ilp/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tupleqa/ilp/simplex.hpp"

namespace tupleqa::ilp {

namespace {

constexpr double kFeasTol = 1e-9;
constexpr double kIntTol = 1e-6;
constexpr double kBoundSafety = 1e-7;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool row_satisfied(const CompiledProgram::Row& row,
                   const std::vector<int>& value) {
  double lhs = 0.0;
  for (const auto& [v, coef] : row.terms) lhs += coef * value[v];
  switch (row.relation) {
    case Relation::LessEq: return lhs <= row.bound + kFeasTol;
    case Relation::Equal: return std::abs(lhs - row.bound) <= kFeasTol;
    case Relation::GreaterEq: return lhs >= row.bound - kFeasTol;
  }
  return false;
}

class BranchAndBound {
 public:
  BranchAndBound(const CompiledProgram& cp, const SolveOptions& options)
      : cp_(cp), options_(options) {
    value_ = cp.fixed;
    var_rows_.resize(cp.n);
    for (size_t r = 0; r < cp.rows.size(); ++r)
      for (const auto& [v, coef] : cp.rows[r].terms)
        var_rows_[v].emplace_back(r, coef);

    rows_.resize(cp.rows.size());
    for (size_t r = 0; r < cp.rows.size(); ++r) {
      for (const auto& [v, coef] : cp.rows[r].terms) {
        if (value_[v] >= 0)
          rows_[r].fixed_sum += coef * value_[v];
        else if (coef > 0)
          rows_[r].free_pos += coef;
        else
          rows_[r].free_neg += coef;
      }
    }
    for (size_t v = 0; v < cp.n; ++v) {
      if (value_[v] >= 0)
        fixed_obj_ += cp.coeff[v] * value_[v];
      else if (cp.coeff[v] > 0)
        free_pos_obj_ += cp.coeff[v];
    }
  }

  Solution run() {
    auto start = std::chrono::steady_clock::now();
    Solution sol;
    if (all_rows_possible()) recurse();
    sol.stats.nodes_explored = nodes_;
    sol.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (!have_incumbent_) return sol;  // status Infeasible
    sol.status = SolveStatus::Optimal;
    sol.objective = incumbent_;
    return sol;
  }

  const std::vector<int>& best() const { return best_; }

 private:
  struct RowState {
    double fixed_sum = 0.0;
    double free_pos = 0.0;
    double free_neg = 0.0;
  };

  void fix(size_t v, int val) {
    value_[v] = val;
    fixed_obj_ += cp_.coeff[v] * val;
    if (cp_.coeff[v] > 0) free_pos_obj_ -= cp_.coeff[v];
    for (const auto& [r, coef] : var_rows_[v]) {
      rows_[r].fixed_sum += coef * val;
      if (coef > 0)
        rows_[r].free_pos -= coef;
      else
        rows_[r].free_neg -= coef;
    }
  }

  void unfix(size_t v, int val) {
    value_[v] = -1;
    fixed_obj_ -= cp_.coeff[v] * val;
    if (cp_.coeff[v] > 0) free_pos_obj_ += cp_.coeff[v];
    for (const auto& [r, coef] : var_rows_[v]) {
      rows_[r].fixed_sum -= coef * val;
      if (coef > 0)
        rows_[r].free_pos += coef;
      else
        rows_[r].free_neg += coef;
    }
  }

  bool row_possible(size_t r) const {
    const RowState& s = rows_[r];
    double lo = s.fixed_sum + s.free_neg;
    double hi = s.fixed_sum + s.free_pos;
    double b = cp_.rows[r].bound;
    switch (cp_.rows[r].relation) {
      case Relation::LessEq: return lo <= b + kFeasTol;
      case Relation::Equal: return lo <= b + kFeasTol && hi >= b - kFeasTol;
      case Relation::GreaterEq: return hi >= b - kFeasTol;
    }
    return false;
  }

  bool all_rows_possible() const {
    for (size_t r = 0; r < rows_.size(); ++r)
      if (!row_possible(r)) return false;
    return true;
  }

  bool rows_of_var_possible(size_t v) const {
    for (const auto& [r, coef] : var_rows_[v])
      if (!row_possible(r)) return false;
    return true;
  }

  // Exact objective of the current complete assignment, summed in
  // declaration order so ties are reproducible.
  double exact_objective() const {
    double z = 0.0;
    for (size_t v = 0; v < cp_.n; ++v) z += cp_.coeff[v] * value_[v];
    return z;
  }

  bool exact_feasible(const std::vector<int>& candidate) const {
    for (const auto& row : cp_.rows)
      if (!row_satisfied(row, candidate)) return false;
    return true;
  }

  void offer_incumbent(const std::vector<int>& candidate, double objective) {
    if (!have_incumbent_ || objective > incumbent_) {
      have_incumbent_ = true;
      incumbent_ = objective;
      best_ = candidate;
    }
  }

  // Solves the relaxation over free variables. Returns false when the node
  // is pruned (relaxation infeasible or bound dominated); fills branch_var
  // otherwise, or finishes the node when the relaxation lands integral.
  bool lp_node(size_t* branch_var, bool* node_done) {
    LpProblem lp;
    std::vector<size_t> free_vars;
    std::vector<size_t> lp_index(cp_.n, size_t(-1));
    for (size_t v = 0; v < cp_.n; ++v) {
      if (value_[v] >= 0) continue;
      lp_index[v] = free_vars.size();
      free_vars.push_back(v);
      lp.objective.push_back(cp_.coeff[v]);
      lp.upper.push_back(1.0);
    }
    for (size_t r = 0; r < cp_.rows.size(); ++r) {
      LpRow row;
      for (const auto& [v, coef] : cp_.rows[r].terms)
        if (value_[v] < 0) row.terms.emplace_back(lp_index[v], coef);
      if (row.terms.empty()) continue;  // fully fixed, already checked
      row.relation = cp_.rows[r].relation;
      row.rhs = cp_.rows[r].bound - rows_[r].fixed_sum;
      lp.rows.push_back(std::move(row));
    }

    LpResult lr = solve_lp(lp);
    if (lr.status == LpStatus::Infeasible) return false;
    if (lr.status != LpStatus::Optimal) {
      // numerical bailout: fall back to the admissible sum bound
      double bound = fixed_obj_ + free_pos_obj_ + kBoundSafety;
      observe(bound);
      if (have_incumbent_ && bound <= incumbent_ + kFeasTol) return false;
      *branch_var = free_vars.front();
      return true;
    }

    double bound = fixed_obj_ + lr.objective + kBoundSafety;
    observe(bound);
    if (have_incumbent_ && bound <= incumbent_ + kFeasTol) return false;

    // most fractional value, ties toward the lowest variable index
    size_t pick = size_t(-1);
    double best_frac = kIntTol;
    for (size_t k = 0; k < free_vars.size(); ++k) {
      double frac = std::min(lr.x[k], 1.0 - lr.x[k]);
      if (frac > best_frac) {
        best_frac = frac;
        pick = free_vars[k];
      }
    }
    if (pick == size_t(-1)) {
      // integral relaxation: adopt it if it passes the exact check
      std::vector<int> candidate = value_;
      for (size_t k = 0; k < free_vars.size(); ++k)
        candidate[free_vars[k]] = lr.x[k] > 0.5 ? 1 : 0;
      if (exact_feasible(candidate)) {
        double z = 0.0;
        for (size_t v = 0; v < cp_.n; ++v) z += cp_.coeff[v] * candidate[v];
        offer_incumbent(candidate, z);
        *node_done = true;
        return true;
      }
      *branch_var = free_vars.front();
      return true;
    }
    *branch_var = pick;
    return true;
  }

  // Largest absolute objective coefficient first; deterministic stand-in
  // for the fractional rule when no relaxation values exist.
  size_t sum_mode_branch_var() const {
    size_t pick = size_t(-1);
    double best_mag = -1.0;
    for (size_t v = 0; v < cp_.n; ++v) {
      if (value_[v] >= 0) continue;
      double mag = std::abs(cp_.coeff[v]);
      if (mag > best_mag) {
        best_mag = mag;
        pick = v;
      }
    }
    return pick;
  }

  void observe(double bound) {
    if (options_.node_observer) {
      NodeInfo info;
      info.fixed = value_;
      info.bound = bound;
      options_.node_observer(info);
    }
  }

  void recurse() {
    ++nodes_;
    bool any_free = false;
    for (size_t v = 0; v < cp_.n && !any_free; ++v) any_free = value_[v] < 0;
    if (!any_free) {
      if (exact_feasible(value_)) offer_incumbent(value_, exact_objective());
      return;
    }

    size_t branch_var;
    if (options_.bound_mode == BoundMode::LpRelaxation) {
      bool node_done = false;
      if (!lp_node(&branch_var, &node_done)) return;
      if (node_done) return;
    } else {
      double bound = fixed_obj_ + free_pos_obj_ + kBoundSafety;
      observe(bound);
      if (have_incumbent_ && bound <= incumbent_ + kFeasTol) return;
      branch_var = sum_mode_branch_var();
    }

    for (int val : {1, 0}) {
      fix(branch_var, val);
      if (rows_of_var_possible(branch_var)) recurse();
      unfix(branch_var, val);
    }
  }

  const CompiledProgram& cp_;
  const SolveOptions& options_;
  std::vector<int> value_;
  std::vector<std::vector<std::pair<size_t, double>>> var_rows_;
  std::vector<RowState> rows_;
  double fixed_obj_ = 0.0;
  double free_pos_obj_ = 0.0;
  bool have_incumbent_ = false;
  double incumbent_ = kNegInf;
  std::vector<int> best_;
  long nodes_ = 0;
};

Assignment to_assignment(const BinaryProgram& program,
                         const std::vector<int>& values) {
  Assignment out;
  for (size_t v = 0; v < program.variables.size(); ++v)
    out[program.variables[v].id] = values[v];
  return out;
}

}  // namespace

Solution solve(const BinaryProgram& program, const SolveOptions& options) {
  CompiledProgram cp = compile(program);
  BranchAndBound bb(cp, options);
  Solution sol = bb.run();
  if (sol.status == SolveStatus::Optimal)
    sol.assignment = to_assignment(program, bb.best());
  return sol;
}

Solution brute_force(const BinaryProgram& program) {
  CompiledProgram cp = compile(program);
  std::vector<size_t> free_vars;
  for (size_t v = 0; v < cp.n; ++v)
    if (cp.fixed[v] < 0) free_vars.push_back(v);
  if (free_vars.size() > 25) throw std::invalid_argument("oracle limit");

  auto start = std::chrono::steady_clock::now();
  Solution sol;
  std::vector<int> value(cp.fixed);
  for (size_t v = 0; v < cp.n; ++v)
    if (value[v] < 0) value[v] = 0;

  bool have_best = false;
  double best_obj = kNegInf;
  std::vector<int> best;
  const uint64_t total = uint64_t(1) << free_vars.size();
  for (uint64_t mask = 0; mask < total; ++mask) {
    for (size_t k = 0; k < free_vars.size(); ++k)
      value[free_vars[k]] = int((mask >> k) & 1u);
    ++sol.stats.nodes_explored;
    bool ok = true;
    for (const auto& row : cp.rows) {
      if (!row_satisfied(row, value)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    double z = 0.0;
    for (size_t v = 0; v < cp.n; ++v) z += cp.coeff[v] * value[v];
    if (!have_best || z > best_obj) {
      have_best = true;
      best_obj = z;
      best = value;
    }
  }
  sol.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (!have_best) return sol;
  sol.status = SolveStatus::Optimal;
  sol.objective = best_obj;
  sol.assignment = to_assignment(program, best);
  return sol;
}

}  // namespace tupleqa::ilp
