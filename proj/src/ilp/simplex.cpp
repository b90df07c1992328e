#include "tupleqa/ilp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tupleqa::ilp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kCostTol = 1e-9;
constexpr double kPivotTol = 1e-9;
constexpr double kFeasTol = 1e-7;

enum class VarState { Basic, AtLower, AtUpper };
enum class LoopResult { Optimal, Unbounded, IterLimit };

struct Tableau {
  size_t m = 0;           // rows
  size_t ncols = 0;       // structural + slack + artificial
  std::vector<std::vector<double>> a;  // m x ncols, current B^-1 A
  std::vector<double> xb;              // values of basic variables
  std::vector<size_t> basis;           // column basic in each row
  std::vector<VarState> state;
  std::vector<double> upper;           // per-column upper bound (lower is 0)
  std::vector<double> zrow;            // reduced costs z_j - c_j
  int iterations = 0;

  double nonbasic_value(size_t j) const {
    return state[j] == VarState::AtUpper ? upper[j] : 0.0;
  }
};

void build_zrow(Tableau& t, const std::vector<double>& cost) {
  t.zrow.assign(t.ncols, 0.0);
  for (size_t j = 0; j < t.ncols; ++j) {
    double z = 0.0;
    for (size_t i = 0; i < t.m; ++i) {
      double cb = cost[t.basis[i]];
      if (cb != 0.0) z += cb * t.a[i][j];
    }
    t.zrow[j] = z - cost[j];
  }
}

// Simplex loop on the current tableau; `enterable[j]` masks columns allowed
// to enter the basis. Dantzig pricing with lowest-index ties, falling back
// to Bland's rule after half the iteration budget.
LoopResult optimize(Tableau& t, const std::vector<char>& enterable,
                    int max_iters) {
  int bland_after = max_iters / 2;
  for (int iter = 0; iter < max_iters; ++iter) {
    ++t.iterations;
    bool bland = iter >= bland_after;

    // entering column
    size_t q = t.ncols;
    int dir = 0;
    double best = kCostTol;
    for (size_t j = 0; j < t.ncols; ++j) {
      if (!enterable[j] || t.state[j] == VarState::Basic) continue;
      if (t.upper[j] <= kPivotTol) continue;  // pinned at zero
      double viol = 0.0;
      int d = 0;
      if (t.state[j] == VarState::AtLower && t.zrow[j] < -kCostTol) {
        viol = -t.zrow[j];
        d = +1;
      } else if (t.state[j] == VarState::AtUpper && t.zrow[j] > kCostTol) {
        viol = t.zrow[j];
        d = -1;
      }
      if (d == 0) continue;
      if (bland) { q = j; dir = d; break; }
      if (viol > best) { best = viol; q = j; dir = d; }
    }
    if (dir == 0) return LoopResult::Optimal;

    // Ratio test. tstar starts at the entering variable's own range; ties
    // between rows break toward the lowest basic variable index.
    double tmax = t.upper[q];
    double tstar = tmax;
    size_t leave_row = t.m;  // m means bound flip
    bool leave_at_upper = false;
    for (size_t i = 0; i < t.m; ++i) {
      double alpha = t.a[i][q];
      if (std::abs(alpha) < kPivotTol) continue;
      double delta = dir * alpha;  // basic value decreases by delta * step
      double limit;
      bool hits_upper;
      if (delta > 0) {
        limit = t.xb[i] / delta;
        hits_upper = false;
      } else {
        double ub = t.upper[t.basis[i]];
        if (ub == kInf) continue;
        limit = (ub - t.xb[i]) / (-delta);
        hits_upper = true;
      }
      limit = std::max(limit, 0.0);
      if (leave_row == t.m) {
        if (limit <= tstar + kPivotTol) {
          tstar = std::min(limit, tstar);
          leave_row = i;
          leave_at_upper = hits_upper;
        }
      } else if (limit < tstar - kPivotTol) {
        tstar = limit;
        leave_row = i;
        leave_at_upper = hits_upper;
      } else if (limit <= tstar + kPivotTol &&
                 t.basis[i] < t.basis[leave_row]) {
        tstar = std::min(tstar, limit);
        leave_row = i;
        leave_at_upper = hits_upper;
      }
    }

    if (leave_row == t.m) {
      if (tmax == kInf) return LoopResult::Unbounded;
      // bound flip, no basis change
      for (size_t i = 0; i < t.m; ++i) t.xb[i] -= dir * tstar * t.a[i][q];
      t.state[q] =
          t.state[q] == VarState::AtLower ? VarState::AtUpper : VarState::AtLower;
      continue;
    }

    // pivot on (leave_row, q)
    for (size_t i = 0; i < t.m; ++i)
      if (i != leave_row) t.xb[i] -= dir * tstar * t.a[i][q];
    double entering_value = t.nonbasic_value(q) + dir * tstar;

    size_t leaving = t.basis[leave_row];
    t.state[leaving] = leave_at_upper ? VarState::AtUpper : VarState::AtLower;
    t.state[q] = VarState::Basic;
    t.basis[leave_row] = q;
    t.xb[leave_row] = entering_value;

    double piv = t.a[leave_row][q];
    std::vector<double>& prow = t.a[leave_row];
    double inv = 1.0 / piv;
    for (size_t j = 0; j < t.ncols; ++j) prow[j] *= inv;
    for (size_t i = 0; i < t.m; ++i) {
      if (i == leave_row) continue;
      double f = t.a[i][q];
      if (f == 0.0) continue;
      std::vector<double>& row = t.a[i];
      for (size_t j = 0; j < t.ncols; ++j) row[j] -= f * prow[j];
      row[q] = 0.0;
    }
    double fz = t.zrow[q];
    if (fz != 0.0) {
      for (size_t j = 0; j < t.ncols; ++j) t.zrow[j] -= fz * prow[j];
      t.zrow[q] = 0.0;
    }
  }
  return LoopResult::IterLimit;
}

}  // namespace

LpResult solve_lp(const LpProblem& p) {
  const size_t n = p.objective.size();
  const size_t m = p.rows.size();

  Tableau t;
  t.m = m;

  // Equality form: one slack per inequality row, artificials where the
  // initial slack basis is unavailable.
  std::vector<double> rhs(m);
  std::vector<int> slack_col(m, -1);
  size_t ncols = n;
  for (size_t i = 0; i < m; ++i) {
    if (p.rows[i].relation != Relation::Equal) slack_col[i] = int(ncols++);
  }
  size_t first_art = ncols;
  std::vector<int> art_col(m, -1);

  // Flip row signs so every rhs is nonnegative, then use the slack as the
  // initial basic column where its coefficient came out +1.
  std::vector<double> sign(m, 1.0);
  std::vector<char> needs_art(m, 0);
  for (size_t i = 0; i < m; ++i) {
    double b = p.rows[i].rhs;
    double slack_coef = 0.0;
    if (p.rows[i].relation == Relation::LessEq) slack_coef = 1.0;
    if (p.rows[i].relation == Relation::GreaterEq) slack_coef = -1.0;
    if (b < 0) {
      sign[i] = -1.0;
      b = -b;
      slack_coef = -slack_coef;
    }
    rhs[i] = b;
    if (slack_coef != 1.0) {
      needs_art[i] = 1;
      art_col[i] = int(ncols++);
    }
  }
  t.ncols = ncols;

  t.a.assign(m, std::vector<double>(ncols, 0.0));
  for (size_t i = 0; i < m; ++i) {
    for (const auto& [j, coef] : p.rows[i].terms) t.a[i][j] += sign[i] * coef;
    if (slack_col[i] >= 0) {
      double sc = p.rows[i].relation == Relation::LessEq ? 1.0 : -1.0;
      t.a[i][size_t(slack_col[i])] = sign[i] * sc;
    }
    if (art_col[i] >= 0) t.a[i][size_t(art_col[i])] = 1.0;
  }

  t.upper.assign(ncols, kInf);
  for (size_t j = 0; j < n; ++j) t.upper[j] = p.upper[j];

  t.state.assign(ncols, VarState::AtLower);
  t.basis.assign(m, 0);
  t.xb.assign(m, 0.0);
  for (size_t i = 0; i < m; ++i) {
    size_t bc = needs_art[i] ? size_t(art_col[i]) : size_t(slack_col[i]);
    t.basis[i] = bc;
    t.state[bc] = VarState::Basic;
    t.xb[i] = rhs[i];
  }

  const int max_iters = 2000 + 200 * int(m + n);
  LpResult res;
  res.status = LpStatus::IterationLimit;

  // Phase 1: drive artificials to zero.
  bool have_art = false;
  for (size_t i = 0; i < m; ++i) have_art |= bool(needs_art[i]);
  if (have_art) {
    std::vector<double> cost1(ncols, 0.0);
    for (size_t i = 0; i < m; ++i)
      if (art_col[i] >= 0) cost1[size_t(art_col[i])] = -1.0;
    build_zrow(t, cost1);
    std::vector<char> enterable(ncols, 1);
    LoopResult lr = optimize(t, enterable, max_iters);
    res.iterations = t.iterations;
    if (lr != LoopResult::Optimal) return res;  // phase 1 is always bounded
    double art_sum = 0.0;
    for (size_t i = 0; i < m; ++i)
      if (t.basis[i] >= first_art) art_sum += t.xb[i];
    if (art_sum > kFeasTol) {
      res.status = LpStatus::Infeasible;
      return res;
    }
    // pin artificials at zero for phase 2
    for (size_t j = first_art; j < ncols; ++j) {
      t.upper[j] = 0.0;
      if (t.state[j] == VarState::AtUpper) t.state[j] = VarState::AtLower;
    }
  }

  // Phase 2: the real objective.
  std::vector<double> cost(ncols, 0.0);
  for (size_t j = 0; j < n; ++j) cost[j] = p.objective[j];
  build_zrow(t, cost);
  std::vector<char> enterable(ncols, 1);
  for (size_t j = first_art; j < ncols; ++j) enterable[j] = 0;
  LoopResult lr = optimize(t, enterable, max_iters);
  res.iterations = t.iterations;
  if (lr != LoopResult::Optimal) return res;

  res.status = LpStatus::Optimal;
  res.x.assign(n, 0.0);
  for (size_t j = 0; j < n; ++j)
    if (t.state[j] == VarState::AtUpper) res.x[j] = t.upper[j];
  for (size_t i = 0; i < m; ++i)
    if (t.basis[i] < n) res.x[t.basis[i]] = t.xb[i];
  double z = 0.0;
  for (size_t j = 0; j < n; ++j) z += p.objective[j] * res.x[j];
  res.objective = z;
  return res;
}

}  // namespace tupleqa::ilp
