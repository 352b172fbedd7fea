#include "regsm/lp.hpp"

#include <cmath>

#include "regsm/errors.hpp"

namespace regsm {

namespace {

constexpr double kPivTol = 1e-9;

// Variable transform into the non-negative standard form.
struct VarMap {
  enum class Kind { Shift, Flip, Split } kind = Kind::Shift;
  double offset = 0;  // Shift: x = offset + x'; Flip: x = offset - x'
  int col = 0;        // first standard-form column
  int col_neg = -1;   // Split: x = x'[col] - x'[col_neg]
};

struct Tableau {
  Eigen::MatrixXd a;   // m x ncols
  Eigen::VectorXd b;   // m
  std::vector<int> basis;
};

}  // namespace

LpResult solve(const LinearProgram& lp) {
  const int n = lp.num_vars();
  if (static_cast<int>(lp.bounds.size()) != n)
    throw StructuralError("lp bounds size must match objective size");
  for (const auto& r : lp.rows)
    if (r.a.size() != n) throw StructuralError("lp row dimension mismatch");

  const bool maximize = lp.sense == LinearProgram::Sense::Max;
  Eigen::VectorXd obj = maximize ? lp.objective : Eigen::VectorXd(-lp.objective);

  // Map variables to non-negative standard-form columns.
  std::vector<VarMap> vmap(n);
  int ncols = 0;
  std::vector<LinearProgram::Row> extra;  // upper-bound rows from [lo, hi]
  for (int j = 0; j < n; ++j) {
    auto [lo, hi] = lp.bounds[j];
    if (lo > hi) return {LpStatus::Infeasible, {}, 0};
    VarMap& m = vmap[j];
    if (std::isfinite(lo)) {
      m.kind = VarMap::Kind::Shift;
      m.offset = lo;
      m.col = ncols++;
      if (std::isfinite(hi)) {
        Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
        a[j] = 1;
        extra.push_back({a, LinearProgram::Rel::Le, hi});
      }
    } else if (std::isfinite(hi)) {
      m.kind = VarMap::Kind::Flip;
      m.offset = hi;
      m.col = ncols++;
    } else {
      m.kind = VarMap::Kind::Split;
      m.col = ncols++;
      m.col_neg = ncols++;
    }
  }

  std::vector<LinearProgram::Row> all_rows = lp.rows;
  all_rows.insert(all_rows.end(), extra.begin(), extra.end());
  const int m = static_cast<int>(all_rows.size());

  // Substituted rows in standard-form columns, one slack per inequality.
  int nslack = 0;
  for (const auto& r : all_rows)
    if (r.rel != LinearProgram::Rel::Eq) ++nslack;
  const int total0 = ncols + nslack;

  Tableau t;
  t.a = Eigen::MatrixXd::Zero(m, total0);
  t.b = Eigen::VectorXd::Zero(m);
  t.basis.assign(m, -1);

  int slack_at = ncols;
  std::vector<int> slack_col(m, -1);
  for (int i = 0; i < m; ++i) {
    const auto& r = all_rows[i];
    double rhs = r.b;
    for (int j = 0; j < n; ++j) {
      double coef = r.a[j];
      if (coef == 0) continue;
      const VarMap& vm = vmap[j];
      switch (vm.kind) {
        case VarMap::Kind::Shift:
          t.a(i, vm.col) += coef;
          rhs -= coef * vm.offset;
          break;
        case VarMap::Kind::Flip:
          t.a(i, vm.col) -= coef;
          rhs -= coef * vm.offset;
          break;
        case VarMap::Kind::Split:
          t.a(i, vm.col) += coef;
          t.a(i, vm.col_neg) -= coef;
          break;
      }
    }
    if (r.rel == LinearProgram::Rel::Le) {
      slack_col[i] = slack_at;
      t.a(i, slack_at++) = 1;
    } else if (r.rel == LinearProgram::Rel::Ge) {
      slack_col[i] = slack_at;
      t.a(i, slack_at++) = -1;
    }
    t.b[i] = rhs;
  }
  for (int i = 0; i < m; ++i) {
    if (t.b[i] < 0) {
      t.a.row(i) = -t.a.row(i);
      t.b[i] = -t.b[i];
    }
    if (slack_col[i] >= 0 && t.a(i, slack_col[i]) > 0.5) t.basis[i] = slack_col[i];
  }

  // Artificials for rows without a ready basis column.
  int nart = 0;
  for (int i = 0; i < m; ++i)
    if (t.basis[i] < 0) ++nart;
  const int total = total0 + nart;
  Eigen::MatrixXd a2 = Eigen::MatrixXd::Zero(m, total);
  a2.leftCols(total0) = t.a;
  int art_at = total0;
  for (int i = 0; i < m; ++i)
    if (t.basis[i] < 0) {
      a2(i, art_at) = 1;
      t.basis[i] = art_at++;
    }
  t.a = std::move(a2);

  // Standard-form objective.
  Eigen::VectorXd cost = Eigen::VectorXd::Zero(total);
  double cost_shift = 0;
  for (int j = 0; j < n; ++j) {
    const VarMap& vm = vmap[j];
    switch (vm.kind) {
      case VarMap::Kind::Shift:
        cost[vm.col] += obj[j];
        cost_shift += obj[j] * vm.offset;
        break;
      case VarMap::Kind::Flip:
        cost[vm.col] -= obj[j];
        cost_shift += obj[j] * vm.offset;
        break;
      case VarMap::Kind::Split:
        cost[vm.col] += obj[j];
        cost[vm.col_neg] -= obj[j];
        break;
    }
  }

  const long iter_cap = 20000 + 200L * (m + total);
  long iters = 0;

  // Maximizes c over the tableau; columns >= col_limit are barred.
  auto run_simplex = [&](const Eigen::VectorXd& c, int col_limit) -> bool {
    while (true) {
      if (++iters > iter_cap) throw InvariantError("simplex iteration limit exceeded");
      // Reduced costs via basis multipliers: y' = c_B' B^{-1} is implicit in
      // the tableau (rows are already B^{-1} A).
      Eigen::VectorXd red = c.head(col_limit);
      for (int i = 0; i < m; ++i) {
        double cb = c[t.basis[i]];
        if (cb != 0) red -= cb * t.a.row(i).head(col_limit).transpose();
      }
      int enter = -1;
      for (int j = 0; j < col_limit; ++j)
        if (red[j] > kPivTol) {
          enter = j;  // Bland: lowest index
          break;
        }
      if (enter < 0) return true;  // optimal
      int leave = -1;
      double best = 0;
      for (int i = 0; i < m; ++i) {
        double aij = t.a(i, enter);
        if (aij > kPivTol) {
          double ratio = t.b[i] / aij;
          if (leave < 0 || ratio < best - kPivTol ||
              (ratio < best + kPivTol && t.basis[i] < t.basis[leave]))
            leave = i, best = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded
      double piv = t.a(leave, enter);
      t.a.row(leave) /= piv;
      t.b[leave] /= piv;
      for (int i = 0; i < m; ++i) {
        if (i == leave) continue;
        double factor = t.a(i, enter);
        if (factor != 0) {
          t.a.row(i) -= factor * t.a.row(leave);
          t.b[i] -= factor * t.b[leave];
        }
      }
      t.basis[leave] = enter;
    }
  };

  if (nart > 0) {
    Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(total);
    for (int j = total0; j < total; ++j) phase1[j] = -1;
    run_simplex(phase1, total);
    double art_sum = 0;
    for (int i = 0; i < m; ++i)
      if (t.basis[i] >= total0) art_sum += t.b[i];
    if (art_sum > 1e-7) return {LpStatus::Infeasible, {}, 0};
    // Pivot remaining artificials out of the basis where possible.
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < total0) continue;
      int enter = -1;
      for (int j = 0; j < total0; ++j)
        if (std::abs(t.a(i, j)) > 1e-7) {
          enter = j;
          break;
        }
      if (enter < 0) continue;  // redundant row
      double piv = t.a(i, enter);
      t.a.row(i) /= piv;
      t.b[i] /= piv;
      for (int r = 0; r < m; ++r) {
        if (r == i) continue;
        double factor = t.a(r, enter);
        if (factor != 0) {
          t.a.row(r) -= factor * t.a.row(i);
          t.b[r] -= factor * t.b[i];
        }
      }
      t.basis[i] = enter;
    }
  }

  if (!run_simplex(cost, total0)) return {LpStatus::Unbounded, {}, 0};

  Eigen::VectorXd std_x = Eigen::VectorXd::Zero(total);
  for (int i = 0; i < m; ++i) std_x[t.basis[i]] = t.b[i];
  Eigen::VectorXd x(n);
  for (int j = 0; j < n; ++j) {
    const VarMap& vm = vmap[j];
    switch (vm.kind) {
      case VarMap::Kind::Shift:
        x[j] = vm.offset + std_x[vm.col];
        break;
      case VarMap::Kind::Flip:
        x[j] = vm.offset - std_x[vm.col];
        break;
      case VarMap::Kind::Split:
        x[j] = std_x[vm.col] - std_x[vm.col_neg];
        break;
    }
  }
  double value = lp.objective.dot(x);
  return {LpStatus::Optimal, std::move(x), value};
}

}  // namespace regsm
