#ifndef REGSM_LP_HPP
#define REGSM_LP_HPP

#include <Eigen/Dense>
#include <limits>
#include <vector>

namespace regsm {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Dense LP in natural form: optimize c'x subject to rows a'x {<=,>=,==} b
/// and per-variable bounds.
struct LinearProgram {
  enum class Rel { Le, Ge, Eq };
  enum class Sense { Max, Min };

  struct Row {
    Eigen::VectorXd a;
    Rel rel = Rel::Le;
    double b = 0;
  };

  Eigen::VectorXd objective;
  std::vector<Row> rows;
  std::vector<std::pair<double, double>> bounds;  // [lo, hi], +-inf allowed
  Sense sense = Sense::Max;

  int num_vars() const { return static_cast<int>(objective.size()); }
  void add_row(Eigen::VectorXd a, Rel rel, double b) { rows.push_back({std::move(a), rel, b}); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Result of a solve. `x` is a basic feasible solution (a vertex of the
/// feasible polyhedron) when status is Optimal.
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Eigen::VectorXd x;
  double value = 0;
};

/// Two-phase dense tableau simplex with Bland's rule.
LpResult solve(const LinearProgram& lp);

}  // namespace regsm

#endif
