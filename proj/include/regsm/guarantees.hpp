#ifndef REGSM_GUARANTEES_HPP
#define REGSM_GUARANTEES_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace regsm {

/// One algorithm's guarantee as a coefficient vector over a declared basis
/// of bounded quantities; the guarantee LPs optimize over their convex hull.
struct GuaranteePoint {
  Eigen::VectorXd coords;
  std::string tag;
};

/// Coefficients of the aided run for time pair (t_s, t_f) in the basis
/// [f(OPT), F(z ^ 1_OPT), F(z v 1_OPT), L(OPT)]:
///   x1 = e^{ts-tf}(1+tf-ts) - e^{-tf}
///   x2 = e^{-tf} - e^{ts-tf}
///   x3 = e^{-tf}(1+tf) - e^{ts-tf}(1+tf-ts)
///   x4 = tf
GuaranteePoint aided_coeffs(double ts, double tf);

/// Distorted variant. 5-dim basis appends the split linear coefficients
/// (1-e^{-tf}, 1-e^{ts-tf}) for L_+(1_OPT \ z), L_+(1_OPT ^ z); the 7-dim
/// form further appends (tf, tf-ts) for the matching L_- terms.
GuaranteePoint distorted_aided_coeffs(double ts, double tf, bool with_negative_part = false);

/// Randomized-double-greedy points in the [f(OPT), l(OPT), l(N)] basis:
/// (2, 2, r^2) / (r + 1/r)^2.
std::vector<GuaranteePoint> dg_hull_points(const std::vector<double>& r_grid);

struct HullConstraint {
  Eigen::VectorXd a;
  bool ge = true;  // a'x >= b (false: <=)
  double b = 0;
};

struct GuaranteeSolution {
  double alpha = 0;
  std::vector<std::pair<std::string, double>> witness;  // tag -> weight
};

/// max x1 over convex combinations of the hull points subject to the given
/// coordinate constraints; nullopt when beta is outside the achievable range.
std::optional<GuaranteeSolution> solve_guarantee_lp(const std::vector<GuaranteePoint>& hull,
                                                    const std::vector<HullConstraint>& constraints);

/// (t_s, t_f) pairs with ts <= tf <= t_max on a 1/`denom` grid.
std::vector<std::pair<double, double>> time_pair_grid(int denom, double t_max);

// --- the four guarantee LPs ------------------------------------------------

/// Non-positive l: anchors (0,0,0,0), (0,.5,.5,1), (0,1,0,1) plus aided
/// points over the pair grid; constraints x2,x3 >= 0, x4 <= beta.
GuaranteeSolution alpha_nonpos(double beta, const std::vector<std::pair<double, double>>& pairs);

/// Non-negative l under a matroid: the 5-dim LP with x4,x5 >= beta.
GuaranteeSolution alpha_nonneg_csm(double beta,
                                   const std::vector<std::pair<double, double>>& pairs);

/// Unconstrained l under a matroid: the 7-dim LP with x6,x7 <= beta.
GuaranteeSolution alpha_csm_guessed(double beta,
                                    const std::vector<std::pair<double, double>>& pairs);

/// Non-negative l, unconstrained problem: mixes double greedy with the
/// non-positive-l curve over beta' in [1, 1.3] in the 3-dim basis.
GuaranteeSolution alpha_nonneg_comb(double beta, const std::vector<double>& r_grid,
                                    const std::vector<std::pair<double, double>>& nonpos_curve);

struct TableRow {
  double beta = 0;
  double alpha = 0;
  std::string witness;
};

std::vector<TableRow> table_nonpos(const std::vector<double>& betas, int threads = 0);
std::vector<TableRow> table_nonneg_comb(const std::vector<double>& betas, int threads = 0);

}  // namespace regsm

#endif
