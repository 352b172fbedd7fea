#include "regsm/guarantees.hpp"

#include <cmath>
#include <sstream>

#include "regsm/errors.hpp"
#include "regsm/lp.hpp"
#include "regsm/parallel.hpp"

namespace regsm {

namespace {

std::string pair_tag(const char* name, double ts, double tf) {
  std::ostringstream os;
  os << name << "(" << ts << "," << tf << ")";
  return os.str();
}

}  // namespace

GuaranteePoint aided_coeffs(double ts, double tf) {
  if (ts < 0 || ts > tf) throw ContractError("aided_coeffs requires 0 <= ts <= tf");
  double es = std::exp(ts - tf), ef = std::exp(-tf);
  Eigen::VectorXd x(4);
  x[0] = es * (1 + tf - ts) - ef;
  x[1] = ef - es;
  x[2] = ef * (1 + tf) - es * (1 + tf - ts);
  x[3] = tf;
  return {x, pair_tag("aided", ts, tf)};
}

GuaranteePoint distorted_aided_coeffs(double ts, double tf, bool with_negative_part) {
  if (ts < 0 || ts > tf || tf > 1)
    throw ContractError("distorted_aided_coeffs requires 0 <= ts <= tf <= 1");
  GuaranteePoint base = aided_coeffs(ts, tf);
  double es = std::exp(ts - tf), ef = std::exp(-tf);
  Eigen::VectorXd x(with_negative_part ? 7 : 5);
  x.head(3) = base.coords.head(3);
  x[3] = 1 - ef;
  x[4] = 1 - es;
  if (with_negative_part) {
    x[5] = tf;
    x[6] = tf - ts;
  }
  return {x, pair_tag("distorted-aided", ts, tf)};
}

std::vector<GuaranteePoint> dg_hull_points(const std::vector<double>& r_grid) {
  std::vector<GuaranteePoint> pts;
  pts.reserve(r_grid.size());
  for (double r : r_grid) {
    if (r < 1) throw ContractError("dg hull points require r >= 1");
    double denom = (r + 1 / r) * (r + 1 / r);
    Eigen::VectorXd x(3);
    x << 2 / denom, 2 / denom, r * r / denom;
    std::ostringstream os;
    os << "rdg(r=" << r << ")";
    pts.push_back({x, os.str()});
  }
  return pts;
}

std::optional<GuaranteeSolution> solve_guarantee_lp(
    const std::vector<GuaranteePoint>& hull, const std::vector<HullConstraint>& constraints) {
  if (hull.empty()) throw ContractError("guarantee LP needs a non-empty hull");
  const int dim = static_cast<int>(hull[0].coords.size());
  const int m = static_cast<int>(hull.size());
  for (const auto& p : hull)
    if (p.coords.size() != dim) throw StructuralError("hull points must share one basis");

  LinearProgram lp;
  lp.objective = Eigen::VectorXd(m);
  for (int i = 0; i < m; ++i) lp.objective[i] = hull[i].coords[0];
  lp.bounds.assign(m, {0.0, kInf});
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(m);
  lp.add_row(ones, LinearProgram::Rel::Eq, 1.0);
  for (const auto& c : constraints) {
    if (c.a.size() != dim) throw StructuralError("constraint dimension mismatch");
    Eigen::VectorXd row(m);
    for (int i = 0; i < m; ++i) row[i] = c.a.dot(hull[i].coords);
    lp.add_row(row, c.ge ? LinearProgram::Rel::Ge : LinearProgram::Rel::Le, c.b);
  }
  LpResult res = solve(lp);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  GuaranteeSolution sol;
  sol.alpha = res.value;
  for (int i = 0; i < m; ++i)
    if (res.x[i] > 1e-9) sol.witness.push_back({hull[i].tag, res.x[i]});
  return sol;
}

std::vector<std::pair<double, double>> time_pair_grid(int denom, double t_max) {
  std::vector<std::pair<double, double>> pairs;
  int top = static_cast<int>(std::round(t_max * denom));
  for (int y = 0; y <= top; ++y)
    for (int x = 0; x <= y; ++x)
      pairs.push_back({static_cast<double>(x) / denom, static_cast<double>(y) / denom});
  return pairs;
}

namespace {

HullConstraint coord_ge(int dim, int j, double b) {
  Eigen::VectorXd a = Eigen::VectorXd::Zero(dim);
  a[j] = 1;
  return {a, true, b};
}

HullConstraint coord_le(int dim, int j, double b) {
  Eigen::VectorXd a = Eigen::VectorXd::Zero(dim);
  a[j] = 1;
  return {a, false, b};
}

GuaranteePoint anchor(std::initializer_list<double> vals, const char* tag) {
  Eigen::VectorXd x(static_cast<int>(vals.size()));
  int i = 0;
  for (double v : vals) x[i++] = v;
  return {x, tag};
}

GuaranteeSolution require(std::optional<GuaranteeSolution> sol) {
  if (!sol) throw InvariantError("guarantee LP infeasible for the requested beta");
  return *sol;
}

}  // namespace

GuaranteeSolution alpha_nonpos(double beta, const std::vector<std::pair<double, double>>& pairs) {
  std::vector<GuaranteePoint> hull = {
      anchor({0, 0, 0, 0}, "empty"),
      anchor({0, 0.5, 0.5, 1}, "local-balanced"),
      anchor({0, 1, 0, 1}, "local-meet"),
  };
  for (auto [ts, tf] : pairs) hull.push_back(aided_coeffs(ts, tf));
  std::vector<HullConstraint> cons = {coord_ge(4, 1, 0), coord_ge(4, 2, 0), coord_le(4, 3, beta)};
  return require(solve_guarantee_lp(hull, cons));
}

GuaranteeSolution alpha_nonneg_csm(double beta,
                                   const std::vector<std::pair<double, double>>& pairs) {
  std::vector<GuaranteePoint> hull = {
      anchor({0, 0, 0, 1, 1}, "trivial"),
      anchor({0, 0.5, 0.5, 0.5, 1}, "local-balanced"),
      anchor({0, 1, 0, 0, 1}, "local-meet"),
  };
  for (auto [ts, tf] : pairs) hull.push_back(distorted_aided_coeffs(ts, tf));
  std::vector<HullConstraint> cons = {coord_ge(5, 1, 0), coord_ge(5, 2, 0), coord_ge(5, 3, beta),
                                      coord_ge(5, 4, beta)};
  return require(solve_guarantee_lp(hull, cons));
}

GuaranteeSolution alpha_csm_guessed(double beta,
                                    const std::vector<std::pair<double, double>>& pairs) {
  std::vector<GuaranteePoint> hull = {
      anchor({0, 0, 0, 1, 1, 0, 0}, "trivial"),
      anchor({0, 0.5, 0.5, 0.5, 1, 1, 1}, "local-balanced"),
      anchor({0, 1, 0, 0, 1, 0, 1}, "local-meet"),
  };
  for (auto [ts, tf] : pairs) hull.push_back(distorted_aided_coeffs(ts, tf, true));
  std::vector<HullConstraint> cons = {coord_ge(7, 1, 0),    coord_ge(7, 2, 0),
                                      coord_ge(7, 3, beta), coord_ge(7, 4, beta),
                                      coord_le(7, 5, beta), coord_le(7, 6, beta)};
  return require(solve_guarantee_lp(hull, cons));
}

GuaranteeSolution alpha_nonneg_comb(double beta, const std::vector<double>& r_grid,
                                    const std::vector<std::pair<double, double>>& nonpos_curve) {
  std::vector<GuaranteePoint> hull = dg_hull_points(r_grid);
  for (auto [bp, ap] : nonpos_curve) {
    Eigen::VectorXd x(3);
    x << ap, bp, 1 - bp;
    std::ostringstream os;
    os << "nonpos(beta=" << bp << ")";
    hull.push_back({x, os.str()});
  }
  Eigen::VectorXd sum23 = Eigen::VectorXd::Zero(3);
  sum23[1] = 1;
  sum23[2] = 1;
  std::vector<HullConstraint> cons = {{sum23, true, beta}, coord_ge(3, 2, 0)};
  return require(solve_guarantee_lp(hull, cons));
}

std::vector<TableRow> table_nonpos(const std::vector<double>& betas, int threads) {
  auto pairs = time_pair_grid(20, 2.0);
  std::vector<TableRow> rows(betas.size());
  parallel_for(static_cast<int>(betas.size()), threads > 0 ? threads : default_threads(),
               [&](int i) {
                 GuaranteeSolution sol = alpha_nonpos(betas[i], pairs);
                 std::ostringstream os;
                 for (const auto& [tag, w] : sol.witness) os << tag << ":" << w << " ";
                 rows[i] = {betas[i], sol.alpha, os.str()};
               });
  return rows;
}

std::vector<TableRow> table_nonneg_comb(const std::vector<double>& betas, int threads) {
  // The beta' in [1, 1.3] slice of the non-positive curve feeds the hull.
  std::vector<double> inner_betas;
  for (int x = 0; x <= 30; ++x) inner_betas.push_back(1.0 + 0.01 * x);
  auto pairs = time_pair_grid(20, 2.0);
  std::vector<std::pair<double, double>> curve(inner_betas.size());
  parallel_for(static_cast<int>(inner_betas.size()), threads > 0 ? threads : default_threads(),
               [&](int i) {
                 curve[i] = {inner_betas[i], alpha_nonpos(inner_betas[i], pairs).alpha};
               });
  std::vector<double> r_grid;
  for (int j = 0; j <= 90; ++j) r_grid.push_back(1.0 + 0.1 * j);
  std::vector<TableRow> rows(betas.size());
  for (size_t i = 0; i < betas.size(); ++i) {
    GuaranteeSolution sol = alpha_nonneg_comb(betas[i], r_grid, curve);
    std::ostringstream os;
    for (const auto& [tag, w] : sol.witness) os << tag << ":" << w << " ";
    rows[i] = {betas[i], sol.alpha, os.str()};
  }
  return rows;
}

}  // namespace regsm
