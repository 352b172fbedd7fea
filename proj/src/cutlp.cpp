#include "regsm/cutlp.hpp"

#include <algorithm>
#include <cmath>

#include "regsm/lp.hpp"

namespace regsm {

double fhat_undirected(const SubmodularFn& f, const Vec& x) {
  double total = 0;
  for (const auto& e : f.as_undirected_cut().edges)
    total += e.w * std::min(x[e.a] + x[e.b], 2 - x[e.a] - x[e.b]);
  return total;
}

double fhat_directed(const SubmodularFn& f, const Vec& x) {
  double total = 0;
  for (const auto& e : f.as_directed_cut().edges) total += e.w * std::min(x[e.tail], 1 - x[e.head]);
  return total;
}

CutLpResult undirected_cut_lp(const SubmodularFn& f, const LinearFn& ell, const Polytope& p) {
  if (!f.is_undirected_cut()) throw ContractError("undirected_cut_lp requires a cut function");
  if (!p.pure()) throw ContractError("undirected_cut_lp expects the bare matroid polytope");
  const auto& edges = f.as_undirected_cut().edges;
  const int n = f.n();
  const int m = static_cast<int>(edges.size());
  const Matroid::Explicit* ex =
      p.matroid() && p.matroid()->as_explicit() ? p.matroid()->as_explicit() : nullptr;
  const int nsets = ex ? static_cast<int>(ex->sets.size()) : 0;
  const int nvars = n + m + nsets;

  LinearProgram lp;
  lp.objective = Eigen::VectorXd::Zero(nvars);
  for (int u = 0; u < n; ++u) lp.objective[u] = ell(u);
  for (int j = 0; j < m; ++j) lp.objective[n + j] = 0.5 * edges[j].w;
  lp.bounds.assign(nvars, {0.0, 1.0});
  for (int j = 0; j < m; ++j) lp.bounds[n + j] = {0.0, 2.0};

  auto fresh = [&] { return Eigen::VectorXd(Eigen::VectorXd::Zero(nvars)); };
  for (int j = 0; j < m; ++j) {
    Eigen::VectorXd a = fresh();
    a[n + j] = 1;
    a[edges[j].a] -= 1;
    a[edges[j].b] -= 1;
    lp.add_row(a, LinearProgram::Rel::Le, 0);  // c <= x_a + x_b
    Eigen::VectorXd b = fresh();
    b[n + j] = 1;
    b[edges[j].a] += 1;
    b[edges[j].b] += 1;
    lp.add_row(b, LinearProgram::Rel::Le, 2);  // c <= 2 - x_a - x_b
  }
  if (p.matroid()) {
    if (const auto* un = p.matroid()->as_uniform()) {
      Eigen::VectorXd a = fresh();
      a.head(n).setOnes();
      lp.add_row(a, LinearProgram::Rel::Le, un->k);
    } else if (const auto* pa = p.matroid()->as_partition()) {
      for (size_t i = 0; i < pa->blocks.size(); ++i) {
        Eigen::VectorXd a = fresh();
        for (int u = 0; u < n; ++u)
          if (contains(pa->blocks[i], u)) a[u] = 1;
        lp.add_row(a, LinearProgram::Rel::Le, pa->caps[i]);
      }
    } else {
      for (int u = 0; u < n; ++u) {
        Eigen::VectorXd a = fresh();
        a[u] = 1;
        for (int s = 0; s < nsets; ++s)
          if (contains(ex->sets[s], u)) a[n + m + s] = -1;
        lp.add_row(a, LinearProgram::Rel::Eq, 0);
      }
      Eigen::VectorXd a = fresh();
      a.tail(nsets).setOnes();
      lp.add_row(a, LinearProgram::Rel::Eq, 1);
    }
  }

  LpResult res = solve(lp);
  if (res.status != LpStatus::Optimal) throw InvariantError("cut LP must be feasible and bounded");
  CutLpResult out;
  out.x = Vec(n);
  for (int u = 0; u < n; ++u) out.x[u] = std::clamp(res.x[u], 0.0, 1.0);
  out.lp_value = 0.5 * fhat_undirected(f, out.x) + ell.dot(out.x);
  out.set = pipage_round(p, f, ell, out.x, /*seed=*/0);
  out.expected = f.eval(out.set) + ell.eval(out.set);
  return out;
}

CutLpResult directed_cut_lp(const SubmodularFn& f, const LinearFn& ell) {
  if (!f.is_directed_cut()) throw ContractError("directed_cut_lp requires a dicut function");
  const auto& edges = f.as_directed_cut().edges;
  const int n = f.n();
  const int m = static_cast<int>(edges.size());
  LinearProgram lp;
  lp.objective = Eigen::VectorXd::Zero(n + m);
  for (int u = 0; u < n; ++u) lp.objective[u] = ell(u);
  for (int j = 0; j < m; ++j) lp.objective[n + j] = 0.5 * edges[j].w;
  lp.bounds.assign(n + m, {0.0, 1.0});
  for (int j = 0; j < m; ++j) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n + m);
    a[n + j] = 1;
    a[edges[j].tail] -= 1;
    lp.add_row(a, LinearProgram::Rel::Le, 0);  // c <= x_tail
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n + m);
    b[n + j] = 1;
    b[edges[j].head] += 1;
    lp.add_row(b, LinearProgram::Rel::Le, 1);  // c <= 1 - x_head
  }
  LpResult res = solve(lp);
  if (res.status != LpStatus::Optimal) throw InvariantError("dicut LP must be feasible and bounded");
  CutLpResult out;
  out.x = Vec(n);
  for (int u = 0; u < n; ++u) {
    double v = res.x[u];
    double snapped = std::round(v * 2) / 2;
    if (std::abs(v - snapped) > 1e-7)
      throw InvariantError("dicut LP vertex is not half-integral");
    out.x[u] = snapped;
  }
  out.lp_value = 0.5 * fhat_directed(f, out.x) + ell.dot(out.x);
  out.set = sample_round(out.x, /*seed=*/0);
  out.expected = multilinear_exact(f, out.x) + ell.dot(out.x);
  return out;
}

}  // namespace regsm
