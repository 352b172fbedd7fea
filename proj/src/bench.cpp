#include "regsm/bench.hpp"

#include <cmath>
#include <random>

namespace regsm {

BruteResult brute_force_opt(const SubmodularFn& f, const LinearFn& ell,
                            const std::optional<Matroid>& constraint, double alpha, double beta) {
  int n = f.n();
  if (n > 20) throw CapabilityError("brute force limited to n <= 20");
  BruteResult best{0, alpha * f.eval(0) + beta * ell.eval(0)};
  if (constraint && !constraint->is_independent(0))
    throw InvariantError("matroid does not admit the empty set");
  for (Mask s = 1; s < (1ULL << n); ++s) {
    if (constraint && !constraint->is_independent(s)) continue;
    double v = alpha * f.eval(s) + beta * ell.eval(s);
    if (v > best.value) best = {s, v};
  }
  return best;
}

namespace {

Vec const_vec(int n, double v) { return Vec::Constant(n, v); }

}  // namespace

Instance gharan_vondrak(int k, int t, double kappa) {
  if (k < 1 || t < 1 || kappa < 0 || kappa > 1)
    throw StructuralError("gharan_vondrak requires k,t >= 1 and kappa in [0,1]");
  const int n = 2 + 2 * k * t;
  const int a = 0, b = 1;
  if (t == 1) {
    Mask a_tails = 0, b_tails = 0;
    for (int i = 0; i < k; ++i) {
      a_tails |= 1ULL << (2 + i);
      b_tails |= 1ULL << (2 + k + i);
    }
    std::vector<DirectedHyperedge> edges = {
        {1ULL << a, 1ULL << b, 1 - kappa},
        {1ULL << b, 1ULL << a, 1 - kappa},
        {a_tails, 1ULL << a, kappa},
        {b_tails, 1ULL << b, kappa},
    };
    return Instance{SubmodularFn::hyper_directed_cut(n, std::move(edges)), LinearFn::zero(n),
                    std::nullopt};
  }
  if (n > 24) throw CapabilityError("gharan_vondrak with t > 1 requires 2 + 2kt <= 24");
  // f(S) evaluates the hyperedges on the per-group fraction of chosen copies.
  std::vector<double> vals(1ULL << n);
  for (Mask s = 0; s < (1ULL << n); ++s) {
    double cut_ab = (contains(s, a) != contains(s, b)) ? 1 - kappa : 0;
    double prod_a = 1, prod_b = 1;
    for (int i = 0; i < k; ++i) {
      int ca = 0, cb = 0;
      for (int j = 0; j < t; ++j) {
        if (contains(s, 2 + i * t + j)) ++ca;
        if (contains(s, 2 + k * t + i * t + j)) ++cb;
      }
      prod_a *= 1 - static_cast<double>(ca) / t;
      prod_b *= 1 - static_cast<double>(cb) / t;
    }
    double hyper = kappa * ((1 - prod_a) * (contains(s, a) ? 0 : 1) +
                            (1 - prod_b) * (contains(s, b) ? 0 : 1));
    vals[s] = cut_ab + hyper;
  }
  return Instance{SubmodularFn::table(n, std::move(vals)), LinearFn::zero(n), std::nullopt};
}

Instance dg_tight_det(double r, double eps) {
  if (r < 1 || eps <= 0) throw StructuralError("dg_tight_det requires r >= 1 and eps > 0");
  std::vector<DirectedEdge> edges = {{0, 1, r + eps / 2}, {1, 0, 1.0}};
  Vec ell(2);
  ell << 0, r;
  return Instance{SubmodularFn::directed_cut(2, std::move(edges)), LinearFn(ell), std::nullopt};
}

namespace {

Instance dg_star(int n, double r, bool hub_ell) {
  if (n < 2 || r < 1) throw StructuralError("star instances require n >= 2 and r >= 1");
  std::vector<DirectedEdge> edges;
  for (int i = 0; i + 1 < n; ++i) {
    edges.push_back({i, n - 1, r / (n - 1)});
    edges.push_back({n - 1, i, 1.0 / (n - 1)});
  }
  Vec ell = Vec::Zero(n);
  if (hub_ell)
    ell[n - 1] = r - 1;
  else
    ell.head(n - 1) = const_vec(n - 1, (1 - r) / (n - 1));
  return Instance{SubmodularFn::directed_cut(n, std::move(edges)), LinearFn(ell), std::nullopt};
}

}  // namespace

Instance dg_tight_rand(int n, double r) { return dg_star(n, r, true); }

Instance dg_rand_bad(int n, double r) { return dg_star(n, r, false); }

std::pair<Instance, Instance> online_bad(double alpha) {
  if (alpha <= 0) throw StructuralError("online_bad requires alpha > 0");
  std::vector<DirectedEdge> edges = {{0, 1, alpha / 2}, {1, 0, 1.0}};
  SubmodularFn f = SubmodularFn::directed_cut(2, edges);
  Vec ell_keep(2), ell_drop(2);
  ell_keep << 0, 0;
  ell_drop << 0, -1;
  return {Instance{f, LinearFn(ell_keep), std::nullopt},
          Instance{f, LinearFn(ell_drop), std::nullopt}};
}

Instance hyperedge_0408(int k) {
  if (k < 1) throw StructuralError("hyperedge_0408 requires k >= 1");
  const int n = 2 * k;
  Mask tails = 0, heads = 0;
  for (int i = 0; i < k; ++i) {
    tails |= 1ULL << i;
    heads |= 1ULL << (k + i);
  }
  Vec ell(n);
  ell.head(k) = const_vec(k, -0.2037);
  ell.tail(k) = const_vec(k, 0.2037);
  return Instance{SubmodularFn::hyper_directed_cut(n, {{tails, heads, 1.0}}), LinearFn(ell),
                  std::nullopt};
}

Instance csm_dicut_arcs(int k) {
  if (k < 2) throw StructuralError("csm_dicut_arcs requires k >= 2");
  const int n = 2 * k;
  std::vector<DirectedEdge> edges;
  Mask heads = 0, tails = 0;
  for (int i = 0; i < k; ++i) {
    edges.push_back({i, k + i, 1.0});
    tails |= 1ULL << i;
    heads |= 1ULL << (k + i);
  }
  Vec ell = Vec::Zero(n);
  ell.tail(k) = const_vec(k, 1.0 / k);
  Matroid m = Matroid::partition(n, {tails, heads}, {1, k - 1});
  return Instance{SubmodularFn::directed_cut(n, std::move(edges)), LinearFn(ell), std::move(m)};
}

namespace {

Vec random_ell(const RandomInstanceParams& p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(p.ellmin, p.ellmax);
  Vec ell(p.n);
  for (int u = 0; u < p.n; ++u) ell[u] = d(rng);
  return ell;
}

}  // namespace

Instance random_dicut(const RandomInstanceParams& p) {
  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_real_distribution<double> wd(p.wmin, p.wmax);
  std::vector<DirectedEdge> edges;
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) {
      if (i == j) continue;
      if (unif(rng) < p.density) edges.push_back({i, j, wd(rng)});
    }
  LinearFn ell(random_ell(p, rng));
  return Instance{SubmodularFn::directed_cut(p.n, std::move(edges)), std::move(ell), std::nullopt};
}

Instance random_cut(const RandomInstanceParams& p) {
  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_real_distribution<double> wd(p.wmin, p.wmax);
  std::vector<UndirectedEdge> edges;
  for (int i = 0; i < p.n; ++i)
    for (int j = i + 1; j < p.n; ++j)
      if (unif(rng) < p.density) edges.push_back({i, j, wd(rng)});
  LinearFn ell(random_ell(p, rng));
  return Instance{SubmodularFn::undirected_cut(p.n, std::move(edges)), std::move(ell),
                  std::nullopt};
}

Instance random_coverage(const RandomInstanceParams& p) {
  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_real_distribution<double> wd(std::max(0.0, p.wmin), p.wmax);
  CoverageData data;
  int items = p.n;
  for (int j = 0; j < items; ++j) {
    Mask cover = 0;
    for (int u = 0; u < p.n; ++u)
      if (unif(rng) < p.density) cover |= 1ULL << u;
    if (cover == 0) cover |= 1ULL << (j % p.n);
    data.coverers.push_back(cover);
    data.item_weights.push_back(wd(rng));
  }
  LinearFn ell(random_ell(p, rng));
  return Instance{SubmodularFn::coverage(p.n, std::move(data)), std::move(ell), std::nullopt};
}

double dg_star_exact_expectation(int n, double r, bool hub_ell) {
  // Leaf decisions are i.i.d.: the keep probability is r/(r+1) with the hub
  // carrying l, and 1/(r+1) otherwise. Condition on the kept-leaf count m.
  double p = hub_ell ? r / (r + 1) : 1 / (r + 1);
  int leaves = n - 1;
  std::vector<double> prob(leaves + 1);
  prob[0] = std::pow(1 - p, leaves);
  for (int m = 0; m < leaves; ++m)
    prob[m + 1] = prob[m] * (leaves - m) / (m + 1) * (p / (1 - p));
  double expect = 0;
  for (int m = 0; m <= leaves; ++m) {
    double take, skip, hub_gain;
    if (hub_ell) {
      hub_gain = (leaves - m - r * m) / static_cast<double>(leaves) + (r - 1);
      take = (leaves - m) / static_cast<double>(leaves) + (r - 1);
      skip = r * m / static_cast<double>(leaves);
    } else {
      hub_gain = (leaves - m - r * m) / static_cast<double>(leaves);
      take = (leaves - m) / static_cast<double>(leaves) + m * (1 - r) / leaves;
      skip = m / static_cast<double>(leaves);
    }
    expect += prob[m] * (hub_gain > 0 ? take : skip);
  }
  return expect;
}

}  // namespace regsm
