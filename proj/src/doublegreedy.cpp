#include "regsm/doublegreedy.hpp"

#include <numeric>
#include <random>

namespace regsm {

std::vector<int> default_order(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

namespace {

void check_order(const std::vector<int>& order, int n) {
  if (static_cast<int>(order.size()) != n) throw StructuralError("order must list every element");
  Mask seen = 0;
  for (int u : order) {
    if (u < 0 || u >= n || contains(seen, u))
      throw StructuralError("order must be a permutation of the ground set");
    seen |= 1ULL << u;
  }
}

double g_eval(const SubmodularFn& f, const LinearFn& ell, Mask s) {
  return f.eval(s) + ell.eval(s);
}

DgStep make_step(const SubmodularFn& f, const LinearFn& ell, int u, Mask x, Mask y) {
  DgStep st;
  st.u = u;
  st.gain_x = f.marginal(u, x) + ell(u);
  st.gain_y = g_eval(f, ell, y) - g_eval(f, ell, y & ~(1ULL << u));
  st.a = std::max(st.gain_x, 0.0);
  st.b = std::max(-st.gain_y, 0.0);
  return st;
}

}  // namespace

std::pair<Mask, DgTrace> deterministic_dg(const SubmodularFn& f, const LinearFn& ell, double r,
                                          const std::vector<int>& order) {
  if (r < 1) throw ContractError("deterministic_dg requires r >= 1");
  int n = f.n();
  check_order(order, n);
  Mask x = 0, y = full_mask(n);
  DgTrace trace;
  for (int u : order) {
    DgStep st = make_step(f, ell, u, x, y);
    st.took = st.gain_x >= -r * st.gain_y;
    st.p_take = st.took ? 1.0 : 0.0;
    if (st.took)
      x |= 1ULL << u;
    else
      y &= ~(1ULL << u);
    trace.steps.push_back(st);
  }
  trace.final_set = x;
  return {x, std::move(trace)};
}

std::pair<Mask, DgTrace> randomized_dg(const SubmodularFn& f, const LinearFn& ell,
                                       const std::vector<int>& order, std::uint64_t seed) {
  int n = f.n();
  check_order(order, n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Mask x = 0, y = full_mask(n);
  DgTrace trace;
  for (int u : order) {
    DgStep st = make_step(f, ell, u, x, y);
    st.p_take = st.a + st.b > 0 ? st.a / (st.a + st.b) : 0.0;
    st.took = st.p_take > 0 && unif(rng) < st.p_take;
    if (st.took)
      x |= 1ULL << u;
    else
      y &= ~(1ULL << u);
    trace.steps.push_back(st);
  }
  trace.final_set = x;
  return {x, std::move(trace)};
}

namespace {

double expectation_rec(const SubmodularFn& f, const LinearFn& ell, const std::vector<int>& order,
                       size_t i, Mask x, Mask y) {
  if (i == order.size()) return g_eval(f, ell, x);
  int u = order[i];
  DgStep st = make_step(f, ell, u, x, y);
  double p = st.a + st.b > 0 ? st.a / (st.a + st.b) : 0.0;
  double out = 0;
  if (p > 0) out += p * expectation_rec(f, ell, order, i + 1, x | (1ULL << u), y);
  if (p < 1) out += (1 - p) * expectation_rec(f, ell, order, i + 1, x, y & ~(1ULL << u));
  return out;
}

}  // namespace

double exact_dg_expectation(const SubmodularFn& f, const LinearFn& ell,
                            const std::vector<int>& order) {
  int n = f.n();
  if (n > 20) throw CapabilityError("exact double-greedy expectation limited to n <= 20");
  check_order(order, n);
  return expectation_rec(f, ell, order, 0, 0, full_mask(n));
}

Mask oblivious_dicut(const SubmodularFn& f, const LinearFn& ell, double beta,
                     std::uint64_t seed) {
  if (!f.is_directed_cut()) throw ContractError("oblivious_dicut requires a directed cut function");
  if (beta < 0 || beta > 1) throw ContractError("beta must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Mask s = 0;
  for (int v = 0; v < f.n(); ++v) {
    if ((1 - beta) * f.out_weight(v) + ell(v) < 0) continue;
    if (unif(rng) < beta) s |= 1ULL << v;
  }
  return s;
}

double oblivious_dicut_expectation(const SubmodularFn& f, const LinearFn& ell, double beta) {
  if (!f.is_directed_cut()) throw ContractError("oblivious_dicut requires a directed cut function");
  if (beta < 0 || beta > 1) throw ContractError("beta must lie in [0,1]");
  int n = f.n();
  Vec p = Vec::Zero(n);
  for (int v = 0; v < n; ++v)
    if ((1 - beta) * f.out_weight(v) + ell(v) >= 0) p[v] = beta;
  double expect = ell.dot(p);
  for (const auto& e : f.as_directed_cut().edges) expect += e.w * p[e.tail] * (1 - p[e.head]);
  return expect;
}

}  // namespace regsm
