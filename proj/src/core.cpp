#include "regsm/core.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace regsm {

Vec indicator(Mask s, int n) {
  Vec x = Vec::Zero(n);
  for (int u = 0; u < n; ++u)
    if (contains(s, u)) x[u] = 1.0;
  return x;
}

Mask support(const Vec& x, double tol) {
  Mask s = 0;
  for (int u = 0; u < x.size(); ++u)
    if (x[u] > tol) s |= 1ULL << u;
  return s;
}

namespace {

void check_weight(double w) {
  if (!(w >= 0)) throw StructuralError("edge weights must be non-negative");
}

void check_index(int u, int n) {
  if (u < 0 || u >= n) throw StructuralError("element index out of range");
}

// Spot-check grid for tables too large to audit exhaustively.
void audit_table(int n, const std::vector<double>& vals) {
  if (n < 1 || n > 24) throw StructuralError("explicit table requires 1 <= n <= 24");
  if (vals.size() != (1ULL << n)) throw StructuralError("table must have 2^n entries");
  for (double v : vals)
    if (!(v >= 0)) throw StructuralError("table values must be non-negative");
  auto fails = [&](Mask s, int u, int v) {
    double left = vals[s | (1ULL << u)] - vals[s];
    double right = vals[s | (1ULL << u) | (1ULL << v)] - vals[s | (1ULL << v)];
    return left < right - 1e-9;
  };
  if (n <= 16) {
    for (Mask s = 0; s < (1ULL << n); ++s)
      for (int u = 0; u < n; ++u) {
        if (contains(s, u)) continue;
        for (int v = 0; v < n; ++v) {
          if (v == u || contains(s, v)) continue;
          if (fails(s, u, v)) throw StructuralError("table is not submodular");
        }
      }
  } else {
    std::mt19937_64 rng(0x5eedULL);
    for (int trial = 0; trial < 200000; ++trial) {
      Mask s = rng() & full_mask(n);
      int u = static_cast<int>(rng() % n);
      int v = static_cast<int>(rng() % n);
      if (u == v) continue;
      s &= ~(1ULL << u);
      s &= ~(1ULL << v);
      if (fails(s, u, v)) throw StructuralError("table is not submodular");
    }
  }
}

}  // namespace

SubmodularFn SubmodularFn::directed_cut(int n, std::vector<DirectedEdge> edges) {
  GroundSet gs(n);
  for (const auto& e : edges) {
    check_index(e.tail, n);
    check_index(e.head, n);
    check_weight(e.w);
  }
  return SubmodularFn(n, DirectedCut{std::move(edges)});
}

SubmodularFn SubmodularFn::undirected_cut(int n, std::vector<UndirectedEdge> edges) {
  GroundSet gs(n);
  for (const auto& e : edges) {
    check_index(e.a, n);
    check_index(e.b, n);
    check_weight(e.w);
  }
  return SubmodularFn(n, UndirectedCut{std::move(edges)});
}

SubmodularFn SubmodularFn::hyper_directed_cut(int n, std::vector<DirectedHyperedge> edges) {
  GroundSet gs(n);
  for (const auto& e : edges) {
    if ((e.tails | e.heads) & ~full_mask(n))
      throw StructuralError("hyperedge references element out of range");
    if (e.tails & e.heads) throw StructuralError("hyperedge tails and heads must be disjoint");
    if (e.tails == 0) throw StructuralError("hyperedge needs at least one tail");
    check_weight(e.w);
  }
  return SubmodularFn(n, HyperDirectedCut{std::move(edges)});
}

SubmodularFn SubmodularFn::coverage(int n, CoverageData data) {
  GroundSet gs(n);
  if (data.item_weights.size() != data.coverers.size())
    throw StructuralError("coverage weights and coverer masks must align");
  for (double w : data.item_weights) check_weight(w);
  for (Mask m : data.coverers)
    if (m & ~full_mask(n)) throw StructuralError("coverer mask out of range");
  return SubmodularFn(n, Coverage{std::move(data)});
}

SubmodularFn SubmodularFn::table(int n, std::vector<double> values) {
  audit_table(n, values);
  return SubmodularFn(n, ExplicitTable{std::move(values)});
}

void SubmodularFn::check_element(int u) const { check_index(u, n_); }

std::string SubmodularFn::kind() const {
  if (std::holds_alternative<DirectedCut>(rep_)) return "dicut";
  if (std::holds_alternative<UndirectedCut>(rep_)) return "cut";
  if (std::holds_alternative<HyperDirectedCut>(rep_)) return "hyperdicut";
  if (std::holds_alternative<Coverage>(rep_)) return "coverage";
  return "table";
}

double SubmodularFn::eval(Mask s) const {
  if (s & ~full_mask(n_)) throw StructuralError("subset contains out-of-range elements");
  return std::visit(
      [&](const auto& rep) -> double {
        using T = std::decay_t<decltype(rep)>;
        double total = 0;
        if constexpr (std::is_same_v<T, DirectedCut>) {
          for (const auto& e : rep.edges)
            if (contains(s, e.tail) && !contains(s, e.head)) total += e.w;
        } else if constexpr (std::is_same_v<T, UndirectedCut>) {
          for (const auto& e : rep.edges)
            if (contains(s, e.a) != contains(s, e.b)) total += e.w;
        } else if constexpr (std::is_same_v<T, HyperDirectedCut>) {
          for (const auto& e : rep.edges)
            if ((s & e.tails) != 0 && (s & e.heads) != e.heads) total += e.w;
        } else if constexpr (std::is_same_v<T, Coverage>) {
          for (size_t j = 0; j < rep.data.coverers.size(); ++j)
            if (s & rep.data.coverers[j]) total += rep.data.item_weights[j];
        } else {
          total = rep.values[s];
        }
        return total;
      },
      rep_);
}

double SubmodularFn::marginal(int u, Mask s) const {
  check_element(u);
  if (contains(s, u)) throw ContractError("marginal requires u not in S");
  return eval(s | (1ULL << u)) - eval(s);
}

SubmodularFn SubmodularFn::to_table() const {
  if (n_ > 24) throw CapabilityError("explicit table limited to n <= 24");
  std::vector<double> vals(1ULL << n_);
  for (Mask s = 0; s < vals.size(); ++s) vals[s] = eval(s);
  return SubmodularFn(n_, ExplicitTable{std::move(vals)});
}

SubmodularFn SubmodularFn::complement() const {
  if (const auto* dc = std::get_if<DirectedCut>(&rep_)) {
    std::vector<DirectedEdge> rev;
    rev.reserve(dc->edges.size());
    for (const auto& e : dc->edges) rev.push_back({e.head, e.tail, e.w});
    return SubmodularFn(n_, DirectedCut{std::move(rev)});
  }
  if (std::holds_alternative<UndirectedCut>(rep_)) return *this;
  if (const auto* hc = std::get_if<HyperDirectedCut>(&rep_)) {
    // f(N\S) cuts (T,H) iff S misses some of T and covers some of H,
    // which is the hyperedge (H,T) evaluated at S.
    std::vector<DirectedHyperedge> rev;
    rev.reserve(hc->edges.size());
    bool ok = true;
    for (const auto& e : hc->edges) {
      if (e.heads == 0) {
        ok = false;
        break;
      }
      rev.push_back({e.heads, e.tails, e.w});
    }
    if (ok) return SubmodularFn(n_, HyperDirectedCut{std::move(rev)});
  }
  SubmodularFn tbl = to_table();
  const auto& vals = std::get<ExplicitTable>(tbl.rep_).values;
  Mask all = full_mask(n_);
  std::vector<double> comp(vals.size());
  for (Mask s = 0; s < vals.size(); ++s) comp[s] = vals[all & ~s];
  return SubmodularFn(n_, ExplicitTable{std::move(comp)});
}

double SubmodularFn::out_weight(int u) const {
  check_element(u);
  const auto& dc = std::get<DirectedCut>(rep_);
  double total = 0;
  for (const auto& e : dc.edges)
    if (e.tail == u) total += e.w;
  return total;
}

double LinearFn::eval(Mask s) const {
  double total = 0;
  for (int u = 0; u < n(); ++u)
    if (contains(s, u)) total += w_[u];
  return total;
}

Mask LinearFn::positive_support() const {
  Mask s = 0;
  for (int u = 0; u < n(); ++u)
    if (w_[u] > 0) s |= 1ULL << u;
  return s;
}

namespace {

double table_multilinear(const std::vector<double>& vals, const Vec& x) {
  // Fold coordinates one at a time: O(2^n) total.
  std::vector<double> cur(vals);
  int n = static_cast<int>(x.size());
  for (int u = n - 1; u >= 0; --u) {
    size_t half = 1ULL << u;
    for (size_t s = 0; s < half; ++s) cur[s] = (1 - x[u]) * cur[s] + x[u] * cur[s | half];
    cur.resize(half);
  }
  return cur[0];
}

double prob_hits(Mask tails, const Vec& x) {
  double miss = 1;
  for (int u = 0; u < x.size(); ++u)
    if (contains(tails, u)) miss *= 1 - x[u];
  return 1 - miss;
}

double prob_not_all(Mask heads, const Vec& x) {
  double all = 1;
  for (int u = 0; u < x.size(); ++u)
    if (contains(heads, u)) all *= x[u];
  return 1 - all;
}

}  // namespace

double multilinear_exact(const SubmodularFn& f, const Vec& x) {
  if (x.size() != f.n()) throw StructuralError("point dimension mismatch");
  if ((x < -1e-12).any() || (x > 1 + 1e-12).any())
    throw StructuralError("point must lie in the unit cube");
  return std::visit(
      [&](const auto& rep) -> double {
        using T = std::decay_t<decltype(rep)>;
        double total = 0;
        if constexpr (std::is_same_v<T, SubmodularFn::DirectedCut>) {
          for (const auto& e : rep.edges) total += e.w * x[e.tail] * (1 - x[e.head]);
        } else if constexpr (std::is_same_v<T, SubmodularFn::UndirectedCut>) {
          for (const auto& e : rep.edges)
            total += e.w * (x[e.a] * (1 - x[e.b]) + x[e.b] * (1 - x[e.a]));
        } else if constexpr (std::is_same_v<T, SubmodularFn::HyperDirectedCut>) {
          for (const auto& e : rep.edges)
            total += e.w * prob_hits(e.tails, x) * prob_not_all(e.heads, x);
        } else if constexpr (std::is_same_v<T, SubmodularFn::Coverage>) {
          for (size_t j = 0; j < rep.data.coverers.size(); ++j)
            total += rep.data.item_weights[j] * prob_hits(rep.data.coverers[j], x);
        } else {
          total = table_multilinear(rep.values, x);
        }
        return total;
      },
      f.rep_);
}

Vec multilinear_grad(const SubmodularFn& f, const Vec& x) {
  int n = f.n();
  Vec g = Vec::Zero(n);
  // Closed forms per variant; for tables fall back to the two-point rule.
  if (const auto* dc = std::get_if<SubmodularFn::DirectedCut>(&f.rep_)) {
    for (const auto& e : dc->edges) {
      g[e.tail] += e.w * (1 - x[e.head]);
      g[e.head] -= e.w * x[e.tail];
    }
    return g;
  }
  if (const auto* uc = std::get_if<SubmodularFn::UndirectedCut>(&f.rep_)) {
    for (const auto& e : uc->edges) {
      g[e.a] += e.w * (1 - 2 * x[e.b]);
      g[e.b] += e.w * (1 - 2 * x[e.a]);
    }
    return g;
  }
  if (const auto* hc = std::get_if<SubmodularFn::HyperDirectedCut>(&f.rep_)) {
    for (const auto& e : hc->edges) {
      double hit = prob_hits(e.tails, x);
      double notall = prob_not_all(e.heads, x);
      for (int u = 0; u < n; ++u) {
        if (contains(e.tails, u)) {
          // d(hit)/dx_u = prod over other tails of (1-x)
          double rest = 1;
          for (int v = 0; v < n; ++v)
            if (v != u && contains(e.tails, v)) rest *= 1 - x[v];
          g[u] += e.w * rest * notall;
        } else if (contains(e.heads, u)) {
          double rest = 1;
          for (int v = 0; v < n; ++v)
            if (v != u && contains(e.heads, v)) rest *= x[v];
          g[u] -= e.w * hit * rest;
        }
      }
    }
    return g;
  }
  if (const auto* cv = std::get_if<SubmodularFn::Coverage>(&f.rep_)) {
    for (size_t j = 0; j < cv->data.coverers.size(); ++j) {
      Mask m = cv->data.coverers[j];
      for (int u = 0; u < n; ++u) {
        if (!contains(m, u)) continue;
        double rest = 1;
        for (int v = 0; v < n; ++v)
          if (v != u && contains(m, v)) rest *= 1 - x[v];
        g[u] += cv->data.item_weights[j] * rest;
      }
    }
    return g;
  }
  for (int u = 0; u < n; ++u) {
    Vec hi = x, lo = x;
    hi[u] = 1;
    lo[u] = 0;
    g[u] = multilinear_exact(f, hi) - multilinear_exact(f, lo);
  }
  return g;
}

SampledEstimate multilinear_sampled(const SubmodularFn& f, const Vec& x, int samples,
                                    std::uint64_t seed) {
  if (samples < 1) throw ContractError("samples must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double sum = 0, sumsq = 0;
  for (int i = 0; i < samples; ++i) {
    Mask s = 0;
    for (int u = 0; u < f.n(); ++u)
      if (unif(rng) < x[u]) s |= 1ULL << u;
    double v = f.eval(s);
    sum += v;
    sumsq += v * v;
  }
  double mean = sum / samples;
  double var = std::max(0.0, sumsq / samples - mean * mean);
  double se = samples > 1 ? std::sqrt(var / (samples - 1)) : 0.0;
  return {mean, se};
}

Mask sample_random_subset(const Vec& x, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Mask s = 0;
  for (int u = 0; u < x.size(); ++u)
    if (unif(rng) < x[u]) s |= 1ULL << u;
  return s;
}

std::pair<SubmodularFn, LinearFn> complement_transform(const SubmodularFn& f,
                                                       const LinearFn& ell) {
  if (f.n() != ell.n()) throw StructuralError("f and l must share a ground set");
  return {f.complement(), ell.negated()};
}

bool is_submodular(const SubmodularFn& f, double tol) {
  int n = f.n();
  if (n > 16) throw CapabilityError("exhaustive submodularity audit limited to n <= 16");
  for (Mask s = 0; s < (1ULL << n); ++s)
    for (int u = 0; u < n; ++u) {
      if (contains(s, u)) continue;
      double fu = f.eval(s | (1ULL << u)) - f.eval(s);
      for (int v = 0; v < n; ++v) {
        if (v == u || contains(s, v)) continue;
        Mask sv = s | (1ULL << v);
        double fuv = f.eval(sv | (1ULL << u)) - f.eval(sv);
        if (fu < fuv - tol) return false;
      }
    }
  return true;
}

}  // namespace regsm
