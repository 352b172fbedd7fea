#include "regsm/contgreedy.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace regsm {

namespace {

Vec grad_estimate(const SubmodularFn& f, const Vec& x, int samples, std::mt19937_64& rng) {
  if (samples <= 0) return multilinear_grad(f, x);
  int n = f.n();
  Vec g = Vec::Zero(n);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int s = 0; s < samples; ++s) {
    Mask base = 0;
    for (int u = 0; u < n; ++u)
      if (unif(rng) < x[u]) base |= 1ULL << u;
    for (int u = 0; u < n; ++u)
      g[u] += f.eval(base | (1ULL << u)) - f.eval(base & ~(1ULL << u));
  }
  return g / samples;
}

struct CgEngine {
  const SubmodularFn& f;
  const LinearFn& ell;
  const Polytope& p;
  CgConfig cfg;
  bool distorted = false;
  Mask blocked = 0;  // support(z) during the restricted phase

  Vec run() const {
    if (cfg.t_s < 0 || cfg.t_s > cfg.t_f || cfg.steps < 1)
      throw ContractError("continuous greedy needs 0 <= t_s <= t_f and steps >= 1");
    int n = f.n();
    Vec y = Vec::Zero(n);
    if (cfg.t_f == 0) return y;
    std::mt19937_64 rng(cfg.seed);
    double delta = cfg.t_f / cfg.steps;
    for (int j = 0; j < cfg.steps; ++j) {
      double t = j * delta;
      Vec grad = grad_estimate(f, y, cfg.samples, rng);
      double scale = distorted ? std::exp(t - cfg.t_f) : 1.0;
      Vec w = scale * grad * (1 - y) + ell.weights();
      bool restricted = t < cfg.t_s - 1e-12;
      if (restricted) {
        // Penalty large enough to dominate any feasible trade-off without
        // wrecking the LP's conditioning.
        double penalty = -1e6 * std::max(1.0, w.abs().maxCoeff());
        for (int u = 0; u < n; ++u)
          if (contains(blocked, u)) w[u] = penalty;
      }
      auto dir = p.maximize_linear(w);
      if (!dir) throw InvariantError("continuous greedy polytope is empty");
      Vec z = *dir;
      if (restricted)
        for (int u = 0; u < n; ++u)
          if (contains(blocked, u)) z[u] = 0;
      y += delta * z * (1 - y);
    }
    return y;
  }
};

}  // namespace

Vec measured_cg(const SubmodularFn& f, const LinearFn& ell, const Polytope& p,
                const CgConfig& cfg) {
  CgConfig c = cfg;
  c.t_s = 0;
  return CgEngine{f, ell, p, c, false, 0}.run();
}

Vec distorted_measured_cg(const SubmodularFn& f, const LinearFn& ell, const Polytope& p,
                          const CgConfig& cfg) {
  CgConfig c = cfg;
  c.t_s = 0;
  return CgEngine{f, ell, p, c, true, 0}.run();
}

Vec aided_mcg(const SubmodularFn& f, const LinearFn& ell, const Vec& z, const Polytope& p,
              const CgConfig& cfg) {
  if (!p.member(z, 1e-7)) throw ContractError("aided run requires z in the polytope");
  bool distorted = !(ell.weights() == 0.0).all();
  return CgEngine{f, ell, p, cfg, distorted, support(z)}.run();
}

namespace {

double fl_value(const SubmodularFn& f, const LinearFn& ell, const Vec& x) {
  return multilinear_exact(f, x) + ell.dot(x);
}

}  // namespace

LocalSearchResult local_search(const SubmodularFn& f, const LinearFn& ell, const Polytope& p,
                               const CgConfig& cfg) {
  (void)cfg;  // ascent is deterministic with exact marginals
  const int n = f.n();
  Vec x = Vec::Zero(n);
  double value = fl_value(f, ell, x);
  const double rel_tol = 1e-4 / n;
  const long cap = 100000L * n;
  long iters = 0;
  bool converged = false;
  while (iters < cap) {
    bool improved = false;
    double floor = rel_tol * std::max(1.0, std::abs(value));
    // Coordinate pass: F+L is affine per coordinate, so jump to the better
    // endpoint of the feasible interval.
    for (int u = 0; u < n && iters < cap; ++u) {
      ++iters;
      double slope = multilinear_grad(f, x)[u] + ell(u);
      Vec cand = x;
      if (slope > 0) {
        double room = p.raise_room(x, u);
        if (room <= 1e-12) continue;
        cand[u] += room;
      } else {
        if (x[u] <= 1e-12) continue;
        cand[u] = 0;
      }
      double v = fl_value(f, ell, cand);
      if (v > value + floor) {
        x = cand;
        value = v;
        improved = true;
      }
    }
    if (improved) continue;
    // Pair swaps for points pinned by a tight constraint.
    for (int u = 0; u < n && iters < cap; ++u) {
      for (int v = 0; v < n && iters < cap; ++v) {
        if (u == v) continue;
        ++iters;
        auto [dn, up] = p.pair_move_range(x, u, v);
        if (up <= 1e-12) continue;
        Vec cand = x;
        cand[u] += up;
        cand[v] -= up;
        double val = fl_value(f, ell, cand);
        if (val > value + floor) {
          x = cand;
          value = val;
          improved = true;
        }
      }
    }
    if (improved) continue;
    // Vertex direction as the final escape move.
    ++iters;
    Vec w = multilinear_grad(f, x) + ell.weights();
    auto vtx = p.maximize_linear(w);
    if (vtx) {
      Vec dir = *vtx - x;
      double best_eps = 0, best_val = value;
      for (int gi = 1; gi <= 20; ++gi) {
        double eps = gi / 20.0;
        double val = fl_value(f, ell, x + eps * dir);
        if (val > best_val) {
          best_val = val;
          best_eps = eps;
        }
      }
      if (best_eps > 0 && best_val > value + floor) {
        x += best_eps * dir;
        value = best_val;
        continue;
      }
    }
    converged = true;
    break;
  }
  return {x, value, converged};
}

std::vector<double> guess_ell_values(const LinearFn& ell, double eps, GuessMode mode) {
  if (!(eps > 0)) throw ContractError("guess grid requires eps > 0");
  int n = ell.n();
  std::set<double> grid = {0.0};
  long k_lo = static_cast<long>(std::ceil(1 / eps));
  long k_hi = static_cast<long>(std::ceil(n / eps));
  for (int u = 0; u < n; ++u) {
    double w = ell(u);
    if (mode == GuessMode::NegativePart && w >= 0) continue;
    if (w == 0) continue;
    for (long k = k_lo; k <= k_hi; ++k) grid.insert(w * k * eps);
  }
  return {grid.begin(), grid.end()};
}

Mask trivial_approx(const LinearFn& ell, const Polytope& p, std::uint64_t seed) {
  auto x = p.maximize_linear(ell.weights());
  if (!x) throw InvariantError("trivial approximation polytope is empty");
  if (p.pure()) return support(*x, 0.5);
  return sample_round(*x, seed);
}

TimePairs default_csm_pairs() {
  TimePairs pairs;
  for (int i = 0; i <= 10; ++i) pairs.push_back({0.1 * i, 1.0});
  return pairs;
}

namespace {

struct Candidate {
  Vec point;
  double value = 0;
  std::string tag;
};

// Rounds the winning fractional point: pipage against the original matroid
// polytope, independent sampling on the cube.
PipelineResult finish(const Instance& inst, const std::vector<Candidate>& cands,
                      std::uint64_t seed) {
  const Candidate* best = nullptr;
  for (const auto& c : cands)
    if (!best || c.value > best->value) best = &c;
  PipelineResult out;
  out.best_tag = best->tag;
  Polytope base = inst.polytope();
  if (inst.constraint) {
    out.set = pipage_round(base, inst.f, inst.ell, best->point, seed);
    out.expected_value = inst.value(out.set);
  } else {
    out.set = sample_round(best->point, seed);
    out.expected_value = best->value;
  }
  return out;
}

Candidate make_candidate(const Instance& inst, Vec point, std::string tag) {
  double v = fl_value(inst.f, inst.ell, point);
  return {std::move(point), v, std::move(tag)};
}

std::string guess_tag(const char* base, double w, const std::string& inner) {
  std::ostringstream os;
  os << base << "[w=" << w << "]" << inner;
  return os.str();
}

}  // namespace

PipelineResult pipeline_nonpos(const Instance& inst, const CgConfig& cfg, const TimePairs& pairs,
                               double guess_eps) {
  if (!inst.ell.nonpositive()) throw ContractError("pipeline_nonpos requires l <= 0");
  const bool csm = inst.constraint.has_value();
  Polytope base = inst.polytope();
  LinearFn zero = LinearFn::zero(inst.n());
  std::vector<Candidate> cands;
  cands.push_back(make_candidate(inst, Vec::Zero(inst.n()), "empty"));
  for (double w : guess_ell_values(inst.ell, guess_eps, GuessMode::NonPositive)) {
    Polytope cut = base.with_cut({inst.ell.weights(), w});
    LocalSearchResult ls = local_search(inst.f, zero, cut, cfg);
    cands.push_back(make_candidate(inst, ls.z, guess_tag("local", w, "")));
    for (auto [ts, tf] : pairs) {
      if (csm && tf > 1 + 1e-12) continue;
      CgConfig c = cfg;
      c.t_s = ts;
      c.t_f = tf;
      std::ostringstream os;
      os << "(ts=" << ts << ",tf=" << tf << ")";
      cands.push_back(
          make_candidate(inst, aided_mcg(inst.f, zero, ls.z, cut, c), guess_tag("aided", w, os.str())));
    }
  }
  return finish(inst, cands, cfg.seed);
}

PipelineResult pipeline_nonneg_csm(const Instance& inst, const CgConfig& cfg,
                                   const TimePairs& pairs) {
  if (!inst.ell.nonnegative()) throw ContractError("pipeline_nonneg_csm requires l >= 0");
  if (!inst.constraint) throw ContractError("pipeline_nonneg_csm requires a matroid");
  Polytope base = inst.polytope();
  std::vector<Candidate> cands;
  cands.push_back(make_candidate(inst, Vec::Zero(inst.n()), "empty"));
  cands.push_back(
      make_candidate(inst, indicator(trivial_approx(inst.ell, base, cfg.seed), inst.n()), "trivial"));
  LocalSearchResult ls = local_search(inst.f, inst.ell, base, cfg);
  cands.push_back(make_candidate(inst, ls.z, "local"));
  for (auto [ts, tf] : pairs) {
    CgConfig c = cfg;
    c.t_s = ts;
    c.t_f = tf;
    std::ostringstream os;
    os << "aided(ts=" << ts << ",tf=" << tf << ")";
    cands.push_back(make_candidate(inst, aided_mcg(inst.f, inst.ell, ls.z, base, c), os.str()));
  }
  return finish(inst, cands, cfg.seed);
}

PipelineResult pipeline_unconstrained(const Instance& inst, double t, const CgConfig& cfg) {
  if (inst.constraint && t > 1 + 1e-12)
    throw ContractError("matroid instances require t <= 1");
  Polytope base = inst.polytope();
  std::vector<Candidate> cands;
  cands.push_back(make_candidate(inst, Vec::Zero(inst.n()), "empty"));
  cands.push_back(
      make_candidate(inst, indicator(trivial_approx(inst.ell, base, cfg.seed), inst.n()), "trivial"));
  if (t > 0) {
    CgConfig c = cfg;
    c.t_f = t;
    cands.push_back(make_candidate(inst, distorted_measured_cg(inst.f, inst.ell, base, c),
                                   "distorted-mcg"));
  }
  return finish(inst, cands, cfg.seed);
}

PipelineResult pipeline_0280(const Instance& inst, const CgConfig& cfg, const TimePairs& pairs,
                             double guess_eps) {
  if (!inst.constraint) throw ContractError("pipeline_0280 requires a matroid");
  Polytope base = inst.polytope();
  std::vector<Candidate> cands;
  cands.push_back(make_candidate(inst, Vec::Zero(inst.n()), "empty"));
  cands.push_back(
      make_candidate(inst, indicator(trivial_approx(inst.ell, base, cfg.seed), inst.n()), "trivial"));
  Vec neg = inst.ell.negative_part().weights();
  for (double w : guess_ell_values(inst.ell, guess_eps, GuessMode::NegativePart)) {
    Polytope cut = base.with_cut({neg, w});
    LocalSearchResult ls = local_search(inst.f, inst.ell, cut, cfg);
    cands.push_back(make_candidate(inst, ls.z, guess_tag("local", w, "")));
    for (auto [ts, tf] : pairs) {
      if (tf > 1 + 1e-12) continue;
      CgConfig c = cfg;
      c.t_s = ts;
      c.t_f = tf;
      std::ostringstream os;
      os << "(ts=" << ts << ",tf=" << tf << ")";
      cands.push_back(make_candidate(inst, aided_mcg(inst.f, inst.ell, ls.z, cut, c),
                                     guess_tag("aided", w, os.str())));
    }
  }
  return finish(inst, cands, cfg.seed);
}

PipelineResult pipeline_nonneg_usm_beta1(const Instance& inst, const CgConfig& cfg,
                                         const TimePairs& pairs, double guess_eps) {
  if (!inst.ell.nonnegative()) throw ContractError("requires l >= 0");
  if (inst.constraint) throw ContractError("complement trick applies to unconstrained instances");
  auto [g, neg_ell] = complement_transform(inst.f, inst.ell);
  Instance flipped{std::move(g), std::move(neg_ell), std::nullopt};
  PipelineResult inner = pipeline_nonpos(flipped, cfg, pairs, guess_eps);
  PipelineResult out;
  out.set = full_mask(inst.n()) & ~inner.set;
  out.expected_value = inner.expected_value + inst.ell.eval(full_mask(inst.n()));
  out.best_tag = "complement:" + inner.best_tag;
  return out;
}

}  // namespace regsm
