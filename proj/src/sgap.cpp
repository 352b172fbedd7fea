#include "regsm/sgap.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>

#include "regsm/errors.hpp"
#include "regsm/parallel.hpp"

namespace {
constexpr double kBig = std::numeric_limits<double>::infinity();
}

namespace regsm {

int default_threads() {
  if (const char* env = std::getenv("REGSUBMOD_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  threads = std::min(std::max(threads, 1), count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next(0);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

double fhat(double q, double p, double kappa, int k) {
  if (q < 0 || q > 1 || p < 0) throw StructuralError("fhat requires q in [0,1], p >= 0");
  double tail_term;
  if (k <= 0) {
    tail_term = 1 - std::exp(-p);
  } else {
    if (p > k + 1e-12) throw StructuralError("fhat with finite k requires p <= k");
    tail_term = 1 - std::pow(1 - p / k, k);
  }
  return (1 - kappa) * 2 * q * (1 - q) + kappa * 2 * (1 - q) * tail_term;
}

namespace {

// Value at the analytic q* for fixed p (clamped vertex of the parabola).
double best_over_q(double kappa, double ell_p, double ell_q, double p, double* q_out = nullptr) {
  double c = 1 - std::exp(-p);
  double q;
  if (kappa < 1) {
    q = ((1 - kappa) - kappa * c + ell_q) / (2 * (1 - kappa));
    q = std::min(1.0, std::max(0.0, q));
  } else {
    q = (-c + ell_q) > 0 ? 1.0 : 0.0;
  }
  if (q_out) *q_out = q;
  return (1 - kappa) * 2 * q * (1 - q) + kappa * 2 * (1 - q) * c + 2 * p * ell_p + 2 * q * ell_q;
}

double golden_refine(double kappa, double ell_p, double ell_q, double lo, double hi) {
  const double phi = (std::sqrt(5.0) - 1) / 2;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = best_over_q(kappa, ell_p, ell_q, x1);
  double f2 = best_over_q(kappa, ell_p, ell_q, x2);
  for (int it = 0; it < 80 && b - a > 1e-12; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = best_over_q(kappa, ell_p, ell_q, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = best_over_q(kappa, ell_p, ell_q, x1);
    }
  }
  return (a + b) / 2;
}

}  // namespace

InnerMax inner_max(double kappa, double ell_p, double ell_q, double p_max, double p_step,
                   bool refine) {
  if (!(p_max > 0) || !(p_step > 0)) throw StructuralError("inner_max needs positive ranges");
  int cells = static_cast<int>(std::ceil(p_max / p_step));
  double best_p = 0, best_v = best_over_q(kappa, ell_p, ell_q, 0);
  for (int i = 1; i <= cells; ++i) {
    double p = std::min(p_max, i * p_step);
    double v = best_over_q(kappa, ell_p, ell_q, p);
    if (v > best_v) {
      best_v = v;
      best_p = p;
    }
  }
  if (refine) {
    double lo = std::max(0.0, best_p - p_step), hi = std::min(p_max, best_p + p_step);
    double p = golden_refine(kappa, ell_p, ell_q, lo, hi);
    double v = best_over_q(kappa, ell_p, ell_q, p);
    if (v > best_v) {
      best_v = v;
      best_p = p;
    }
  }
  InnerMax out;
  out.value = best_over_q(kappa, ell_p, ell_q, best_p, &out.q_star);
  out.p_star = best_p;
  return out;
}

namespace {

double outer_objective(double beta, double kappa, double ell_p, double ell_q, double p_max,
                       double p_step, bool refine) {
  return inner_max(kappa, ell_p, ell_q, p_max, p_step, refine).value - beta * (ell_p + ell_q);
}

}  // namespace

OuterMin outer_min(double beta, SignMode mode, const SgapGrids& grids) {
  if (beta < 0) throw StructuralError("beta must be >= 0");
  const double lq_min = -0.7;
  const double lq_max = mode == SignMode::Unconstrained ? 0.7 : 0.0;
  const double lp_min = -1.0, lp_max = 0.0;
  const double step = grids.coarse;
  const int nk = static_cast<int>(std::round(1.0 / step)) + 1;
  const int np = static_cast<int>(std::round((lp_max - lp_min) / step)) + 1;
  const int nq = static_cast<int>(std::round((lq_max - lq_min) / step)) + 1;

  int threads = grids.threads > 0 ? grids.threads : default_threads();
  std::mutex mu;
  double best = kBig;
  SgapParams best_params;
  parallel_for(nk, threads, [&](int ik) {
    double kappa = std::min(1.0, ik * step);
    double local_best = kBig;
    SgapParams local_params;
    for (int ip = 0; ip < np; ++ip) {
      double lp = lp_min + ip * step;
      for (int iq = 0; iq < nq; ++iq) {
        double lq = lq_min + iq * step;
        double v = outer_objective(beta, kappa, lp, lq, grids.p_max, 0.02, true);
        if (v < local_best) {
          local_best = v;
          local_params = {kappa, lp, lq, beta};
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    if (local_best < best) {
      best = local_best;
      best_params = local_params;
    }
  });

  // Local refinement in shrinking boxes around the coarse argmin.
  double span = step;
  SgapParams cur = best_params;
  for (double sub_step = step / 10; sub_step >= grids.fine / 2; sub_step /= 10) {
    double lo_k = std::max(0.0, cur.kappa - span), hi_k = std::min(1.0, cur.kappa + span);
    double lo_p = std::max(lp_min, cur.ell_p - span), hi_p = std::min(lp_max, cur.ell_p + span);
    double lo_q = std::max(lq_min, cur.ell_q - span), hi_q = std::min(lq_max, cur.ell_q + span);
    for (double kappa = lo_k; kappa <= hi_k + 1e-12; kappa += sub_step)
      for (double lp = lo_p; lp <= hi_p + 1e-12; lp += sub_step)
        for (double lq = lo_q; lq <= hi_q + 1e-12; lq += sub_step) {
          double v = outer_objective(beta, kappa, lp, lq, grids.p_max, 1e-3, true);
          if (v < best) {
            best = v;
            cur = {kappa, lp, lq, beta};
          }
        }
    span = sub_step * 2;
  }

  OuterMin out;
  out.params = cur;
  out.inner = inner_max(cur.kappa, cur.ell_p, cur.ell_q, grids.p_max, grids.fine, true);
  out.alpha = out.inner.value - beta * (cur.ell_p + cur.ell_q);
  return out;
}

namespace {

double h_fn(double p, double kappa) {
  double e = std::exp(-p);
  return (kappa * (2 * e - 1) - kappa * kappa * e * e) / (4 * (1 - kappa));
}

double h_deriv(double p, double kappa) {
  double e = std::exp(-p);
  return (-2 * kappa * e + 2 * kappa * kappa * e * e) / (4 * (1 - kappa));
}

}  // namespace

LimitResult limit_two_ln_two() {
  // p* -> ln 2 from below with kappa -> 0; l_p = h'(p*) puts the minimum of
  // h(p) - p l_p at p* (h is convex up for kappa < 1/2).
  const double ln2 = std::log(2.0);
  double best_beta = 0;
  SgapParams best;
  for (double delta : {1e-2, 1e-3}) {
    for (double kappa : {1e-3, 1e-4}) {
      double p_star = ln2 - delta;
      double lp = h_deriv(p_star, kappa);
      if (!(lp < 0)) continue;
      double beta = 2 * (h_fn(p_star, kappa) - p_star * lp) / (-lp);
      if (beta > best_beta) {
        best_beta = beta;
        best = {kappa, lp, 0, beta};
      }
    }
  }
  return {best_beta, best};
}

namespace {

// k = 2 symmetrized value maximized over q, as a function of p.
double g2(double p, double kappa) {
  double c = 1 - (1 - p / 2) * (1 - p / 2);
  double q = ((1 - kappa) - kappa * c) / (2 * (1 - kappa));
  q = std::min(1.0, std::max(0.0, q));
  return (1 - kappa) * 2 * q * (1 - q) + kappa * 2 * (1 - q) * c;
}

}  // namespace

LimitResult limit_sqrt2() {
  const double p_lim = 2 - std::sqrt(2.0);
  double best_beta = 2.0;
  SgapParams best;
  for (double delta : {1e-2, 1e-3, 2e-4}) {
    double p_star = p_lim - delta;
    for (double kappa : {1e-3, 1e-4}) {
      if (!(g2(p_star, kappa) < 0.5)) continue;
      // l_p from the stationarity of g(p) - 2p l_p at p*.
      double eps = 1e-6;
      double lp = (g2(p_star + eps, kappa) - g2(p_star - eps, kappa)) / (2 * eps) / 2;
      if (!(lp > 0)) continue;
      // Certify max_{0<=p<=2}[g(p) - 2p l_p] < 0.5 - 2 p* l_p.
      double bound = 0.5 - 2 * p_star * lp;
      bool ok = true;
      for (double p = 0; p <= 2.0 + 1e-12; p += 1e-4)
        if (g2(p, kappa) - 2 * p * lp >= bound) {
          ok = false;
          break;
        }
      if (!ok) continue;
      double beta = (4 - 2 * p_star) / 3;
      if (beta < best_beta) {
        best_beta = beta;
        best = {kappa, lp, 0, beta};
      }
    }
  }
  return {best_beta, best};
}

Hyperedge0408 hyperedge_0408_check() {
  const double ell = 0.2037;
  auto obj = [&](double p, double q) {
    return (1 - std::exp(-p)) * (1 - std::exp(-q)) - ell * (p + q);
  };
  Hyperedge0408 out;
  out.alpha_bound = 2 * ell;
  double best = -kBig;
  double bp = 0, bq = 0;
  for (double p = 0; p <= 5.0 + 1e-12; p += 0.01)
    for (double q = 0; q <= 5.0 + 1e-12; q += 0.01) {
      double v = obj(p, q);
      if (v > best) {
        best = v;
        bp = p;
        bq = q;
      }
    }
  for (double step = 0.001; step >= 1e-5; step /= 10) {
    double lo_p = std::max(0.0, bp - 10 * step), hi_p = std::min(5.0, bp + 10 * step);
    double lo_q = std::max(0.0, bq - 10 * step), hi_q = std::min(5.0, bq + 10 * step);
    for (double p = lo_p; p <= hi_p + 1e-12; p += step)
      for (double q = lo_q; q <= hi_q + 1e-12; q += step) {
        double v = obj(p, q);
        if (v > best) {
          best = v;
          bp = p;
          bq = q;
        }
      }
  }
  out.max_at_origin = best <= 1e-9 && obj(0, 0) == 0.0;
  // Largest value away from a small neighborhood of the origin.
  double interior = -kBig;
  for (double p = 0; p <= 5.0 + 1e-12; p += 0.005)
    for (double q = 0; q <= 5.0 + 1e-12; q += 0.005) {
      if (p + q < 0.05) continue;
      interior = std::max(interior, obj(p, q));
    }
  out.interior_max = interior;
  return out;
}

bool csm_beta1_check(int k, double alpha, double beta) {
  if (k < 2) throw StructuralError("csm_beta1_check requires k >= 2");
  return alpha + beta * (k - 1) / static_cast<double>(k) > 1.0;
}

double cardinality_0478_check(double kappa) {
  double best = 0;
  for (double p = 0; p <= 0.5 + 1e-12; p += 1e-4) {
    double v = best_over_q(kappa, 0, 0, p);
    best = std::max(best, v);
  }
  double refined = golden_refine(kappa, 0, 0, 0.5 - 2e-4, 0.5);
  best = std::max(best, best_over_q(kappa, 0, 0, std::min(0.5, refined)));
  return best;
}

}  // namespace regsm
