#ifndef REGSM_SGAP_HPP
#define REGSM_SGAP_HPP

#include <vector>

namespace regsm {

/// Symmetrized objective of the two-hyperedge construction:
///   (1-kappa) 2q(1-q) + kappa 2(1-q)(1-(1-p/k)^k),
/// with k = infinity replacing the last factor by 1-e^{-p}.
double fhat(double q, double p, double kappa, int k /* <= 0 means infinity */);

struct SgapParams {
  double kappa = 0, ell_p = 0, ell_q = 0, beta = 0;
};

struct InnerMax {
  double value = 0;
  double q_star = 0;
  double p_star = 0;
};

/// max over q in [0,1], p in [0,p_max] of fhat_inf + 2p*ell_p + 2q*ell_q.
/// q is solved analytically per p; p by dense grid plus golden-section.
InnerMax inner_max(double kappa, double ell_p, double ell_q, double p_max, double p_step = 1e-4,
                   bool refine = true);

enum class SignMode { NonPositiveEllQ, Unconstrained };

struct SgapGrids {
  double coarse = 0.01;
  double fine = 1e-4;
  double p_max = 5;
  int threads = 0;  // 0 = default
};

struct OuterMin {
  double alpha = 0;
  SgapParams params;
  InnerMax inner;
};

/// min over the (kappa, ell_p, ell_q) grid of inner_max - beta*(ell_p+ell_q);
/// coarse scan followed by local refinement.
OuterMin outer_min(double beta, SignMode mode, const SgapGrids& grids = {});

struct LimitResult {
  double beta = 0;
  SgapParams params;
};

/// Schedule p* -> ln 2, kappa -> 0; returns the largest certified beta for
/// alpha = 0.5 with non-positive l.
LimitResult limit_two_ln_two();

/// k = 2 schedule p* -> 2 - sqrt(2); returns the smallest certified beta for
/// alpha = 0.5 with non-negative l (approached from above).
LimitResult limit_sqrt2();

struct Hyperedge0408 {
  double alpha_bound = 0;  // 2 * 0.2037
  double interior_max = 0; // max of the objective away from the origin
  bool max_at_origin = false;
};

/// Confirms max_{p,q>=0}[(1-e^{-p})(1-e^{-q}) - 0.2037(p+q)] = 0 at (0,0).
Hyperedge0408 hyperedge_0408_check();

/// Whether alpha + beta (k-1)/k exceeds the symmetrized optimum 1 of the
/// k-disjoint-arcs construction.
bool csm_beta1_check(int k, double alpha, double beta);

/// max over q in [0,1], p in [0,1/2] of fhat_inf at the given kappa; the
/// cardinality-constraint hardness threshold sits just above it.
double cardinality_0478_check(double kappa);

}  // namespace regsm

#endif
