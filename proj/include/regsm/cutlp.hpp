#ifndef REGSM_CUTLP_HPP
#define REGSM_CUTLP_HPP

#include "regsm/core.hpp"
#include "regsm/matroid.hpp"

namespace regsm {

struct CutLpResult {
  Vec x;            // optimal point (half-integral vertex in the directed case)
  Mask set = 0;     // rounded solution
  double lp_value = 0;   // (1/2) fhat(x) + L(x)
  double expected = 0;   // exact E[f + l] of the rounding used
};

/// Linear overestimate used by the relaxations: sum of per-edge caps.
double fhat_undirected(const SubmodularFn& f, const Vec& x);
double fhat_directed(const SubmodularFn& f, const Vec& x);

/// Maximize (1/2) fhat + L over the matroid polytope (edge variables capped
/// by x_a + x_b and 2 - x_a - x_b), then pipage-round.
CutLpResult undirected_cut_lp(const SubmodularFn& f, const LinearFn& ell, const Polytope& p);

/// Unconstrained directed variant; the LP vertex is half-integral, which is
/// what makes F(x) >= (1/2) fhat(x) hold. Rounded by independent sampling.
CutLpResult directed_cut_lp(const SubmodularFn& f, const LinearFn& ell);

}  // namespace regsm

#endif
