#ifndef REGSM_CONTGREEDY_HPP
#define REGSM_CONTGREEDY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "regsm/io.hpp"
#include "regsm/matroid.hpp"

namespace regsm {

struct CgConfig {
  double t_s = 0;       // switch time of the aided variants
  double t_f = 1;       // final time
  int steps = 200;      // time discretization
  int samples = 0;      // 0 = exact gradients, else per-coordinate samples
  std::uint64_t seed = 0;
};

/// Measured continuous greedy: y <- y + delta * z o (1 - y) with z in P
/// maximizing <z, grad F o (1 - y) (+ l)>. Runs for t_f time.
Vec measured_cg(const SubmodularFn& f, const LinearFn& ell, const Polytope& p,
                const CgConfig& cfg);

/// Same update driven by the distorted objective e^{t-t_f} F + L.
Vec distorted_measured_cg(const SubmodularFn& f, const LinearFn& ell, const Polytope& p,
                          const CgConfig& cfg);

/// Aided run: directions avoid support(z) during [0, t_s), then run free
/// until t_f. With a nonzero l this is the distorted aided variant.
Vec aided_mcg(const SubmodularFn& f, const LinearFn& ell, const Vec& z, const Polytope& p,
              const CgConfig& cfg);

struct LocalSearchResult {
  Vec z;
  double value = 0;  // F(z) + L(z)
  bool converged = false;
};

/// Fractional local search over p maximizing F + L: coordinate ascent with
/// pair swaps and vertex-direction moves, relative improvement threshold
/// 1e-4 / n.
LocalSearchResult local_search(const SubmodularFn& f, const LinearFn& ell, const Polytope& p,
                               const CgConfig& cfg);

enum class GuessMode { NonPositive, NegativePart };

/// The O(n^2/eps) guess grid {0} u {l(u) k eps} covering l(OPT) (or
/// l_-(OPT)) within a 1+eps factor.
std::vector<double> guess_ell_values(const LinearFn& ell, double eps, GuessMode mode);

/// l-maximization plus rounding; exact for matroid polytopes.
Mask trivial_approx(const LinearFn& ell, const Polytope& p, std::uint64_t seed);

struct PipelineResult {
  Mask set = 0;
  double expected_value = 0;  // exact E[f+l] of the rounded best candidate
  std::string best_tag;
};

using TimePairs = std::vector<std::pair<double, double>>;

/// (t_s, 1) for t_s in {0, 0.1, ..., 1}.
TimePairs default_csm_pairs();

/// Guess l(OPT), local-search, aided runs over the time pairs, round
/// everything, keep the best (or the empty set). l must be non-positive.
PipelineResult pipeline_nonpos(const Instance& inst, const CgConfig& cfg, const TimePairs& pairs,
                               double guess_eps = 0.5);

/// Matroid instance with l >= 0: trivial approximation, local search, and
/// distorted aided runs (t_f = 1); no guessing step.
PipelineResult pipeline_nonneg_csm(const Instance& inst, const CgConfig& cfg,
                                   const TimePairs& pairs = default_csm_pairs());

/// Better of one distorted measured run (t_f = t) and the trivial
/// approximation; works for any sign of l.
PipelineResult pipeline_unconstrained(const Instance& inst, double t, const CgConfig& cfg);

/// The matroid pipeline wrapped in the l_-(OPT) guess grid with the single
/// aided pair (0.205, 0.955).
PipelineResult pipeline_0280(const Instance& inst, const CgConfig& cfg,
                             const TimePairs& pairs = {{0.205, 0.955}}, double guess_eps = 0.5);

/// Unconstrained instance with l >= 0: complement the instance, run the
/// non-positive pipeline, complement the answer.
PipelineResult pipeline_nonneg_usm_beta1(const Instance& inst, const CgConfig& cfg,
                                         const TimePairs& pairs, double guess_eps = 0.5);

}  // namespace regsm

#endif
