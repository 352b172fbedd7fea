#ifndef REGSM_BENCH_HPP
#define REGSM_BENCH_HPP

#include <cstdint>
#include <optional>

#include "regsm/io.hpp"

namespace regsm {

struct BruteResult {
  Mask set = 0;
  double value = 0;
};

/// Exhaustive maximizer of alpha*f(S) + beta*l(S) over the feasible sets.
/// n <= 20 unconstrained, n <= 16 with an explicit matroid.
BruteResult brute_force_opt(const SubmodularFn& f, const LinearFn& ell,
                            const std::optional<Matroid>& constraint, double alpha, double beta);

inline BruteResult brute_force_opt(const Instance& inst, double alpha, double beta) {
  return brute_force_opt(inst.f, inst.ell, inst.constraint, alpha, beta);
}

// --- instance generators ---------------------------------------------------

/// Two directed hyperedges plus an undirected edge, each tail group blown up
/// into t copies; the hard cardinality-constrained family. Exported to an
/// explicit table for t > 1.
Instance gharan_vondrak(int k, int t, double kappa);

/// n = 2 pair of antiparallel arcs that defeats the r-threshold greedy.
Instance dg_tight_det(double r, double eps);

/// Star of 2(n-1) arcs with l concentrated on the hub.
Instance dg_tight_rand(int n, double r);

/// Same star with the hub value moved onto the leaves; breaks randomized
/// greedy entirely.
Instance dg_rand_bad(int n, double r);

/// The two-instance adversary pair for deterministic online algorithms; they
/// share f and differ in l.
std::pair<Instance, Instance> online_bad(double alpha);

/// Generalized directed hyperedge (k tails, k heads) with +-0.2037 weights.
Instance hyperedge_0408(int k);

/// k disjoint arcs with the one-tail / (k-1)-heads partition matroid.
Instance csm_dicut_arcs(int k);

struct RandomInstanceParams {
  int n = 8;
  double density = 0.5;
  double wmin = 0, wmax = 1;
  double ellmin = -1, ellmax = 0;
  std::uint64_t seed = 1;
};

Instance random_dicut(const RandomInstanceParams& params);
Instance random_cut(const RandomInstanceParams& params);
Instance random_coverage(const RandomInstanceParams& params);

/// Exact E[f(X)+l(X)] of randomized double greedy on the dg_tight_rand
/// (hub_ell = true) / dg_rand_bad (hub_ell = false) stars, via the binomial
/// distribution of leaf decisions. Tractable at any n, unlike the generic
/// decision-tree evaluator.
double dg_star_exact_expectation(int n, double r, bool hub_ell);

}  // namespace regsm

#endif
