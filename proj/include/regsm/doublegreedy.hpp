#ifndef REGSM_DOUBLEGREEDY_HPP
#define REGSM_DOUBLEGREEDY_HPP

#include <cstdint>
#include <vector>

#include "regsm/core.hpp"

namespace regsm {

/// One processed element of a double-greedy run.
struct DgStep {
  int u = 0;
  double gain_x = 0;  // g(u | X_{i-1})
  double gain_y = 0;  // g(u | Y_{i-1} \ {u})
  double a = 0, b = 0;
  double p_take = 0;
  bool took = false;
};

struct DgTrace {
  std::vector<DgStep> steps;
  Mask final_set = 0;
};

std::vector<int> default_order(int n);

/// Threshold variant: keep u when g(u|X) >= -r * g(u|Y\{u}); r = 1 is the
/// classic deterministic double greedy.
std::pair<Mask, DgTrace> deterministic_dg(const SubmodularFn& f, const LinearFn& ell, double r,
                                          const std::vector<int>& order);

/// Keep u with probability a/(a+b); a tie a = b = 0 drops the element.
std::pair<Mask, DgTrace> randomized_dg(const SubmodularFn& f, const LinearFn& ell,
                                       const std::vector<int>& order, std::uint64_t seed);

/// Exact E[f(X_n)+l(X_n)] of randomized_dg over the full decision tree
/// (n <= 20).
double exact_dg_expectation(const SubmodularFn& f, const LinearFn& ell,
                            const std::vector<int>& order);

/// Select v with probability beta when (1-beta)*out(v) + l(v) >= 0 (f must be
/// a directed cut function).
Mask oblivious_dicut(const SubmodularFn& f, const LinearFn& ell, double beta, std::uint64_t seed);

/// Closed-form E[f+l] of the oblivious rule.
double oblivious_dicut_expectation(const SubmodularFn& f, const LinearFn& ell, double beta);

}  // namespace regsm

#endif
