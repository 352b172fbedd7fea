#ifndef REGSM_CORE_HPP
#define REGSM_CORE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "regsm/errors.hpp"

namespace regsm {

/// Subsets of the ground set are bitmasks; element i is bit i.
using Mask = std::uint64_t;

/// Fractional points, linear weights, gradients. Array semantics so that
/// coordinate-wise products and clamps stay one-liners.
using Vec = Eigen::ArrayXd;

inline int popcount(Mask s) { return static_cast<int>(__builtin_popcountll(s)); }
inline bool contains(Mask s, int u) { return (s >> u) & 1ULL; }
inline Mask full_mask(int n) { return n >= 64 ? ~0ULL : (1ULL << n) - 1; }

/// Coordinate-wise lattice operations on [0,1]^n.
inline Vec vmeet(const Vec& x, const Vec& y) { return x.min(y); }
inline Vec vjoin(const Vec& x, const Vec& y) { return x.max(y); }
inline Vec vminus(const Vec& x, const Vec& y) { return x - x.min(y); }

Vec indicator(Mask s, int n);
Mask support(const Vec& x, double tol = 1e-12);

struct GroundSet {
  int n = 0;
  explicit GroundSet(int n_) : n(n_) {
    if (n < 1) throw StructuralError("ground set must have n >= 1");
  }
};

struct DirectedEdge {
  int tail = 0, head = 0;
  double w = 0;
};

struct UndirectedEdge {
  int a = 0, b = 0;
  double w = 0;
};

/// A directed hyperedge (T, H, w) is cut by S iff S meets T and H is not
/// fully contained in S. T and H must be disjoint. |H| = 1 gives the usual
/// many-tails-one-head edge; |T| = |H| = 1 gives a plain arc.
struct DirectedHyperedge {
  Mask tails = 0, heads = 0;
  double w = 0;
};

/// Weighted coverage: item j (weight w_j >= 0) is covered when S intersects
/// coverers[j].
struct CoverageData {
  std::vector<double> item_weights;
  std::vector<Mask> coverers;
};

/// Non-negative submodular set function in one of five representations.
/// Structured variants evaluate in closed form at any n (<= 63); the explicit
/// table is the universal fallback for n <= 24.
class SubmodularFn {
 public:
  struct DirectedCut {
    std::vector<DirectedEdge> edges;
  };
  struct UndirectedCut {
    std::vector<UndirectedEdge> edges;
  };
  struct HyperDirectedCut {
    std::vector<DirectedHyperedge> edges;
  };
  struct Coverage {
    CoverageData data;
  };
  struct ExplicitTable {
    std::vector<double> values;  // 2^n entries, bitmask-indexed
  };

  static SubmodularFn directed_cut(int n, std::vector<DirectedEdge> edges);
  static SubmodularFn undirected_cut(int n, std::vector<UndirectedEdge> edges);
  static SubmodularFn hyper_directed_cut(int n, std::vector<DirectedHyperedge> edges);
  static SubmodularFn coverage(int n, CoverageData data);
  /// Audits non-negativity and submodularity of the table on construction
  /// (exhaustive for n <= 16, randomized spot-check above).
  static SubmodularFn table(int n, std::vector<double> values);

  int n() const { return n_; }
  double eval(Mask s) const;
  /// f(u|S) = f(S + u) - f(S). Requires u not in S.
  double marginal(int u, Mask s) const;

  /// Exact rebuild as an explicit table (n <= 24).
  SubmodularFn to_table() const;
  /// g(S) = f(N \ S). Structured for the cut variants, table fallback
  /// otherwise.
  SubmodularFn complement() const;

  bool is_directed_cut() const { return std::holds_alternative<DirectedCut>(rep_); }
  bool is_undirected_cut() const { return std::holds_alternative<UndirectedCut>(rep_); }
  bool is_table() const { return std::holds_alternative<ExplicitTable>(rep_); }
  const DirectedCut& as_directed_cut() const { return std::get<DirectedCut>(rep_); }
  const UndirectedCut& as_undirected_cut() const { return std::get<UndirectedCut>(rep_); }
  const HyperDirectedCut* as_hyper() const { return std::get_if<HyperDirectedCut>(&rep_); }
  const Coverage* as_coverage() const { return std::get_if<Coverage>(&rep_); }
  const ExplicitTable* as_explicit_table() const { return std::get_if<ExplicitTable>(&rep_); }
  std::string kind() const;

  /// Total weight of arcs leaving u (directed-cut variant only).
  double out_weight(int u) const;

  friend double multilinear_exact(const SubmodularFn& f, const Vec& x);
  friend Vec multilinear_grad(const SubmodularFn& f, const Vec& x);

 private:
  using Rep = std::variant<DirectedCut, UndirectedCut, HyperDirectedCut, Coverage, ExplicitTable>;
  SubmodularFn(int n, Rep rep) : n_(n), rep_(std::move(rep)) {}
  void check_element(int u) const;

  int n_ = 0;
  Rep rep_;
};

/// l(S) = sum of weights over S.
class LinearFn {
 public:
  LinearFn() = default;
  explicit LinearFn(Vec w) : w_(std::move(w)) {}
  static LinearFn zero(int n) { return LinearFn(Vec::Zero(n)); }

  int n() const { return static_cast<int>(w_.size()); }
  const Vec& weights() const { return w_; }
  double operator()(int u) const { return w_[u]; }
  double eval(Mask s) const;
  double dot(const Vec& x) const { return (w_ * x).sum(); }

  bool nonnegative() const { return (w_ >= 0.0).all(); }
  bool nonpositive() const { return (w_ <= 0.0).all(); }
  /// Elements with strictly positive weight (the N^+ / N^- split).
  Mask positive_support() const;
  LinearFn positive_part() const { return LinearFn(w_.max(0.0)); }
  LinearFn negative_part() const { return LinearFn(w_.min(0.0)); }
  LinearFn negated() const { return LinearFn(-w_); }

 private:
  Vec w_;
};

/// Exact multilinear extension F(x) = E[f(R(x))]. Closed forms for the
/// structured variants; subset-folding for tables (n <= 24).
double multilinear_exact(const SubmodularFn& f, const Vec& x);

/// Gradient of F at x; coordinate u equals F(x|x_u=1) - F(x|x_u=0).
Vec multilinear_grad(const SubmodularFn& f, const Vec& x);

struct SampledEstimate {
  double estimate = 0;
  double stderr_ = 0;
};

/// Monte-Carlo estimate of F(x) with the given sample count, deterministic
/// for a fixed seed.
SampledEstimate multilinear_sampled(const SubmodularFn& f, const Vec& x, int samples,
                                    std::uint64_t seed);

/// Independent Bernoulli draw R(x).
Mask sample_random_subset(const Vec& x, std::uint64_t seed);

/// (f, l) -> (g, -l) with g(S) = f(N \ S); applying twice is the identity.
std::pair<SubmodularFn, LinearFn> complement_transform(const SubmodularFn& f, const LinearFn& ell);

/// Exhaustive diminishing-returns audit, n <= 16.
bool is_submodular(const SubmodularFn& f, double tol = 1e-9);

}  // namespace regsm

#endif
