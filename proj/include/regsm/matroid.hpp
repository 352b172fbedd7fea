#ifndef REGSM_MATROID_HPP
#define REGSM_MATROID_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "regsm/core.hpp"

namespace regsm {

/// Uniform, partition, or explicitly-listed matroid. Explicit families are
/// audited on construction (downward closure + exchange axiom, n <= 16).
class Matroid {
 public:
  struct Uniform {
    int k = 0;
  };
  struct Partition {
    std::vector<Mask> blocks;
    std::vector<int> caps;
  };
  struct Explicit {
    std::vector<Mask> sets;       // the independent family
    std::vector<char> member;     // bitset over 2^n
    std::vector<int> rank;        // rank of every subset
  };

  static Matroid uniform(int n, int k);
  static Matroid partition(int n, std::vector<Mask> blocks, std::vector<int> caps);
  static Matroid explicit_family(int n, std::vector<Mask> independent);

  int n() const { return n_; }
  bool is_independent(Mask s) const;
  int rank(Mask s) const;
  std::string kind() const;

  const Uniform* as_uniform() const { return std::get_if<Uniform>(&rep_); }
  const Partition* as_partition() const { return std::get_if<Partition>(&rep_); }
  const Explicit* as_explicit() const { return std::get_if<Explicit>(&rep_); }

 private:
  using Rep = std::variant<Uniform, Partition, Explicit>;
  Matroid(int n, Rep rep) : n_(n), rep_(std::move(rep)) {}

  int n_ = 0;
  Rep rep_;
};

/// Halfspace {x : <w,x> >= c}; used for the guessing-step intersections.
struct Halfspace {
  Vec w;
  double c = 0;
};

/// The unit cube or a matroid polytope, optionally intersected with
/// halfspaces and scaled by t. Down-closed whenever the cut list is empty.
class Polytope {
 public:
  static Polytope cube(int n);
  static Polytope of_matroid(Matroid m);

  Polytope with_cut(Halfspace h) const;
  Polytope scaled(double t) const;

  int n() const { return n_; }
  double scale() const { return scale_; }
  const std::optional<Matroid>& matroid() const { return matroid_; }
  const std::vector<Halfspace>& cuts() const { return cuts_; }
  bool pure() const { return cuts_.empty() && scale_ == 1.0; }

  /// argmax <w,x> over the polytope; nullopt when the cuts make it empty.
  /// Pure matroid polytopes use the greedy algorithm and return a 0/1 vertex.
  std::optional<Vec> maximize_linear(const Vec& w) const;

  bool member(const Vec& x, double tol = 1e-9) const;

  /// Feasible range for x + eps * (e_u - e_v) (pair move inside the base
  /// polytope, cuts ignored). Used by pipage and local search.
  std::pair<double, double> pair_move_range(const Vec& x, int u, int v) const;
  /// Largest eps >= 0 with x + eps * e_u feasible for the base polytope.
  double raise_room(const Vec& x, int u) const;

 private:
  Polytope(int n, std::optional<Matroid> m) : n_(n), matroid_(std::move(m)) {}

  int n_ = 0;
  std::optional<Matroid> matroid_;  // nullopt = cube
  std::vector<Halfspace> cuts_;
  double scale_ = 1.0;
};

/// Rounds x (a point of the pure matroid polytope / cube) to an independent
/// set via pipage moves that never decrease F + L, evaluated exactly. The
/// seed only breaks ties.
Mask pipage_round(const Polytope& p, const SubmodularFn& f, const LinearFn& ell, const Vec& x,
                  std::uint64_t seed);

/// Independent per-coordinate Bernoulli rounding.
Mask sample_round(const Vec& x, std::uint64_t seed);

}  // namespace regsm

#endif
