#include "regsm/matroid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "regsm/lp.hpp"

namespace regsm {

namespace {

void audit_explicit(int n, const std::vector<Mask>& sets) {
  if (n > 16) throw CapabilityError("explicit matroids limited to n <= 16");
  if (sets.empty()) throw StructuralError("independent family must be non-empty");
  std::vector<char> member(1ULL << n, 0);
  for (Mask s : sets) {
    if (s & ~full_mask(n)) throw StructuralError("independent set out of range");
    member[s] = 1;
  }
  if (!member[0]) throw StructuralError("independent family must contain the empty set");
  for (Mask s : sets)
    for (int u = 0; u < n; ++u)
      if (contains(s, u) && !member[s & ~(1ULL << u)])
        throw StructuralError("independent family is not downward closed");
  for (Mask a : sets)
    for (Mask b : sets) {
      if (popcount(a) >= popcount(b)) continue;
      bool extendable = false;
      Mask diff = b & ~a;
      for (int u = 0; u < n && !extendable; ++u)
        if (contains(diff, u) && member[a | (1ULL << u)]) extendable = true;
      if (!extendable) throw StructuralError("independent family violates the exchange axiom");
    }
}

std::vector<int> rank_table(int n, const std::vector<char>& member) {
  std::vector<int> rank(1ULL << n, 0);
  for (Mask s = 1; s < (1ULL << n); ++s) {
    if (member[s]) {
      rank[s] = popcount(s);
      continue;
    }
    int best = 0;
    for (int u = 0; u < n; ++u)
      if (contains(s, u)) best = std::max(best, rank[s & ~(1ULL << u)]);
    rank[s] = best;
  }
  return rank;
}

}  // namespace

Matroid Matroid::uniform(int n, int k) {
  GroundSet gs(n);
  if (k < 0) throw StructuralError("cardinality cap must be >= 0");
  return Matroid(n, Uniform{k});
}

Matroid Matroid::partition(int n, std::vector<Mask> blocks, std::vector<int> caps) {
  GroundSet gs(n);
  if (blocks.size() != caps.size()) throw StructuralError("one cap per block required");
  Mask seen = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i] == 0) throw StructuralError("empty partition block");
    if (blocks[i] & ~full_mask(n)) throw StructuralError("block out of range");
    if (blocks[i] & seen) throw StructuralError("partition blocks must be disjoint");
    if (caps[i] < 0) throw StructuralError("block cap must be >= 0");
    seen |= blocks[i];
  }
  if (seen != full_mask(n)) throw StructuralError("blocks must cover the ground set");
  return Matroid(n, Partition{std::move(blocks), std::move(caps)});
}

Matroid Matroid::explicit_family(int n, std::vector<Mask> independent) {
  audit_explicit(n, independent);
  Explicit e;
  e.sets = std::move(independent);
  std::sort(e.sets.begin(), e.sets.end());
  e.sets.erase(std::unique(e.sets.begin(), e.sets.end()), e.sets.end());
  e.member.assign(1ULL << n, 0);
  for (Mask s : e.sets) e.member[s] = 1;
  e.rank = rank_table(n, e.member);
  return Matroid(n, Rep(std::move(e)));
}

bool Matroid::is_independent(Mask s) const {
  if (s & ~full_mask(n_)) throw StructuralError("subset out of range");
  if (const auto* u = std::get_if<Uniform>(&rep_)) return popcount(s) <= u->k;
  if (const auto* p = std::get_if<Partition>(&rep_)) {
    for (size_t i = 0; i < p->blocks.size(); ++i)
      if (popcount(s & p->blocks[i]) > p->caps[i]) return false;
    return true;
  }
  return std::get<Explicit>(rep_).member[s] != 0;
}

int Matroid::rank(Mask s) const {
  if (const auto* u = std::get_if<Uniform>(&rep_)) return std::min(popcount(s), u->k);
  if (const auto* p = std::get_if<Partition>(&rep_)) {
    int r = 0;
    for (size_t i = 0; i < p->blocks.size(); ++i)
      r += std::min(popcount(s & p->blocks[i]), p->caps[i]);
    return r;
  }
  return std::get<Explicit>(rep_).rank[s];
}

std::string Matroid::kind() const {
  if (std::holds_alternative<Uniform>(rep_)) return "cardinality";
  if (std::holds_alternative<Partition>(rep_)) return "partition";
  return "explicit";
}

Polytope Polytope::cube(int n) { return Polytope(n, std::nullopt); }

Polytope Polytope::of_matroid(Matroid m) {
  int n = m.n();
  return Polytope(n, std::move(m));
}

Polytope Polytope::with_cut(Halfspace h) const {
  if (h.w.size() != n_) throw StructuralError("halfspace dimension mismatch");
  Polytope p = *this;
  p.cuts_.push_back(std::move(h));
  return p;
}

Polytope Polytope::scaled(double t) const {
  if (!(t > 0)) throw StructuralError("scale factor must be positive");
  Polytope p = *this;
  p.scale_ *= t;
  return p;
}

bool Polytope::member(const Vec& x, double tol) const {
  if (x.size() != n_) throw StructuralError("point dimension mismatch");
  Vec y = x / scale_;
  if ((y < -tol).any() || (y > 1 + tol).any()) return false;
  if (matroid_) {
    if (const auto* u = matroid_->as_uniform()) {
      if (y.sum() > u->k + tol) return false;
    } else if (const auto* p = matroid_->as_partition()) {
      for (size_t i = 0; i < p->blocks.size(); ++i) {
        double s = 0;
        for (int j = 0; j < n_; ++j)
          if (contains(p->blocks[i], j)) s += y[j];
        if (s > p->caps[i] + tol) return false;
      }
    } else {
      const auto* e = matroid_->as_explicit();
      // x(A) <= rank(A) for every subset, sums built incrementally.
      std::vector<double> sums(1ULL << n_, 0.0);
      for (Mask a = 1; a < (1ULL << n_); ++a) {
        int low = __builtin_ctzll(a);
        sums[a] = sums[a & (a - 1)] + y[low];
        if (sums[a] > e->rank[a] + tol) return false;
      }
    }
  }
  // Scaling t * (P n {<w,x> >= c}) scales the cut threshold too.
  for (const auto& h : cuts_)
    if ((h.w * x).sum() < h.c * scale_ - tol) return false;
  return true;
}

std::optional<Vec> Polytope::maximize_linear(const Vec& w) const {
  if (w.size() != n_) throw StructuralError("weight dimension mismatch");
  if (cuts_.empty()) {
    Vec x = Vec::Zero(n_);
    if (!matroid_) {
      for (int u = 0; u < n_; ++u)
        if (w[u] > 0) x[u] = 1;
      return Vec(scale_ * x);
    }
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] > w[b]; });
    Mask s = 0;
    for (int u : order) {
      if (w[u] <= 0) break;
      if (matroid_->is_independent(s | (1ULL << u))) {
        s |= 1ULL << u;
        x[u] = 1;
      }
    }
    return Vec(scale_ * x);
  }

  // Halfspace cuts present: solve the explicit LP description.
  LinearProgram lp;
  int nvars = n_;
  const Matroid::Explicit* ex = matroid_ ? matroid_->as_explicit() : nullptr;
  int nsets = ex ? static_cast<int>(ex->sets.size()) : 0;
  nvars += nsets;
  lp.objective = Eigen::VectorXd::Zero(nvars);
  for (int u = 0; u < n_; ++u) lp.objective[u] = w[u];
  lp.bounds.assign(nvars, {0.0, 1.0});
  auto row = [&](auto&& fill, LinearProgram::Rel rel, double b) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(nvars);
    fill(a);
    lp.add_row(std::move(a), rel, b);
  };
  if (matroid_) {
    if (const auto* u = matroid_->as_uniform()) {
      row([&](auto& a) { a.head(n_).setOnes(); }, LinearProgram::Rel::Le, u->k);
    } else if (const auto* p = matroid_->as_partition()) {
      for (size_t i = 0; i < p->blocks.size(); ++i)
        row(
            [&](auto& a) {
              for (int j = 0; j < n_; ++j)
                if (contains(p->blocks[i], j)) a[j] = 1;
            },
            LinearProgram::Rel::Le, p->caps[i]);
    } else {
      // x is a convex combination of the independent-set vertices.
      for (int u = 0; u < n_; ++u)
        row(
            [&](auto& a) {
              a[u] = 1;
              for (int s = 0; s < nsets; ++s)
                if (contains(ex->sets[s], u)) a[n_ + s] = -1;
            },
            LinearProgram::Rel::Eq, 0);
      row([&](auto& a) { a.tail(nsets).setOnes(); }, LinearProgram::Rel::Eq, 1);
    }
  }
  for (const auto& h : cuts_)
    row([&](auto& a) { for (int u = 0; u < n_; ++u) a[u] = h.w[u]; }, LinearProgram::Rel::Ge,
        h.c);
  LpResult res = solve(lp);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  Vec x(n_);
  for (int u = 0; u < n_; ++u) x[u] = std::clamp(res.x[u], 0.0, 1.0);
  return Vec(scale_ * x);
}

std::pair<double, double> Polytope::pair_move_range(const Vec& x, int u, int v) const {
  Vec y = x / scale_;
  double up = std::min(1 - y[u], y[v]);
  double down = std::min(y[u], 1 - y[v]);
  if (matroid_) {
    if (const auto* e = matroid_->as_explicit()) {
      std::vector<double> sums(1ULL << n_, 0.0);
      for (Mask a = 1; a < (1ULL << n_); ++a) {
        int low = __builtin_ctzll(a);
        sums[a] = sums[a & (a - 1)] + y[low];
        bool has_u = contains(a, u), has_v = contains(a, v);
        if (has_u && !has_v) up = std::min(up, e->rank[a] - sums[a]);
        if (has_v && !has_u) down = std::min(down, e->rank[a] - sums[a]);
      }
    } else if (const auto* p = matroid_->as_partition()) {
      // Moves across blocks change block sums.
      for (size_t i = 0; i < p->blocks.size(); ++i) {
        bool has_u = contains(p->blocks[i], u), has_v = contains(p->blocks[i], v);
        if (has_u == has_v) continue;
        double s = 0;
        for (int j = 0; j < n_; ++j)
          if (contains(p->blocks[i], j)) s += y[j];
        if (has_u) up = std::min(up, p->caps[i] - s);
        if (has_v) down = std::min(down, p->caps[i] - s);
      }
    }
    // Uniform: e_u - e_v keeps the total fixed, cube bounds already applied.
  }
  for (const auto& h : cuts_) {
    double slack = (h.w * x).sum() - h.c * scale_;
    double d = h.w[u] - h.w[v];
    if (d < -1e-15) up = std::min(up, slack / (-d) / scale_);
    if (d > 1e-15) down = std::min(down, slack / d / scale_);
  }
  return {scale_ * std::max(0.0, down), scale_ * std::max(0.0, up)};
}

double Polytope::raise_room(const Vec& x, int u) const {
  Vec y = x / scale_;
  double room = 1 - y[u];
  if (matroid_) {
    if (const auto* un = matroid_->as_uniform()) {
      room = std::min(room, un->k - y.sum());
    } else if (const auto* p = matroid_->as_partition()) {
      for (size_t i = 0; i < p->blocks.size(); ++i) {
        if (!contains(p->blocks[i], u)) continue;
        double s = 0;
        for (int j = 0; j < n_; ++j)
          if (contains(p->blocks[i], j)) s += y[j];
        room = std::min(room, p->caps[i] - s);
      }
    } else {
      const auto* e = matroid_->as_explicit();
      std::vector<double> sums(1ULL << n_, 0.0);
      for (Mask a = 1; a < (1ULL << n_); ++a) {
        int low = __builtin_ctzll(a);
        sums[a] = sums[a & (a - 1)] + y[low];
        if (contains(a, u)) room = std::min(room, e->rank[a] - sums[a]);
      }
    }
  }
  for (const auto& h : cuts_) {
    if (h.w[u] >= -1e-15) continue;
    double slack = (h.w * x).sum() - h.c * scale_;
    room = std::min(room, slack / (-h.w[u]) / scale_);
  }
  return scale_ * std::max(0.0, room);
}

namespace {

constexpr double kTieTol = 1e-12;
constexpr double kFracTol = 1e-9;

bool fractional(double v) { return v > kFracTol && v < 1 - kFracTol; }

double objective(const SubmodularFn& f, const LinearFn& ell, const Vec& x) {
  return multilinear_exact(f, x) + ell.dot(x);
}

void snap(Vec& x) {
  for (int u = 0; u < x.size(); ++u) {
    if (x[u] < kFracTol) x[u] = 0;
    if (x[u] > 1 - kFracTol) x[u] = 1;
  }
}

struct Rounder {
  const Polytope& p;
  const SubmodularFn& f;
  const LinearFn& ell;
  std::mt19937_64 rng;
  Vec x;

  bool coin() { return (rng() >> 20) & 1; }

  // Applies the better of two candidate points. Both moves keep feasibility
  // and the objective is never decreased (single moves are affine, pair
  // moves convex along e_u - e_v).
  void take_better(Vec a, Vec b) {
    double va = objective(f, ell, a), vb = objective(f, ell, b);
    if (std::abs(va - vb) <= kTieTol)
      x = coin() ? std::move(a) : std::move(b);
    else
      x = va > vb ? std::move(a) : std::move(b);
    snap(x);
  }

  void single_move(int u, double room) {
    Vec dn = x, up = x;
    dn[u] = 0;
    up[u] += room;
    take_better(std::move(dn), std::move(up));
  }

  void pair_move(int u, int v, double eps_dn, double eps_up) {
    Vec a = x, b = x;
    a[u] += eps_up;
    a[v] -= eps_up;
    b[u] -= eps_dn;
    b[v] += eps_dn;
    take_better(std::move(a), std::move(b));
  }

  int first_fractional() const {
    for (int j = 0; j < x.size(); ++j)
      if (fractional(x[j])) return j;
    return -1;
  }

  // Cube / uniform / partition: blocks are disjoint, so a tight block always
  // holds a second fractional coordinate and within-block pair moves are
  // limited only by the cube bounds.
  void round_blocks(const std::vector<Mask>& blocks, const std::vector<int>& caps) {
    int guard = 4 * static_cast<int>(x.size()) * static_cast<int>(x.size()) + 16;
    while (true) {
      if (--guard < 0) throw InvariantError("pipage failed to terminate");
      int u = first_fractional();
      if (u < 0) return;
      int bi = -1;
      for (size_t i = 0; i < blocks.size(); ++i)
        if (contains(blocks[i], u)) bi = static_cast<int>(i);
      double slack = kInf;
      if (bi >= 0) {
        double s = 0;
        for (int j = 0; j < x.size(); ++j)
          if (contains(blocks[bi], j)) s += x[j];
        slack = caps[bi] - s;
      }
      if (bi >= 0 && slack <= kFracTol) {
        int v = -1;
        for (int j = 0; j < x.size(); ++j)
          if (j != u && contains(blocks[bi], j) && fractional(x[j])) {
            v = j;
            break;
          }
        if (v < 0) throw InvariantError("tight block with a single fractional coordinate");
        pair_move(u, v, std::min(x[u], 1 - x[v]), std::min(1 - x[u], x[v]));
      } else {
        single_move(u, std::min(1 - x[u], slack));
      }
    }
  }

  // Explicit matroid: walk minimal tight sets using the precomputed rank
  // table.
  void round_explicit(const Matroid::Explicit& e) {
    const int n = static_cast<int>(x.size());
    int guard = 8 * n * n + 16;
    while (true) {
      if (--guard < 0) throw InvariantError("pipage failed to terminate");
      int u = first_fractional();
      if (u < 0) return;
      // Minimal tight set containing u = intersection of all tight sets
      // containing u (tight sets form a lattice).
      std::vector<double> sums(1ULL << n, 0.0);
      Mask tmin = 0;
      bool any_tight = false;
      double room = 1 - x[u];
      for (Mask a = 1; a < (1ULL << n); ++a) {
        int low = __builtin_ctzll(a);
        sums[a] = sums[a & (a - 1)] + x[low];
        if (!contains(a, u)) continue;
        double slack = e.rank[a] - sums[a];
        room = std::min(room, slack);
        if (slack <= 1e-9) {
          tmin = any_tight ? (tmin & a) : a;
          any_tight = true;
        }
      }
      if (!any_tight) {
        single_move(u, std::max(room, 0.0));
        continue;
      }
      int v = -1;
      for (int j = 0; j < n; ++j)
        if (j != u && contains(tmin, j) && fractional(x[j])) {
          v = j;
          break;
        }
      if (v < 0) throw InvariantError("tight set with a single fractional coordinate");
      // No tight set separates u from v (both sit in the minimal tight set),
      // so both directions have positive range.
      double up = std::min(1 - x[u], x[v]);
      double dn = std::min(x[u], 1 - x[v]);
      for (Mask a = 1; a < (1ULL << n); ++a) {
        bool has_u = contains(a, u), has_v = contains(a, v);
        if (has_u == has_v) continue;
        double slack = std::max(0.0, e.rank[a] - sums[a]);
        if (has_u)
          up = std::min(up, slack);
        else
          dn = std::min(dn, slack);
      }
      pair_move(u, v, dn, up);
    }
  }
};

}  // namespace

Mask pipage_round(const Polytope& p, const SubmodularFn& f, const LinearFn& ell, const Vec& x0,
                  std::uint64_t seed) {
  if (!p.pure()) throw ContractError("pipage rounding requires the original matroid polytope");
  if (!p.member(x0, 1e-7)) throw ContractError("pipage input must lie in the polytope");
  Rounder r{p, f, ell, std::mt19937_64(seed), x0};
  snap(r.x);
  const int n = p.n();
  if (!p.matroid()) {
    r.round_blocks({}, {});
  } else if (const auto* u = p.matroid()->as_uniform()) {
    r.round_blocks({full_mask(n)}, {u->k});
  } else if (const auto* pa = p.matroid()->as_partition()) {
    r.round_blocks(pa->blocks, pa->caps);
  } else {
    r.round_explicit(*p.matroid()->as_explicit());
  }
  Mask s = support(r.x, 0.5);
  if (p.matroid() && !p.matroid()->is_independent(s))
    throw InvariantError("pipage produced a dependent set");
  return s;
}

Mask sample_round(const Vec& x, std::uint64_t seed) { return sample_random_subset(x, seed); }

}  // namespace regsm
