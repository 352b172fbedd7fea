#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "regsm/bench.hpp"
#include "regsm/doublegreedy.hpp"

using namespace regsm;

namespace {

Instance random_nonneg(int n, std::uint64_t seed) {
  RandomInstanceParams params;
  params.n = n;
  params.seed = seed;
  params.ellmin = 0;
  params.ellmax = 0.6;
  return random_dicut(params);
}

// Original double greedy, written independently as a test oracle; records
// the per-step decisions so traces can be compared, not just final sets.
std::pair<Mask, std::vector<bool>> reference_dg(const SubmodularFn& f, const LinearFn& ell,
                                                const std::vector<int>& order) {
  Mask x = 0, y = full_mask(f.n());
  std::vector<bool> decisions;
  for (int u : order) {
    double gx = f.eval(x | (1ULL << u)) + ell.eval(x | (1ULL << u)) - f.eval(x) - ell.eval(x);
    Mask ym = y & ~(1ULL << u);
    double gy = f.eval(y) + ell.eval(y) - f.eval(ym) - ell.eval(ym);
    bool keep = gx >= -gy;
    decisions.push_back(keep);
    if (keep)
      x |= 1ULL << u;
    else
      y = ym;
  }
  return {x, decisions};
}

}  // namespace

TEST_CASE("zero f keeps everything when l is positive") {
  auto f = SubmodularFn::table(4, std::vector<double>(16, 0.0));
  LinearFn ell(Vec::Constant(4, 0.5));
  auto [set, trace] = deterministic_dg(f, ell, 1.0, default_order(4));
  CHECK(set == 0b1111);
  auto [rset, rtrace] = randomized_dg(f, ell, default_order(4), 3);
  CHECK(rset == 0b1111);
}

TEST_CASE("r below one is rejected") {
  auto f = SubmodularFn::table(2, std::vector<double>(4, 0.0));
  CHECK_THROWS_AS(deterministic_dg(f, LinearFn::zero(2), 0.5, default_order(2)), ContractError);
}

TEST_CASE("the two-arc instance forces value r + eps/2") {
  double r = 2.0, eps = 0.1;
  Instance inst = dg_tight_det(r, eps);
  auto [set, trace] = deterministic_dg(inst.f, inst.ell, r, {0, 1});
  CHECK(contains(set, 0));
  CHECK(inst.value(set) == doctest::Approx(r + eps / 2));
}

TEST_CASE("deterministic guarantees hold exactly on random instances") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 4 + static_cast<int>(rng() % 7);
    Instance inst = random_nonneg(n, rng());
    for (double r : {1.0, 2.0, 4.0}) {
      auto [set, trace] = deterministic_dg(inst.f, inst.ell, r, default_order(n));
      double value = inst.value(set);
      double denom = r + 1 + 1 / r;
      double target =
          brute_force_opt(inst, 1 / denom, (r + 1) / denom).value;
      CHECK(value >= target - 1e-9);
      double ell_target = brute_force_opt(inst, 0, 1).value;
      CHECK(value >= ell_target - 1e-9);
    }
  }
}

TEST_CASE("per-step inequalities of the threshold analysis") {
  // Eq. invariants: g(u|X) - g(u|Y\{u}) >= 0 at every step, and the OPT
  // potential drop is bounded by the weighted primal gains.
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);
    Instance inst = random_nonneg(n, rng());
    double r = 1.0 + (trial % 3);
    Mask opt = brute_force_opt(inst, 1, 1).set;
    auto [set, trace] = deterministic_dg(inst.f, inst.ell, r, default_order(n));
    Mask x = 0, y = full_mask(n);
    auto g = [&](Mask s) { return inst.value(s); };
    for (const auto& st : trace.steps) {
      CHECK(st.gain_x - st.gain_y >= -1e-9);
      Mask x_next = st.took ? (x | (1ULL << st.u)) : x;
      Mask y_next = st.took ? y : (y & ~(1ULL << st.u));
      Mask opt_prev = (opt | x) & y;
      Mask opt_next = (opt | x_next) & y_next;
      double lhs = g(opt_prev) - g(opt_next);
      double rhs = (g(x_next) - g(x)) / r + r * (g(y_next) - g(y));
      CHECK(lhs <= rhs + 1e-9);
      x = x_next;
      y = y_next;
    }
    CHECK(x == set);
  }
}

TEST_CASE("r = 1 reproduces the original double greedy step by step") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    Instance inst = random_nonneg(n, rng());
    auto [set, trace] = deterministic_dg(inst.f, inst.ell, 1.0, default_order(n));
    auto [want, decisions] = reference_dg(inst.f, inst.ell, default_order(n));
    CHECK(set == want);
    REQUIRE(trace.steps.size() == decisions.size());
    for (size_t i = 0; i < decisions.size(); ++i) CHECK(trace.steps[i].took == decisions[i]);
  }
}

TEST_CASE("randomized single-arc trace") {
  auto f = SubmodularFn::directed_cut(2, {{0, 1, 1.0}});
  auto [set, trace] = randomized_dg(f, LinearFn::zero(2), {0, 1}, 11);
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].p_take == doctest::Approx(1.0));  // a = 1, b = 0
  CHECK(trace.steps[1].p_take == doctest::Approx(0.0));  // tail kept, head dropped
  CHECK(set == 0b01);
  CHECK(f.eval(set) == doctest::Approx(1.0));
}

TEST_CASE("exact expectation equals the deterministic run when branchless") {
  auto f = SubmodularFn::directed_cut(3, {{0, 1, 1.0}, {1, 2, 0.5}});
  LinearFn ell = LinearFn::zero(3);
  double expect = exact_dg_expectation(f, ell, default_order(3));
  // Every step has a = 0 or b = 0, so one path carries all probability.
  auto [set, trace] = randomized_dg(f, ell, default_order(3), 5);
  for (const auto& st : trace.steps) CHECK((st.p_take == 0.0 || st.p_take == 1.0));
  CHECK(expect == doctest::Approx(f.eval(set)));
}

TEST_CASE("empirical mean approaches the exact expectation") {
  Instance inst = random_nonneg(10, 777);
  double exact = exact_dg_expectation(inst.f, inst.ell, default_order(10));
  double sum = 0, sumsq = 0;
  const int runs = 10000;
  for (int i = 0; i < runs; ++i) {
    auto [set, trace] = randomized_dg(inst.f, inst.ell, default_order(10), 1000 + i);
    double v = inst.value(set);
    sum += v;
    sumsq += v * v;
  }
  double mean = sum / runs;
  double sd = std::sqrt((sumsq / runs - mean * mean) / (runs - 1));
  CHECK(std::abs(mean - exact) <= 3 * sd + 1e-12);
}

TEST_CASE("randomized guarantee holds exactly in expectation") {
  std::mt19937_64 rng(999);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 4 + static_cast<int>(rng() % 7);
    Instance inst = random_nonneg(n, rng());
    double exact = exact_dg_expectation(inst.f, inst.ell, default_order(n));
    for (double r : {1.0, 2.0, 4.0, 8.0}) {
      double denom = r + 2 + 1 / r;
      double target = brute_force_opt(inst, 2 / denom, (r + 2) / denom).value;
      CHECK(exact >= target - 1e-9);
    }
  }
}

TEST_CASE("star expectation evaluator matches the generic tree") {
  for (int n : {6, 10}) {
    for (double r : {2.0, 4.0}) {
      Instance tight = dg_tight_rand(n, r);
      CHECK(dg_star_exact_expectation(n, r, true) ==
            doctest::Approx(exact_dg_expectation(tight.f, tight.ell, default_order(n)))
                .epsilon(1e-10));
      Instance bad = dg_rand_bad(n, r);
      CHECK(dg_star_exact_expectation(n, r, false) ==
            doctest::Approx(exact_dg_expectation(bad.f, bad.ell, default_order(n)))
                .epsilon(1e-10));
    }
  }
}

TEST_CASE("the star family certifies the randomized shortfall") {
  double r = 4.0;
  double denom = r + 2 + 1 / r;
  double beta = (r + 2) / denom;
  // At n = 41 the expectation sits within 0.05 * max f of the guarantee
  // floor r^2/(r+1); the full strict form with the alpha slack needs the
  // binomial concentration and holds from a few hundred elements on.
  {
    int n = 41;
    double expect = dg_star_exact_expectation(n, r, true);
    Instance inst = dg_tight_rand(n, r);
    CHECK(inst.f.eval(1ULL << (n - 1)) == doctest::Approx(1.0));
    double f_max = r;  // all leaves kept, hub out
    CHECK(inst.f.eval(full_mask(n) & ~(1ULL << (n - 1))) == doctest::Approx(f_max));
    CHECK(expect >= r * r / (r + 1) - 1e-9);  // the r^2-parameter guarantee floor
    CHECK(expect < r * r / (r + 1) + 0.05 * f_max);
  }
  {
    int n = 401;
    double expect = dg_star_exact_expectation(n, r, true);
    double alpha = 2 / denom + 0.05;
    CHECK(expect < alpha * 1.0 + beta * (r - 1.0));
  }
}

TEST_CASE("oblivious dicut") {
  RandomInstanceParams params;
  params.n = 8;
  params.seed = 5;
  params.ellmin = -0.4;
  params.ellmax = 0.4;
  Instance inst = random_dicut(params);
  SUBCASE("beta = 0 returns nothing") {
    CHECK(oblivious_dicut(inst.f, inst.ell, 0.0, 1) == 0);
  }
  SUBCASE("beta = 1 keeps exactly the l >= 0 vertices") {
    Mask s = oblivious_dicut(inst.f, inst.ell, 1.0, 1);
    Mask want = 0;
    for (int v = 0; v < 8; ++v)
      if (inst.ell(v) >= 0) want |= 1ULL << v;
    CHECK(s == want);
    CHECK(oblivious_dicut_expectation(inst.f, inst.ell, 1.0) ==
          doctest::Approx(inst.value(s)));
  }
  SUBCASE("expectation guarantee across random digraphs") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
      params.n = 5 + static_cast<int>(rng() % 6);
      params.seed = rng();
      Instance g = random_dicut(params);
      for (double beta : {0.3, 0.5, 0.7}) {
        double expect = oblivious_dicut_expectation(g.f, g.ell, beta);
        double target = brute_force_opt(g, beta * (1 - beta), beta).value;
        CHECK(expect >= target - 1e-9);
      }
    }
  }
  SUBCASE("non-dicut input is rejected") {
    auto cut = SubmodularFn::undirected_cut(2, {{0, 1, 1.0}});
    CHECK_THROWS_AS(oblivious_dicut(cut, LinearFn::zero(2), 0.5, 1), ContractError);
  }
}
