#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "regsm/bench.hpp"

using namespace regsm;

TEST_CASE("brute force basics") {
  // With f = 0 the maximizer collects the positive weights.
  auto f = SubmodularFn::table(4, std::vector<double>(16, 0.0));
  Vec ell(4);
  ell << 1, -2, 3, -0.5;
  BruteResult r = brute_force_opt(f, LinearFn(ell), std::nullopt, 1, 1);
  CHECK(r.set == 0b0101);
  CHECK(r.value == doctest::Approx(4.0));
}

TEST_CASE("brute force respects matroid constraints") {
  Instance arcs = csm_dicut_arcs(3);
  BruteResult r = brute_force_opt(arcs, 1, 1);
  CHECK(arcs.constraint->is_independent(r.set));
  // One tail plus the other two heads: f = 1, l = 2/3.
  CHECK(r.value == doctest::Approx(1.0 + 2.0 / 3));
}

TEST_CASE("cardinality-constrained optimum of the copied construction is 1") {
  // w = t + 1 allows {a, b_{1,1..t}}, which cuts the pair edge and one
  // hyperedge fully.
  int k = 2, t = 2;
  Instance inst = gharan_vondrak(k, t, 0.3513);
  int n = inst.n();
  Matroid card = Matroid::uniform(n, t + 1);
  BruteResult r = brute_force_opt(inst.f, inst.ell, card, 1, 0);
  CHECK(r.value == doctest::Approx(1.0));
  Mask witness = 1ULL;  // a
  for (int j = 0; j < t; ++j) witness |= 1ULL << (2 + k * t + j);
  CHECK(inst.f.eval(witness) == doctest::Approx(1.0));
}

TEST_CASE("brute force agrees with an independent bitmask evaluator") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    RandomInstanceParams params;
    params.n = 10;
    params.seed = rng();
    params.ellmin = -0.5;
    params.ellmax = 0.5;
    Instance inst = random_dicut(params);
    BruteResult r = brute_force_opt(inst, 1, 1);
    // Second implementation: per-vertex outgoing masks and popcount math.
    const auto& edges = inst.f.as_directed_cut().edges;
    double best = -1e300;
    Mask best_set = 0;
    for (Mask s = 0; s < (1ULL << 10); ++s) {
      double v = inst.ell.eval(s);
      for (const auto& e : edges)
        v += (contains(s, e.tail) && !contains(s, e.head)) ? e.w : 0;
      if (v > best) {
        best = v;
        best_set = s;
      }
    }
    CHECK(r.value == doctest::Approx(best).epsilon(1e-12));
    CHECK(r.set == best_set);
  }
}

TEST_CASE("tight two-element instance") {
  Instance inst = dg_tight_det(2.0, 0.1);
  CHECK(inst.f.eval(0b10) == doctest::Approx(1.0));
  CHECK(inst.ell.eval(0b10) == doctest::Approx(2.0));
  CHECK(inst.f.eval(0b01) == doctest::Approx(2.05));
  CHECK(brute_force_opt(inst, 1, 1).value == doctest::Approx(3.0));
}

TEST_CASE("star instances match their closed-form structure") {
  Instance inst = dg_tight_rand(5, 3.0);
  // f({hub}) = 1: all four outgoing arcs of weight 1/(n-1) are cut.
  CHECK(inst.f.eval(1ULL << 4) == doctest::Approx(1.0));
  CHECK(inst.ell.eval(1ULL << 4) == doctest::Approx(2.0));
  Instance bad = dg_rand_bad(5, 3.0);
  CHECK(bad.ell.eval(0b1111) == doctest::Approx(4 * (1 - 3.0) / 4));
  CHECK(bad.ell.eval(1ULL << 4) == 0.0);
}

TEST_CASE("online adversary pair shares f and splits on l") {
  auto [keep, drop] = online_bad(0.4);
  CHECK(keep.f.eval(0b01) == doctest::Approx(0.2));
  CHECK(keep.f.eval(0b10) == doctest::Approx(1.0));
  CHECK(keep.ell.eval(0b10) == 0.0);
  CHECK(drop.ell.eval(0b10) == doctest::Approx(-1.0));
}

TEST_CASE("generator sanity: non-negative everywhere") {
  for (const Instance& inst :
       {gharan_vondrak(2, 2, 0.3513), hyperedge_0408(3), csm_dicut_arcs(3), dg_tight_rand(6, 2)}) {
    if (inst.n() > 12) continue;
    for (Mask s = 0; s < (1ULL << inst.n()); ++s) CHECK(inst.f.eval(s) >= 0);
  }
}

TEST_CASE("sanity upper bound: algorithms cannot beat the oracle") {
  RandomInstanceParams params;
  params.n = 8;
  params.seed = 66;
  Instance inst = random_dicut(params);
  BruteResult opt = brute_force_opt(inst, 1, 1);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    Mask s = rng() & full_mask(8);
    CHECK(inst.value(s) <= opt.value + 1e-12);
  }
}
