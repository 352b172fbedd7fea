#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "regsm/bench.hpp"
#include "regsm/core.hpp"

using namespace regsm;

namespace {

Vec vec_of(std::initializer_list<double> vals) {
  Vec v(static_cast<int>(vals.size()));
  int i = 0;
  for (double x : vals) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("directed cut evaluation") {
  auto f = SubmodularFn::directed_cut(2, {{0, 1, 0.3513}});
  CHECK(f.eval(0b01) == doctest::Approx(0.3513));
  CHECK(f.eval(0b10) == 0.0);
  CHECK(f.eval(0b11) == 0.0);
  CHECK_THROWS_AS(f.eval(0b100), StructuralError);
}

TEST_CASE("undirected cut evaluation") {
  auto f = SubmodularFn::undirected_cut(2, {{0, 1, 1.0}});
  CHECK(f.eval(0b11) == 0.0);
  CHECK(f.eval(0b01) == 1.0);
}

TEST_CASE("hyperedge instance from the cardinality construction") {
  // kappa = 0.3513, k = 3; S = {a, b_1} cuts the undirected pair and the
  // b-hyperedge: (1 - kappa) + kappa = 1.
  Instance inst = gharan_vondrak(3, 1, 0.3513);
  Mask s = (1ULL << 0) | (1ULL << (2 + 3));
  CHECK(inst.f.eval(s) == doctest::Approx(1.0));
}

TEST_CASE("marginals") {
  auto zero = SubmodularFn::table(3, std::vector<double>(8, 0.0));
  CHECK(zero.marginal(1, 0b001) == 0.0);
  auto f = SubmodularFn::directed_cut(2, {{0, 1, 2.0}});
  CHECK(f.marginal(0, 0) == doctest::Approx(2.0));
  CHECK_THROWS_AS(f.marginal(0, 0b01), ContractError);

  Instance inst = gharan_vondrak(3, 1, 0.3513);
  auto table = inst.f.to_table();
  Mask b1 = 1ULL << (2 + 3);
  CHECK(table.marginal(0, b1) ==
        doctest::Approx(table.eval(b1 | 1) - table.eval(b1)));
}

TEST_CASE("table audit rejects non-submodular data") {
  // f({0}) = f({1}) = 0 but f({0,1}) = 1 is supermodular.
  CHECK_THROWS_AS(SubmodularFn::table(2, {0, 0, 0, 1}), StructuralError);
  CHECK_THROWS_AS(SubmodularFn::table(2, {0, -1, 0, 0}), StructuralError);
}

TEST_CASE("multilinear extension equals f on vertices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    RandomInstanceParams params;
    params.n = 6;
    params.seed = rng();
    Instance inst = trial % 2 ? random_dicut(params) : random_cut(params);
    Mask s = rng() & full_mask(params.n);
    CHECK(multilinear_exact(inst.f, indicator(s, params.n)) ==
          doctest::Approx(inst.f.eval(s)).epsilon(1e-9));
  }
}

TEST_CASE("multilinear extension is exhaustively an extension for n <= 12") {
  RandomInstanceParams params;
  params.n = 12;
  params.seed = 99;
  Instance inst = random_dicut(params);
  auto table = inst.f.to_table();
  for (Mask s = 0; s < (1ULL << 12); ++s) {
    double fv = inst.f.eval(s);
    CHECK(multilinear_exact(table, indicator(s, 12)) == doctest::Approx(fv).epsilon(1e-9));
  }
}

TEST_CASE("multilinear value matches the symmetric closed form") {
  // Symmetric point of the two-hyperedge instance: x_a = x_b = q, tails at
  // p/k; F = (1-kappa) 2q(1-q) + 2 kappa (1-q)(1-(1-p/k)^k).
  double kappa = 0.3513;
  for (int k : {2, 3}) {
    Instance inst = gharan_vondrak(k, 1, kappa);
    for (double q : {0.0, 0.25, 0.5, 1.0}) {
      for (double p : {0.0, 0.3, 0.9, 1.2}) {
        Vec x = Vec::Zero(inst.n());
        x[0] = x[1] = q;
        for (int i = 0; i < 2 * k; ++i) x[2 + i] = p / k;
        double expect = (1 - kappa) * 2 * q * (1 - q) +
                        kappa * 2 * (1 - q) * (1 - std::pow(1 - p / k, k));
        CHECK(multilinear_exact(inst.f, x) == doctest::Approx(expect).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("multilinear extension is affine per coordinate") {
  RandomInstanceParams params;
  params.n = 7;
  params.seed = 3;
  Instance inst = random_coverage(params);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    Vec x(7);
    for (int u = 0; u < 7; ++u) x[u] = unif(rng);
    for (int u = 0; u < 7; ++u) {
      Vec lo = x, mid = x, hi = x;
      lo[u] = 0;
      mid[u] = 0.5;
      hi[u] = 1;
      double flo = multilinear_exact(inst.f, lo);
      double fhi = multilinear_exact(inst.f, hi);
      CHECK(multilinear_exact(inst.f, mid) == doctest::Approx((flo + fhi) / 2).epsilon(1e-9));
    }
  }
}

TEST_CASE("gradient matches the two-point rule") {
  RandomInstanceParams params;
  params.n = 6;
  params.seed = 17;
  std::vector<SubmodularFn> fns = {random_dicut(params).f, random_cut(params).f,
                                   random_coverage(params).f, hyperedge_0408(3).f,
                                   random_dicut(params).f.to_table()};
  for (const auto& f : fns) {
    for (auto x : {vec_of({0.2, 0.9, 0.4, 0.5, 0.0, 0.7}), vec_of({1, 1, 1, 0, 0, 0.5}),
                   vec_of({0.5, 0.5, 0.5, 0.5, 0.5, 0.5})}) {
      Vec g = multilinear_grad(f, x);
      for (int u = 0; u < x.size(); ++u) {
        Vec hi = x, lo = x;
        hi[u] = 1;
        lo[u] = 0;
        CHECK(g[u] == doctest::Approx(multilinear_exact(f, hi) - multilinear_exact(f, lo))
                          .epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("sampled multilinear estimate") {
  auto f = SubmodularFn::directed_cut(2, {{0, 1, 1.0}});
  SUBCASE("integral points are exact with zero stderr") {
    auto est = multilinear_sampled(f, vec_of({1, 0}), 100, 5);
    CHECK(est.estimate == 1.0);
    CHECK(est.stderr_ == 0.0);
  }
  SUBCASE("zero function") {
    auto z = SubmodularFn::table(2, {0, 0, 0, 0});
    auto est = multilinear_sampled(z, vec_of({0.5, 0.5}), 10, 1);
    CHECK(est.estimate == 0.0);
    CHECK(est.stderr_ == 0.0);
  }
  SUBCASE("deterministic given seed") {
    RandomInstanceParams params;
    params.n = 8;
    params.seed = 23;
    Instance inst = random_dicut(params);
    Vec x = Vec::Constant(8, 0.37);
    auto a = multilinear_sampled(inst.f, x, 4000, 99);
    auto b = multilinear_sampled(inst.f, x, 4000, 99);
    CHECK(a.estimate == b.estimate);
  }
}

TEST_CASE("complement transform") {
  RandomInstanceParams params;
  params.n = 6;
  params.seed = 31;
  Instance inst = random_dicut(params);
  auto [g, neg] = complement_transform(inst.f, inst.ell);
  Mask all = full_mask(6);
  SUBCASE("g(S) = f(N\\S) and the linear part flips") {
    for (Mask s = 0; s < (1ULL << 6); ++s) {
      CHECK(g.eval(s) == doctest::Approx(inst.f.eval(all & ~s)));
      CHECK(neg.eval(s) == doctest::Approx(-inst.ell.eval(s)));
    }
    CHECK(g.eval(0) == doctest::Approx(inst.f.eval(all)));
  }
  SUBCASE("involution") {
    auto [g2, ell2] = complement_transform(g, neg);
    for (Mask s = 0; s < (1ULL << 6); ++s) {
      CHECK(g2.eval(s) == doctest::Approx(inst.f.eval(s)));
      CHECK(ell2.eval(s) == doctest::Approx(inst.ell.eval(s)));
    }
  }
  SUBCASE("complement preserves submodularity") {
    CHECK(is_submodular(g.to_table()));
  }
  SUBCASE("hyperedge complement stays structured") {
    Instance hyper = hyperedge_0408(3);
    auto [gh, negh] = complement_transform(hyper.f, hyper.ell);
    CHECK(gh.as_hyper() != nullptr);
    for (Mask s = 0; s < (1ULL << 6); ++s)
      CHECK(gh.eval(s) == doctest::Approx(hyper.f.eval(full_mask(6) & ~s)));
  }
}

TEST_CASE("solving the complemented instance matches the direct optimum") {
  RandomInstanceParams params;
  params.n = 6;
  params.ellmin = 0;
  params.ellmax = 1;
  params.seed = 57;
  Instance inst = random_dicut(params);
  auto [g, neg] = complement_transform(inst.f, inst.ell);
  BruteResult direct = brute_force_opt(inst.f, inst.ell, std::nullopt, 1, 1);
  BruteResult flipped = brute_force_opt(g, neg, std::nullopt, 1, 1);
  // max_S[g(S) - l(S)] = max_T[f(T) + l(T)] - l(N) under T = N \ S.
  CHECK(flipped.value ==
        doctest::Approx(direct.value - inst.ell.eval(full_mask(6))).epsilon(1e-9));
}

TEST_CASE("linear function predicates") {
  LinearFn ell(vec_of({-1, 0, 2}));
  CHECK(!ell.nonnegative());
  CHECK(!ell.nonpositive());
  CHECK(ell.positive_support() == 0b100);
  CHECK(ell.eval(0b101) == doctest::Approx(1.0));
  CHECK(ell.positive_part().eval(0b101) == doctest::Approx(2.0));
  CHECK(ell.negative_part().eval(0b101) == doctest::Approx(-1.0));
}

TEST_CASE("generator outputs are submodular") {
  CHECK(is_submodular(gharan_vondrak(2, 2, 0.3513).f.to_table()));
  CHECK(is_submodular(gharan_vondrak(3, 1, 0.4).f.to_table()));
  CHECK(is_submodular(hyperedge_0408(3).f.to_table()));
  CHECK(is_submodular(csm_dicut_arcs(3).f.to_table()));
  RandomInstanceParams params;
  params.n = 8;
  for (std::uint64_t seed : {1, 2, 3}) {
    params.seed = seed;
    CHECK(is_submodular(random_dicut(params).f.to_table()));
    CHECK(is_submodular(random_coverage(params).f.to_table()));
  }
}
