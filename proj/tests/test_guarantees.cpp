#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "regsm/errors.hpp"
#include "regsm/guarantees.hpp"

using namespace regsm;

TEST_CASE("aided coefficients") {
  SUBCASE("degenerate pair is the zero point") {
    auto p = aided_coeffs(0, 0);
    CHECK(p.coords.norm() == doctest::Approx(0.0).scale(1.0));
  }
  SUBCASE("ts = 0, tf = 1 collapses to the e^{-1} point") {
    auto p = aided_coeffs(0, 1);
    CHECK(p.coords[0] == doctest::Approx(std::exp(-1.0)));
    CHECK(p.coords[1] == doctest::Approx(0.0).scale(1.0));
    CHECK(p.coords[2] == doctest::Approx(0.0).scale(1.0));
    CHECK(p.coords[3] == doctest::Approx(1.0));
  }
  SUBCASE("the 0.385-era pair") {
    auto p = aided_coeffs(0.372, 1.0);
    CHECK(p.coords[0] == doctest::Approx(0.5010).epsilon(1e-3));
  }
  SUBCASE("ts > tf is rejected") { CHECK_THROWS_AS(aided_coeffs(0.5, 0.4), ContractError); }
}

TEST_CASE("quadrature oracle confirms the closed-form coefficients") {
  // Integrate e^t G(t) for the aided gain with symbolic placeholders
  // (A, B, C) = (f(OPT), f(OPT ^ Z), f(OPT v Z)) and compare against the
  // coefficient formulas.
  std::mt19937_64 rng(515);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    double tf = 0.1 + 1.9 * unif(rng);
    double ts = tf * unif(rng);
    double a = unif(rng), b = unif(rng), c = unif(rng);
    auto integrand = [&](double t) {
      double gain = t < ts ? (a - b - (1 - std::exp(-t)) * c)
                           : (std::exp(ts - t) * a - (std::exp(ts - t) - std::exp(-t)) * c);
      return std::exp(t) * gain;
    };
    // Simpson per smooth piece (the integrand kinks at ts).
    auto simpson = [&](double lo, double hi) {
      if (hi - lo < 1e-12) return 0.0;
      const int cells = 2000;
      double h = (hi - lo) / cells;
      double sum = integrand(lo) + integrand(hi - 1e-13);
      for (int i = 1; i < cells; ++i) sum += 2 * (1 + i % 2) * integrand(lo + i * h);
      return sum * h / 3;
    };
    double integral = std::exp(-tf) * (simpson(0, ts) + simpson(ts, tf));
    auto p = aided_coeffs(ts, tf);
    double closed = p.coords[0] * a + p.coords[1] * b + p.coords[2] * c;
    CHECK(integral == doctest::Approx(closed).epsilon(1e-6));
  }
}

TEST_CASE("inline point lists merge x1 and x2 across the break") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    double tf = 2 * unif(rng), ts = tf * unif(rng);
    auto p = aided_coeffs(ts, tf);
    double merged = (tf - ts) * std::exp(ts - tf);
    CHECK(p.coords[0] + p.coords[1] == doctest::Approx(merged).epsilon(1e-12));
  }
}

TEST_CASE("distorted coefficients") {
  SUBCASE("ts = 0 has equal positive-part coefficients") {
    auto p = distorted_aided_coeffs(0, 0.8);
    CHECK(p.coords[3] == doctest::Approx(1 - std::exp(-0.8)));
    CHECK(p.coords[4] == doctest::Approx(1 - std::exp(-0.8)));
  }
  SUBCASE("(1,1) zeroes the kept-part coefficient") {
    auto p = distorted_aided_coeffs(1, 1);
    CHECK(p.coords[3] == doctest::Approx(1 - std::exp(-1.0)));
    CHECK(p.coords[4] == doctest::Approx(0.0).scale(1.0));
  }
  SUBCASE("7-dim variant appends the negative-part pair") {
    auto p = distorted_aided_coeffs(0.205, 0.955, true);
    REQUIRE(p.coords.size() == 7);
    CHECK(p.coords[5] == doctest::Approx(0.955));
    CHECK(p.coords[6] == doctest::Approx(0.75));
    // f-part agrees with the plain aided coefficients.
    auto q = aided_coeffs(0.205, 0.955);
    for (int i = 0; i < 3; ++i) CHECK(p.coords[i] == doctest::Approx(q.coords[i]));
  }
  SUBCASE("tf above one is out of contract") {
    CHECK_THROWS_AS(distorted_aided_coeffs(0.2, 1.2), ContractError);
  }
}

TEST_CASE("double greedy hull points") {
  auto pts = dg_hull_points({1.0});
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].coords[0] == doctest::Approx(0.5));
  CHECK(pts[0].coords[1] == doctest::Approx(0.5));
  CHECK(pts[0].coords[2] == doctest::Approx(0.25));
  // r -> infinity approaches (0, 0, 1).
  auto far = dg_hull_points({1000.0});
  CHECK(far[0].coords[0] == doctest::Approx(0.0).epsilon(1e-5).scale(1.0));
  CHECK(far[0].coords[2] == doctest::Approx(1.0).epsilon(1e-5));
  // The identity behind the parameterization: (r + 1/r)^2 = r^2 + 2 + r^{-2},
  // i.e. each point is the r^2-parameter greedy guarantee split over
  // l(OPT) and l(N).
  for (double r : {1.3, 2.0, 3.7}) {
    double denom = r * r + 2 + 1 / (r * r);
    auto p = dg_hull_points({r})[0];
    CHECK(p.coords[0] == doctest::Approx(2 / denom));
    CHECK(p.coords[1] == doctest::Approx(2 / denom));
    CHECK(p.coords[2] == doctest::Approx(r * r / denom));
  }
}

TEST_CASE("anchors alone are feasible and give alpha = 0") {
  std::vector<GuaranteePoint> anchors;
  {
    Eigen::VectorXd a(4), b(4), c(4);
    a << 0, 0, 0, 0;
    b << 0, 0.5, 0.5, 1;
    c << 0, 1, 0, 1;
    anchors = {{a, "empty"}, {b, "local-balanced"}, {c, "local-meet"}};
  }
  for (double beta : {0.0, 0.5, 1.0}) {
    Eigen::VectorXd e2 = Eigen::VectorXd::Zero(4), e3 = Eigen::VectorXd::Zero(4),
                    e4 = Eigen::VectorXd::Zero(4);
    e2[1] = 1;
    e3[2] = 1;
    e4[3] = 1;
    auto sol = solve_guarantee_lp(anchors, {{e2, true, 0}, {e3, true, 0}, {e4, false, beta}});
    REQUIRE(sol.has_value());
    CHECK(sol->alpha == doctest::Approx(0.0).scale(1.0));
  }
}

TEST_CASE("non-positive guarantee table matches the published values") {
  auto pairs = time_pair_grid(20, 2.0);
  CHECK(pairs.size() == 41 * 42 / 2);
  CHECK(alpha_nonpos(0.7, pairs).alpha == doctest::Approx(0.3478).epsilon(1e-3).scale(1.0));
  CHECK(alpha_nonpos(1.0, pairs).alpha == doctest::Approx(0.3856).epsilon(1e-3).scale(1.0));
  CHECK(alpha_nonpos(1.3, pairs).alpha == doctest::Approx(0.3982).epsilon(1e-3).scale(1.0));
}

TEST_CASE("alpha(beta) is monotone with a plateau at 0.398") {
  auto pairs = time_pair_grid(20, 2.0);
  double prev = -1;
  for (double beta = 0.0; beta <= 1.4 + 1e-9; beta += 0.1) {
    double alpha = alpha_nonpos(beta, pairs).alpha;
    CHECK(alpha >= prev - 1e-9);
    prev = alpha;
  }
  CHECK(alpha_nonpos(1.35, pairs).alpha == doctest::Approx(alpha_nonpos(2.0, pairs).alpha)
                                               .epsilon(1e-3));
  CHECK(alpha_nonpos(2.0, pairs).alpha == doctest::Approx(0.398).epsilon(2e-3));
}

TEST_CASE("combined non-negative table matches the published values") {
  auto rows = table_nonneg_comb({0.85, 0.9, 1.0});
  CHECK(rows[0].alpha == doctest::Approx(0.4749).epsilon(1e-3).scale(1.0));
  CHECK(rows[1].alpha == doctest::Approx(0.4493).epsilon(1e-3).scale(1.0));
  CHECK(rows[2].alpha == doctest::Approx(0.3856).epsilon(1e-3).scale(1.0));
}

TEST_CASE("matroid curve for non-negative l") {
  std::vector<std::pair<double, double>> pairs;
  for (int i = 0; i <= 10; ++i) pairs.push_back({0.1 * i, 1.0});
  CHECK(alpha_nonneg_csm(1 - std::exp(-1.0), pairs).alpha ==
        doctest::Approx(std::exp(-1.0)).epsilon(2e-3));
  CHECK(alpha_nonneg_csm(0.385, pairs).alpha >= 0.385);
  CHECK(alpha_nonneg_csm(1.0, pairs).alpha == doctest::Approx(0.0).epsilon(1e-6).scale(1.0));
}

TEST_CASE("guessed 7-dim curve reaches 0.280 at beta = 0.7") {
  auto sol = alpha_csm_guessed(0.7, {{0.205, 0.955}});
  CHECK(sol.alpha >= 0.280 - 5e-4);
}

TEST_CASE("infeasible beta is signalled, not fabricated") {
  // x4 >= beta cannot be met by points whose fourth coordinate tops out
  // below beta.
  auto pts = dg_hull_points({1.0, 2.0});
  Eigen::VectorXd e2 = Eigen::VectorXd::Zero(3);
  e2[1] = 1;
  auto sol = solve_guarantee_lp(pts, {{e2, true, 2.0}});
  CHECK(!sol.has_value());
}
