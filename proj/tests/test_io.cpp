#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "regsm/bench.hpp"
#include "regsm/io.hpp"

using namespace regsm;

TEST_CASE("parse a dicut instance") {
  const char* text = R"({
    "n": 3,
    "f": {"type": "dicut", "edges": [[0, 1, 0.5], [2, 0, 1.25]]},
    "ell": [-1.0, 0.0, 0.5],
    "constraint": {"type": "cardinality", "k": 2}
  })";
  Instance inst = parse_instance(text);
  CHECK(inst.n() == 3);
  CHECK(inst.f.eval(0b001) == doctest::Approx(0.5));
  CHECK(inst.ell.eval(0b101) == doctest::Approx(-0.5));
  REQUIRE(inst.constraint.has_value());
  CHECK(!inst.constraint->is_independent(0b111));
}

TEST_CASE("parse errors carry context") {
  CHECK_THROWS_AS(parse_instance("{"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"n": 2, "f": {"type": "nope"}, "ell": [0, 0]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"n": 2, "f": {"type": "dicut", "edges": []}, "ell": [0]})"),
                  ParseError);
  // Negative edge weights violate the structural contract.
  CHECK_THROWS_AS(
      parse_instance(
          R"({"n": 2, "f": {"type": "dicut", "edges": [[0, 1, -1.0]]}, "ell": [0, 0]})"),
      ParseError);
}

TEST_CASE("round trips preserve evaluation everywhere") {
  std::mt19937_64 rng(64);
  RandomInstanceParams p;
  p.n = 6;
  p.ellmin = -1;
  p.ellmax = 1;
  auto check_roundtrip = [&](const Instance& inst) {
    Instance back = parse_instance(instance_to_json(inst));
    REQUIRE(back.n() == inst.n());
    for (Mask s = 0; s < (1ULL << inst.n()); ++s) {
      CHECK(back.f.eval(s) == doctest::Approx(inst.f.eval(s)).epsilon(1e-12));
      CHECK(back.ell.eval(s) == doctest::Approx(inst.ell.eval(s)).epsilon(1e-12));
      CHECK(back.feasible(s) == inst.feasible(s));
    }
  };
  for (int trial = 0; trial < 3; ++trial) {
    p.seed = rng();
    check_roundtrip(random_dicut(p));
    check_roundtrip(random_cut(p));
    check_roundtrip(random_coverage(p));
  }
  check_roundtrip(hyperedge_0408(3));
  check_roundtrip(csm_dicut_arcs(3));
  Instance table = gharan_vondrak(2, 2, 0.3513);
  Instance trimmed{table.f, table.ell, Matroid::uniform(table.n(), 3)};
  check_roundtrip(trimmed);
  // Explicit matroid constraint.
  std::vector<Mask> fam;
  for (Mask s = 0; s < (1ULL << 6); ++s)
    if (popcount(s) <= 2) fam.push_back(s);
  p.seed = 3;
  Instance expl = random_dicut(p);
  expl.constraint = Matroid::explicit_family(6, fam);
  check_roundtrip(expl);
}

TEST_CASE("file round trip") {
  RandomInstanceParams p;
  p.n = 5;
  p.seed = 11;
  Instance inst = random_dicut(p);
  save_instance("/tmp/regsm_io_test.json", inst);
  Instance back = load_instance("/tmp/regsm_io_test.json");
  for (Mask s = 0; s < (1ULL << 5); ++s)
    CHECK(back.f.eval(s) == doctest::Approx(inst.f.eval(s)));
  CHECK_THROWS_AS(load_instance("/tmp/definitely_missing_regsm.json"), ParseError);
}
