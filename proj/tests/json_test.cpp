#include "interbody/json_io.hpp"
#include "corpus.hpp"

#include <doctest.h>

using namespace interbody;

TEST_CASE("rational literals") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(parse_rat("-1.5") == Rat(-3, 2));
  CHECK(parse_rat("0.25") == Rat(1, 4));
  CHECK(parse_rat(" 2/3 ") == Rat(2, 3));
  CHECK_THROWS_AS(parse_rat("abc"), GeometryError);
  CHECK(rat_to_string(Rat(-3, 2)) == "-3/2");
  CHECK(rat_to_string(Rat(5)) == "5");
}

TEST_CASE("rational json forms") {
  CHECK(rat_from_json(json("5/3")) == Rat(5, 3));
  CHECK(rat_from_json(json(4)) == Rat(4));
  CHECK_THROWS_AS(rat_from_json(json(1.5)), GeometryError);
  CHECK(rat_to_json(Rat(22, 7)) == json("22/7"));
}

TEST_CASE("polytope round trip is exact") {
  for (const Polytope& P : {corpus::square(), corpus::triangle()}) {
    auto j1 = polytope_to_json(P);
    auto Q = polytope_from_json(j1);
    auto j2 = polytope_to_json(Q);
    CHECK(j1 == j2);
    CHECK(polytope_to_json(polytope_from_json(j2)) == j2);
  }
  for (const Polytope& P : {corpus::cube_sym(), corpus::icosahedron()}) {
    auto j1 = polytope_to_json(P);
    auto Q = polytope_from_json(j1);
    CHECK(Q.vertices == P.vertices);
    CHECK(Q.edges == P.edges);
    CHECK(polytope_to_json(Q) == j1);
  }
}

TEST_CASE("mpoly round trip") {
  MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  MPoly p = x * x + y.scaled(Rat(-3, 7)) + MPoly::constant(2, Rat(1, 2));
  CHECK(mpoly_from_json(mpoly_to_json(p)) == p);
}

TEST_CASE("report serialization carries the verdict and witness") {
  auto rep = convexity_report_2d(corpus::triangle());
  auto j = report_to_json(rep);
  CHECK(j["verdict"] == "NonConvex");
  CHECK(j["reason"] == "non_parallel_chamber");
  CHECK(j.contains("witness"));
  CHECK(j["witness"].contains("gap"));
  CHECK(j["origin"]["tag"] == "interior");

  auto j2 = report_to_json(convexity_report_2d(corpus::square()));
  CHECK(j2["verdict"] == "Convex");
  CHECK(!j2.contains("witness"));
}

TEST_CASE("chamber and region serialization") {
  auto C = enumerate_chambers(corpus::triangle()).front();
  auto j = chamber_to_json(C);
  CHECK(j["cocircuit"].get<std::string>().size() == 3);
  CHECK(j["witness"].size() == 2);

  auto L = affine_arrangement(corpus::triangle());
  auto R = region_of(L, Vec{Rat(0), Rat(2)});
  auto jr = region_to_json(R);
  CHECK(jr["signs"].get<std::string>().size() == 3);
}
