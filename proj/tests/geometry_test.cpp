#include "interbody/polytope.hpp"
#include "corpus.hpp"

#include <doctest.h>

using namespace interbody;

TEST_CASE("polygon hull is counterclockwise and strict") {
  auto P = build_polygon({{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(1), Rat(1, 2)},
                          {Rat(2), Rat(2)}, {Rat(0), Rat(2)}, {Rat(1), Rat(1)}});
  CHECK(P.vertices.size() == 4);  // interior points dropped
  const int n = static_cast<int>(P.vertices.size());
  for (int i = 0; i < n; ++i) {
    Vec a = P.vertices[i], b = P.vertices[(i + 1) % n], c = P.vertices[(i + 2) % n];
    CHECK(cross2(sub(b, a), sub(c, b)) > 0);
  }
  CHECK(P.edges.size() == 4);
  CHECK(P.facets.size() == 4);
}

TEST_CASE("degenerate polygon input throws") {
  CHECK_THROWS_AS(build_polygon({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}}),
                  DegenerateInput);
}

TEST_CASE("facet inequalities support the polytope") {
  for (const Polytope& P : {corpus::cube_sym(), corpus::cube02(), corpus::icosahedron()}) {
    for (const auto& f : P.facets) {
      for (const auto& v : P.vertices) CHECK(dot(f.normal, v) >= f.offset);
      int tight = 0;
      for (int i : f.vertices) {
        CHECK(dot(f.normal, P.vertices[i]) == f.offset);
        ++tight;
      }
      CHECK(tight >= P.dim);
    }
  }
}

TEST_CASE("cube combinatorics") {
  auto P = corpus::cube02();
  CHECK(P.vertices.size() == 8);
  CHECK(P.edges.size() == 12);
  CHECK(P.facets.size() == 6);
  for (const auto& v : P.vertices) {
    for (const auto& c : v) CHECK((c == 0 || c == 2));
  }
}

TEST_CASE("icosahedron combinatorics") {
  auto P = corpus::icosahedron();
  CHECK(P.vertices.size() == 12);
  CHECK(P.edges.size() == 30);
  CHECK(P.facets.size() == 20);
}

TEST_CASE("origin position tags") {
  CHECK(origin_position(corpus::square()).tag == OriginPosition::Interior);
  CHECK(origin_position(corpus::cube02()).tag == OriginPosition::LowerFace);
  auto edge_mid = translate(corpus::square(), Vec{Rat(1), Rat(0)});  // origin mid-edge
  CHECK(origin_position(edge_mid).tag == OriginPosition::FacetInterior);
  auto outside = translate(corpus::square(), Vec{Rat(5), Rat(0)});
  CHECK(origin_position(outside).tag == OriginPosition::Outside);
}

TEST_CASE("translate moves vertices and offsets consistently") {
  auto P = translate(corpus::square(), Vec{Rat(1, 3), Rat(-2, 5)});
  for (const auto& f : P.facets) {
    for (int i : f.vertices) CHECK(dot(f.normal, P.vertices[i]) == f.offset);
  }
}

TEST_CASE("cross section of the triangle") {
  auto P = corpus::triangle();
  auto pts = cross_section(P, Vec{Rat(2), Rat(1)});
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == Vec{Rat(-1, 4), Rat(1, 2)});
  CHECK(pts[1] == Vec{Rat(1, 2), Rat(-1)});
}

TEST_CASE("cross section misses a far polytope") {
  auto P = translate(corpus::square(), Vec{Rat(10), Rat(0)});
  CHECK_THROWS_AS(cross_section(P, Vec{Rat(1), Rat(0)}), EmptySection);
  CHECK_THROWS_AS(cross_section(P, Vec{Rat(0), Rat(0)}), ZeroDirection);
}

TEST_CASE("3d cross section comes back in cyclic order") {
  auto P = corpus::cube_sym();
  auto pts = cross_section(P, Vec{Rat(1), Rat(1), Rat(1)});
  REQUIRE(pts.size() == 6);  // regular hexagon
  for (const auto& p : pts) CHECK(dot(p, Vec{Rat(1), Rat(1), Rat(1)}) == 0);
  // Consecutive triples all turn the same way around the center.
  Vec x{Rat(1), Rat(1), Rat(1)};
  for (size_t i = 0; i < pts.size(); ++i) {
    Rat turn = det3(pts[i], pts[(i + 1) % pts.size()], x);
    CHECK(turn != 0);
    CHECK(turn.sign() == det3(pts[0], pts[1], x).sign());
  }
}
