#include "interbody/convexity.hpp"
#include "interbody/radial.hpp"
#include "corpus.hpp"

#include <doctest.h>

#include <random>

using namespace interbody;

TEST_CASE("origin symmetry detection") {
  CHECK(is_origin_symmetric(corpus::square()));
  CHECK(is_origin_symmetric(corpus::hexagon_symmetric()));
  CHECK(is_origin_symmetric(corpus::cube_sym()));
  CHECK(is_origin_symmetric(corpus::icosahedron()));
  CHECK(!is_origin_symmetric(corpus::triangle()));
  CHECK(!is_origin_symmetric(corpus::cube02()));
}

TEST_CASE("2d report verdicts") {
  auto r1 = convexity_report_2d(corpus::square());
  CHECK(r1.verdict == ConvexityReport::Convex);
  CHECK(r1.symmetric);
  CHECK(r1.per_chamber.size() == 4);

  auto r2 = convexity_report_2d(corpus::triangle());
  CHECK(r2.verdict == ConvexityReport::NonConvex);
  CHECK(r2.reason == ConvexityReport::NonParallelChamber);
  REQUIRE(r2.witness.has_value());

  auto r3 = convexity_report_2d(corpus::unit_square_shifted());
  CHECK(r3.verdict == ConvexityReport::NonConvex);
  CHECK(r3.reason == ConvexityReport::OriginOutsideOrLowFace);

  auto r4 = convexity_report_2d(translate(corpus::square(), Vec{Rat(1), Rat(0)}));
  CHECK(r4.verdict == ConvexityReport::NonConvex);
  CHECK(r4.reason == ConvexityReport::DiscontinuityAtFacet);
}

TEST_CASE("witness certificate on the triangle") {
  auto P = corpus::triangle();
  auto rep = convexity_report_2d(P);
  REQUIRE(rep.witness.has_value());
  const auto& W = *rep.witness;
  CHECK(W.alpha != W.beta);
  CHECK(W.gap == (W.alpha - W.beta) * (W.alpha - W.beta) /
                     (2 * (2 + W.alpha + W.beta) * (W.alpha + W.beta)));
  CHECK(radial_value(P, W.p_a) == 1);
  CHECK(radial_value(P, W.p_b) == 1);
  CHECK(radial_value(P, W.p_ab) == 1);
  CHECK(radial_value(P, W.q) < 1);
  CHECK(norm2(W.q) > norm2(W.p_ab));
}

TEST_CASE("witness gap scales the chord sum exactly") {
  auto P = corpus::triangle();
  for (const auto& C : enumerate_chambers(P)) {
    auto W = nonconvexity_witness(P, C);
    Vec ab = add(W.a, W.b);
    // |q| - |p_ab| = gap * |a+b|, all three parallel; compare squared forms.
    Rat cq = (1 + W.alpha) * (1 + W.beta) / (2 + W.alpha + W.beta);
    Rat cp = Rat(1, 2) + W.alpha * W.beta / (W.alpha + W.beta);
    CHECK(cq - cp == W.gap);
    CHECK(norm2(W.q) == cq * cq * norm2(ab));
    CHECK(norm2(W.p_ab) == cp * cp * norm2(ab));
  }
}

TEST_CASE("parallel chambers are rejected as witness sources") {
  auto P = corpus::square();
  for (const auto& C : enumerate_chambers(P))
    CHECK_THROWS_AS(nonconvexity_witness(P, C), ParallelEdges);
}

TEST_CASE("gardner check on symmetric polygons") {
  CHECK(gardner_check(corpus::square()));
  CHECK(gardner_check(corpus::hexagon_symmetric()));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 5; ++i) CHECK(gardner_check(corpus::random_symmetric_polygon(rng)));
  CHECK_THROWS_AS(gardner_check(corpus::triangle()), NotSymmetric);
}

TEST_CASE("prism construction") {
  auto prism = prism_over(corpus::triangle(), Rat(-1), Rat(1));
  CHECK(prism.dim == 3);
  CHECK(prism.vertices.size() == 6);
  CHECK(prism.facets.size() == 5);
  CHECK(prism.edges.size() == 9);
}

TEST_CASE("prism slices scale the base radial function") {
  CHECK(prism_slice_check(corpus::unit_square_shifted(), Rat(0), Rat(2), 50));
  CHECK(prism_slice_check(corpus::triangle(), Rat(-1), Rat(1), 50));
}

TEST_CASE("parallelepiped verdicts") {
  auto r1 = parallelepiped_report(corpus::cube_sym());
  CHECK(r1.verdict == ConvexityReport::Convex);
  CHECK(r1.symmetric);

  auto r2 = parallelepiped_report(corpus::cube02());
  CHECK(r2.verdict == ConvexityReport::NonConvex);
  REQUIRE(r2.slice_chain.has_value());
  CHECK(r2.slice_chain->dropped_coordinates.size() == 1);
  CHECK(r2.slice_chain->final_face.size() == 2);

  auto mixed = corpus::box({{Rat(-1), Rat(1)}, {Rat(-1), Rat(1)}, {Rat(0), Rat(2)}});
  auto r3 = parallelepiped_report(mixed);
  CHECK(r3.verdict == ConvexityReport::NonConvex);
  CHECK(r3.slice_chain->asymmetric_coordinate == 2);

  CHECK_THROWS_AS(parallelepiped_report(corpus::triangle()), NotABox);
  CHECK_THROWS_AS(parallelepiped_report(corpus::icosahedron()), NotABox);
}

TEST_CASE("admissible edge positions") {
  auto para = build_polygon({{Rat(0), Rat(0)}, {Rat(3), Rat(1)}, {Rat(4), Rat(3)}, {Rat(1), Rat(2)}});
  CHECK(admissible_edge_positions(para).size() == 4);

  auto tri = build_polygon({{Rat(0), Rat(0)}, {Rat(4), Rat(0)}, {Rat(2), Rat(3)}});
  CHECK(admissible_edge_positions(tri).size() == 3);

  CHECK(admissible_edge_positions(corpus::hexagon_symmetric()).empty());
}

TEST_CASE("admissible midpoints make the doubled polygon convex") {
  auto tri = build_polygon({{Rat(0), Rat(0)}, {Rat(4), Rat(0)}, {Rat(1), Rat(1)}});
  for (const auto& [edge, mid] : admissible_edge_positions(tri)) {
    auto Q = translate(tri, neg(mid));
    std::vector<Vec> pts;
    for (const auto& v : Q.vertices) {
      pts.push_back(v);
      pts.push_back(neg(v));
    }
    auto hull = build_polygon(pts);
    // Union of Q and -Q convex means the hull adds no area beyond the union:
    // every hull vertex must be a vertex of Q or -Q.
    for (const auto& h : hull.vertices) {
      bool found = false;
      for (const auto& p : pts) {
        if (p == h) { found = true; break; }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("probe finds violators exactly where expected") {
  auto bad = midpoint_convexity_probe(corpus::unit_square_shifted(), 1000, 7);
  CHECK(bad.violator.has_value());
  CHECK(bad.min_margin < 0);

  auto good = midpoint_convexity_probe(corpus::square(), 500, 7);
  CHECK(!good.violator.has_value());
  CHECK(good.min_margin >= 0);
}
