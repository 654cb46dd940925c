#include "interbody/radial.hpp"
#include "corpus.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace interbody;

namespace {

const Chamber& chamber_containing(const std::vector<Chamber>& chambers, const Polytope& P,
                                  const Vec& x) {
  auto s = cocircuit_of(P, x);
  for (const auto& C : chambers) {
    if (C.cocircuit == s) return C;
  }
  throw GeometryError("no chamber for the given direction");
}

}  // namespace

TEST_CASE("radial values on anchor shapes") {
  CHECK(radial_value(corpus::triangle(), Vec{Rat(2), Rat(1)}) == Rat(3, 4));
  CHECK(radial_value(corpus::square(), Vec{Rat(1), Rat(1)}) == 2);
  CHECK(radial_value(corpus::square(), Vec{Rat(1), Rat(0)}) == 2);
  CHECK(radial_value(corpus::cube02(), Vec{Rat(1), Rat(0), Rat(0)}) == 4);
  CHECK(radial_value(corpus::cube02(), Vec{Rat(1), Rat(1), Rat(1)}) == 0);
  CHECK(radial_value(corpus::cube_sym(), Vec{Rat(0), Rat(0), Rat(3)}) == Rat(4, 3));
  CHECK(radial_value(corpus::cube_sym(), Vec{Rat(0), Rat(0), Rat(1)}) == 4);
}

TEST_CASE("radial function is homogeneous of degree -1") {
  auto P = corpus::triangle();
  Vec x{Rat(2), Rat(1)};
  CHECK(radial_value(P, scale(Rat(5), x)) == radial_value(P, x) / 5);
  CHECK(radial_value(P, scale(Rat(1, 3), x)) == radial_value(P, x) * 3);
}

TEST_CASE("oracle agrees with the exact value") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-9, 9);
  for (const Polytope& P : {corpus::triangle(), corpus::square(), corpus::cube02(),
                            corpus::cube_sym()}) {
    for (int k = 0; k < 100; ++k) {
      Vec x(P.dim);
      for (int i = 0; i < P.dim; ++i) x[i] = c(rng);
      if (is_zero(x)) continue;
      double exact = to_double(radial_value(P, x));
      double approx = radial_oracle(P, x);
      if (approx == 0.0) {
        CHECK(exact == 0.0);
      } else {
        CHECK(std::abs(exact - approx) / approx < 1e-9);
      }
    }
  }
}

TEST_CASE("triangulation sizes") {
  auto Pt = corpus::triangle();
  auto ct = enumerate_chambers(Pt);
  for (const auto& C : ct) CHECK(triangulate_section(Pt, C).size() == 2);

  auto P = corpus::cube_sym();
  auto chambers = enumerate_chambers(P);
  const auto& hexC = chamber_containing(chambers, P, Vec{Rat(1), Rat(1), Rat(1)});
  // Section there is a hexagon: 6 crossed edges, fan of 4 triangles.
  CHECK(hexC.crossed_edges.size() == 6);
  CHECK(triangulate_section(P, hexC).size() == 4);

  auto Q = corpus::cube02();
  auto qch = enumerate_chambers(Q);
  const auto& pentC = chamber_containing(qch, Q, Vec{Rat(2), Rat(2), Rat(-3)});
  // 4 crossed edges plus the origin vertex: pentagon, fan of 3 triangles.
  CHECK(pentC.crossed_edges.size() == 4);
  CHECK(triangulate_section(Q, pentC).size() == 3);
}

TEST_CASE("square piece: rho = 2/x1 on the right chamber") {
  auto P = corpus::square();
  auto chambers = enumerate_chambers(P);
  const auto& C = chamber_containing(chambers, P, Vec{Rat(2), Rat(1)});
  auto piece = chamber_radial_piece(P, C);
  CHECK(piece.parallel_edges);
  // boundary normalized: x1 - 2, negative inside
  MPoly expected = MPoly::variable(2, 0) - MPoly::constant(2, Rat(2));
  CHECK(piece.boundary == expected);
  // rho = p / (|x|^2 q) at a couple of directions
  for (const Vec& x : {Vec{Rat(2), Rat(1)}, Vec{Rat(3), Rat(-1)}, Vec{Rat(1), Rat(0)}}) {
    Rat rho = piece.p.eval(x) / (norm2(x) * piece.q.eval(x));
    CHECK(rho == radial_value(P, x));
  }
}

TEST_CASE("piece matches radial values across many shapes and chambers") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 8; ++iter) {
    Polytope P = iter % 2 == 0 ? corpus::random_interior_polygon(rng)
                               : corpus::random_symmetric_polygon(rng);
    if (origin_position(P).tag != OriginPosition::Interior) continue;
    for (const auto& C : enumerate_chambers(P)) {
      auto piece = chamber_radial_piece(P, C);
      // Sample the open sector between the rays.
      for (int k = 1; k <= 3; ++k) {
        Vec x = add(scale(Rat(k), C.ray_lo), C.ray_hi);
        Rat rho = piece.p.eval(x) / (norm2(x) * piece.q.eval(x));
        CHECK(rho == radial_value(P, x));
        Rat b = piece.boundary.eval(scale(rho, x));  // boundary point
        CHECK(b == 0);
      }
      Rat rho_w = radial_value(P, C.witness);
      CHECK(piece.boundary.eval(scale(rho_w / 2, C.witness)) < 0);   // inside
      CHECK(piece.boundary.eval(scale(rho_w * 2, C.witness)) > 0);   // outside
    }
  }
}

TEST_CASE("3d pieces match radial values") {
  for (const Polytope& P : {corpus::cube_sym(), corpus::cube02()}) {
    for (const auto& C : enumerate_chambers(P)) {
      RadialPiece piece;
      try {
        piece = chamber_radial_piece(P, C);
      } catch (const EmptySection&) {
        CHECK(radial_value(P, C.witness) == 0);
        continue;
      }
      Rat rho = piece.p.eval(C.witness) / (norm2(C.witness) * piece.q.eval(C.witness));
      CHECK(rho == radial_value(P, C.witness));
      if (rho != 0) CHECK(piece.boundary.eval(scale(rho, C.witness)) == 0);
    }
  }
}
