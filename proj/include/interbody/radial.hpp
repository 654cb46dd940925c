#pragma once

#include "interbody/arrangement.hpp"
#include "interbody/mpoly.hpp"
#include "interbody/polytope.hpp"

#include <utility>
#include <vector>

namespace interbody {

// One term of the signed determinant sum. For d=2 a simplex is a single
// section endpoint, for d=3 the far side of one fan triangle. An edge pair
// (k, k) stands for the polytope vertex k sitting on the section hyperplane
// (only the origin vertex can do so on an open chamber).
struct SectionSimplex {
  std::vector<std::pair<int, int>> edges;  // d-1 crossed-edge pairs
  int sign;                                // +1 or -1
};

struct RadialPiece {
  Chamber chamber;
  MPoly p;         // numerator over the common denominator, rho = p / (|x|^2 q)
  MPoly q;         // product of <b-a, x> over distinct crossed edges, positive on C
  MPoly boundary;  // reduced defining polynomial of dIP within C; integer
                   // coefficients, content 1, negative inside IP
  bool parallel_edges = false;  // d=2: the two crossed edges are parallel
};

// Exact rho_{IP}(x) = vol_{d-1}(P cap x^perp) / |x|. Works on walls and
// degenerate sections (value 0 when the section has dimension < d-1).
Rat radial_value(const Polytope& P, const Vec& x);

// Floating-point cross-check computed along an independent path: embed the
// section in an orthonormal basis of x^perp and use segment length (d=2) or
// the shoelace formula (d=3).
double radial_oracle(const Polytope& P, const Vec& x);

// d=2: one simplex per section endpoint; d=3: fan triangulation anchored at
// the section vertex on the lexicographically smallest crossed edge.
// Throws EmptySection when the chamber's section has no interior.
std::vector<SectionSimplex> triangulate_section(const Polytope& P, const Chamber& C);

RadialPiece chamber_radial_piece(const Polytope& P, const Chamber& C);

}  // namespace interbody
