#pragma once

#include "interbody/arrangement.hpp"
#include "interbody/polytope.hpp"
#include "interbody/radial.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace interbody {

// Exact non-convexity certificate for a chamber whose two crossed edges are
// not parallel. gap is the rational multiplier m = (a-b)^2/(2(2+a+b)(a+b))
// with |q| - |p_ab| = m * |a+b|; all norm comparisons are done squared.
struct Witness {
  Chamber chamber;
  Vec a, b;
  Rat alpha, beta;
  Vec p_a, p_b, p_ab, q;
  Rat gap;
};

struct PerChamber {
  Chamber chamber;
  int piece_degree = -1;  // boundary polynomial degree; -1 for empty sections
  bool parallel_edges = false;
};

// Certificate for the parallelepiped induction: coordinates dropped one at a
// time via the prism identity until a 2D non-symmetric face remains.
struct SliceChain {
  int asymmetric_coordinate;
  std::vector<int> dropped_coordinates;
  std::vector<std::pair<Rat, Rat>> final_face;  // the two surviving intervals
};

struct ConvexityReport {
  enum Verdict { Convex, NonConvex } verdict;
  enum Reason { None, NonParallelChamber, DiscontinuityAtFacet, OriginOutsideOrLowFace };
  Reason reason = None;
  bool symmetric = false;
  OriginPosition origin;
  std::optional<Witness> witness;
  std::vector<PerChamber> per_chamber;  // only when the origin is interior
  std::optional<SliceChain> slice_chain;
};

bool is_origin_symmetric(const Polytope& P);

ConvexityReport convexity_report_2d(const Polytope& P);

// Throws ParallelEdges when the chamber's crossed edges are parallel.
Witness nonconvexity_witness(const Polytope& P, const Chamber& C);

// For P = -P with the origin interior: checks every boundary piece of IP is
// linear and vanishes on the quarter-turned, doubled endpoints of the
// matching edge of P. Throws NotSymmetric.
bool gardner_check(const Polytope& P);

// Samples random directions u in dim(L) and checks
// radial_value(L x [a,b], (u,0)) = (b-a) * radial_value(L, u) exactly.
bool prism_slice_check(const Polytope& L, const Rat& a, const Rat& b, int samples,
                       uint64_t seed = 7);

// Builds the prism L x [a,b] with its facet combinatorics.
Polytope prism_over(const Polytope& L, const Rat& a, const Rat& b);

// Throws NotABox unless P is an axis-aligned box.
ConvexityReport parallelepiped_report(const Polytope& P);

// d=2: edges whose midpoint, taken as origin, makes P u -P convex (the
// adjacent interior angles sum to at most pi). Returns (edge index, midpoint).
std::vector<std::pair<int, Vec>> admissible_edge_positions(const Polytope& P);

struct ProbeResult {
  double min_margin;
  std::optional<std::pair<Vec, Vec>> violator;
};

// Seeded random pairs (x, y); margin = rho(x+y) - rho(x)rho(y)/(rho(x)+rho(y)),
// compared to zero in exact arithmetic. A violator certifies non-convexity;
// none found is evidence only.
ProbeResult midpoint_convexity_probe(const Polytope& P, int pairs, uint64_t seed);

}  // namespace interbody
