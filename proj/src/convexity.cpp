#include "interbody/convexity.hpp"

#include "interbody/radial.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

namespace interbody {

bool is_origin_symmetric(const Polytope& P) {
  std::set<Vec> verts(P.vertices.begin(), P.vertices.end());
  for (const auto& v : P.vertices) {
    if (!verts.count(neg(v))) return false;
  }
  return true;
}

namespace {

// Endpoint of the section chord on the positive side of rot90(u), and the
// ratio alpha with the opposite endpoint = -alpha * endpoint.
std::pair<Vec, Rat> chord_anchor(const Polytope& P, const Vec& u) {
  auto pts = cross_section(P, u);
  if (pts.size() != 2) throw GeometryError("section is not a proper chord");
  Vec a = pts.front();  // decreasing along rot90(u): front is the + side
  const Vec& other = pts.back();
  if (dot(a, rot90(u)) <= 0) throw GeometryError("chord does not straddle the origin");
  Rat alpha = -dot(other, a) / dot(a, a);
  if (alpha <= 0 || !(scale(-alpha, a) == other))
    throw GeometryError("chord endpoints are not antipodally aligned");
  return {a, alpha};
}

Vec quarter_turn_scaled(const Rat& c, const Vec& v) {
  return Vec{c * v[1], -c * v[0]};
}

}  // namespace

Witness nonconvexity_witness(const Polytope& P, const Chamber& C) {
  if (C.crossed_edges.size() != 2) throw ParallelEdges("chamber does not cross two edges");
  {
    Vec d1 = sub(P.vertices[C.crossed_edges[0].second], P.vertices[C.crossed_edges[0].first]);
    Vec d2 = sub(P.vertices[C.crossed_edges[1].second], P.vertices[C.crossed_edges[1].first]);
    if (cross2(d1, d2) == 0) throw ParallelEdges("crossed edges are parallel");
  }

  const Vec& w = C.witness;
  auto [a, alpha] = chord_anchor(P, w);

  // A second direction strictly inside the sector, biased toward one wall.
  std::vector<Vec> candidates = {add(scale(Rat(3), w), C.ray_hi),
                                 add(scale(Rat(3), w), C.ray_lo),
                                 add(scale(Rat(5), w), C.ray_hi)};
  Vec b;
  Rat beta;
  bool found = false;
  for (const auto& u : candidates) {
    if (is_zero(u)) continue;
    auto [bb, bbeta] = chord_anchor(P, u);
    if (bbeta != alpha) {
      b = bb;
      beta = bbeta;
      found = true;
      break;
    }
  }
  if (!found) throw GeometryError("could not separate alpha and beta in this chamber");

  Witness W;
  W.chamber = C;
  W.a = a;
  W.b = b;
  W.alpha = alpha;
  W.beta = beta;
  Vec ab = add(a, b);
  W.p_a = quarter_turn_scaled(1 + alpha, a);
  W.p_b = quarter_turn_scaled(1 + beta, b);
  W.p_ab = quarter_turn_scaled(Rat(1, 2) + alpha * beta / (alpha + beta), ab);
  W.q = quarter_turn_scaled((1 + alpha) * (1 + beta) / (2 + alpha + beta), ab);
  W.gap = (alpha - beta) * (alpha - beta) / (2 * (2 + alpha + beta) * (alpha + beta));

  // Certify: p_a, p_b, p_ab on the boundary, q strictly outside, and the
  // chord point beyond the boundary point.
  if (radial_value(P, W.p_a) != 1 || radial_value(P, W.p_b) != 1 ||
      radial_value(P, W.p_ab) != 1)
    throw GeometryError("witness boundary points failed certification");
  if (!(norm2(W.q) > norm2(W.p_ab)) || !(radial_value(P, W.q) < 1))
    throw GeometryError("witness gap failed certification");
  return W;
}

ConvexityReport convexity_report_2d(const Polytope& P) {
  if (P.dim != 2) throw GeometryError("convexity_report_2d needs d = 2");
  ConvexityReport rep;
  rep.symmetric = is_origin_symmetric(P);
  rep.origin = origin_position(P);

  if (rep.origin.tag == OriginPosition::FacetInterior) {
    rep.verdict = ConvexityReport::NonConvex;
    rep.reason = ConvexityReport::DiscontinuityAtFacet;
    return rep;
  }
  if (rep.origin.tag != OriginPosition::Interior) {
    rep.verdict = ConvexityReport::NonConvex;
    rep.reason = ConvexityReport::OriginOutsideOrLowFace;
    return rep;
  }

  for (const auto& C : enumerate_chambers(P)) {
    RadialPiece piece = chamber_radial_piece(P, C);
    rep.per_chamber.push_back({C, piece.boundary.total_degree(), piece.parallel_edges});
  }

  if (rep.symmetric) {
    rep.verdict = ConvexityReport::Convex;
    return rep;
  }
  rep.verdict = ConvexityReport::NonConvex;
  rep.reason = ConvexityReport::NonParallelChamber;
  for (const auto& pc : rep.per_chamber) {
    if (pc.chamber.crossed_edges.size() == 2 && !pc.parallel_edges) {
      rep.witness = nonconvexity_witness(P, pc.chamber);
      break;
    }
  }
  return rep;
}

bool gardner_check(const Polytope& P) {
  if (P.dim != 2) throw GeometryError("gardner_check needs d = 2");
  if (!is_origin_symmetric(P)) throw NotSymmetric("P is not origin symmetric");
  for (const auto& C : enumerate_chambers(P)) {
    RadialPiece piece = chamber_radial_piece(P, C);
    if (piece.boundary.total_degree() != 1) return false;
    bool matched = false;
    for (const auto& [i, j] : C.crossed_edges) {
      Vec pi = quarter_turn_scaled(Rat(-2), P.vertices[i]);  // 2 * ccw turn
      Vec pj = quarter_turn_scaled(Rat(-2), P.vertices[j]);
      bool direct = piece.boundary.eval(pi) == 0 && piece.boundary.eval(pj) == 0;
      bool mirror = piece.boundary.eval(neg(pi)) == 0 && piece.boundary.eval(neg(pj)) == 0;
      if (direct || mirror) { matched = true; break; }
    }
    if (!matched) return false;
  }
  return true;
}

Polytope prism_over(const Polytope& L, const Rat& a, const Rat& b) {
  if (L.dim != 2) throw GeometryError("prism base must be 2-dimensional");
  if (!(a < b)) throw DegenerateInput("prism needs a < b");
  std::vector<Vec> pts;
  for (const auto& v : L.vertices) pts.push_back(Vec{v[0], v[1], a});
  for (const auto& v : L.vertices) pts.push_back(Vec{v[0], v[1], b});
  return build_polytope(pts);
}

bool prism_slice_check(const Polytope& L, const Rat& a, const Rat& b, int samples,
                       uint64_t seed) {
  Polytope P = prism_over(L, a, b);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-25, 25);
  int done = 0;
  while (done < samples) {
    Vec u{Rat(coord(rng)), Rat(coord(rng))};
    if (is_zero(u)) continue;
    ++done;
    if (radial_value(P, Vec{u[0], u[1], Rat(0)}) != (b - a) * radial_value(L, u))
      return false;
  }
  return true;
}

namespace {

// Axis-aligned box detection; returns per-coordinate intervals.
std::vector<std::pair<Rat, Rat>> box_intervals(const Polytope& P) {
  const int d = P.dim;
  std::vector<std::pair<Rat, Rat>> iv;
  for (int i = 0; i < d; ++i) {
    std::set<Rat> vals;
    for (const auto& v : P.vertices) vals.insert(v[i]);
    if (vals.size() != 2) throw NotABox("coordinate " + std::to_string(i) +
                                        " does not take exactly two values");
    iv.push_back({*vals.begin(), *vals.rbegin()});
  }
  if (P.vertices.size() != (size_t{1} << d))
    throw NotABox("vertex count is not 2^d");
  std::set<Vec> verts(P.vertices.begin(), P.vertices.end());
  std::vector<int> pick(d, 0);
  for (size_t mask = 0; mask < (size_t{1} << d); ++mask) {
    Vec v(d);
    for (int i = 0; i < d; ++i) v[i] = (mask >> i) & 1 ? iv[i].second : iv[i].first;
    if (!verts.count(v)) throw NotABox("missing a box corner");
  }
  return iv;
}

}  // namespace

ConvexityReport parallelepiped_report(const Polytope& P) {
  auto iv = box_intervals(P);
  const int d = P.dim;
  ConvexityReport rep;
  rep.origin = origin_position(P);
  rep.symmetric = true;
  int bad = -1;
  for (int i = 0; i < d; ++i) {
    if (iv[i].first != -iv[i].second) {
      rep.symmetric = false;
      if (bad < 0) bad = i;
    }
  }
  if (rep.symmetric) {
    rep.verdict = ConvexityReport::Convex;
    return rep;
  }
  rep.verdict = ConvexityReport::NonConvex;
  if (rep.origin.tag == OriginPosition::Interior)
    rep.reason = ConvexityReport::None;
  else if (rep.origin.tag == OriginPosition::FacetInterior)
    rep.reason = ConvexityReport::DiscontinuityAtFacet;
  else
    rep.reason = ConvexityReport::OriginOutsideOrLowFace;

  // Slice away every coordinate except the asymmetric one and one companion;
  // each dropped coordinate is justified by the prism identity.
  SliceChain chain;
  chain.asymmetric_coordinate = bad;
  int companion = bad == 0 ? 1 : 0;
  for (int i = 0; i < d; ++i) {
    if (i != bad && i != companion) chain.dropped_coordinates.push_back(i);
  }
  chain.final_face = {iv[bad], iv[companion]};
  rep.slice_chain = chain;
  return rep;
}

std::vector<std::pair<int, Vec>> admissible_edge_positions(const Polytope& P) {
  if (P.dim != 2) throw GeometryError("admissible_edge_positions needs d = 2");
  const int n = static_cast<int>(P.vertices.size());
  std::vector<std::pair<int, Vec>> out;
  for (int i = 0; i < n; ++i) {
    const Vec& u = P.vertices[i];
    const Vec& v = P.vertices[(i + 1) % n];
    const Vec& wp = P.vertices[(i + n - 1) % n];
    const Vec& wn = P.vertices[(i + 2) % n];
    Vec e = sub(v, u), d1 = sub(wp, u), d2 = sub(wn, v);
    // Adjacent interior angles sum to <= pi iff angle(e, d1) <= angle(e, d2),
    // i.e. (e.d1)|d2| >= (e.d2)|d1|, decided exactly by signs and squaring.
    Rat A = dot(e, d1), B = dot(e, d2);
    bool ok;
    if (A >= 0 && B <= 0) ok = true;
    else if (A < 0 && B >= 0) ok = false;
    else if (A >= 0) ok = A * A * norm2(d2) >= B * B * norm2(d1);
    else ok = A * A * norm2(d2) <= B * B * norm2(d1);
    if (ok) out.push_back({i, scale(Rat(1, 2), add(u, v))});
  }
  return out;
}

ProbeResult midpoint_convexity_probe(const Polytope& P, int pairs, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-50, 50);
  const int d = P.dim;
  ProbeResult res;
  res.min_margin = std::numeric_limits<double>::infinity();
  for (int k = 0; k < pairs; ++k) {
    Vec x(d), y(d);
    for (int i = 0; i < d; ++i) x[i] = coord(rng);
    for (int i = 0; i < d; ++i) y[i] = coord(rng);
    Vec s = add(x, y);
    if (is_zero(x) || is_zero(y) || is_zero(s)) continue;
    Rat rx = radial_value(P, x), ry = radial_value(P, y);
    if (rx + ry == 0) continue;
    Rat margin = radial_value(P, s) - rx * ry / (rx + ry);
    double m = to_double(margin);
    if (m < res.min_margin) res.min_margin = m;
    if (margin < 0 && !res.violator) res.violator = std::make_pair(x, y);
  }
  return res;
}

}  // namespace interbody
