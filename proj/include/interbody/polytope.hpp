#pragma once

#include "interbody/errors.hpp"
#include "interbody/vec.hpp"

#include <utility>
#include <vector>

namespace interbody {

// One facet: vertex indices plus the inward-pointing supporting inequality
// <normal, y> >= offset for all y in P, with equality exactly on the facet.
struct Facet {
  std::vector<int> vertices;
  Vec normal;
  Rat offset;
};

struct Polytope {
  int dim = 0;
  std::vector<Vec> vertices;
  std::vector<std::pair<int, int>> edges;   // index pairs, first < second
  std::vector<Facet> facets;

  // Index of a vertex equal to the origin, or -1.
  int origin_vertex() const;
};

struct OriginPosition {
  enum Tag { Interior, FacetInterior, LowerFace, Outside } tag;
  int facet = -1;                  // set for FacetInterior
  std::vector<int> face_vertices;  // set for LowerFace (may be a single vertex)
};

// Convex hull in the plane; vertices returned in counterclockwise order,
// interior points and duplicates discarded. Throws DegenerateInput if the
// points are all collinear.
Polytope build_polygon(const std::vector<Vec>& points);

// d >= 3. If `facets` is empty and d == 3, facet combinatorics are computed
// from scratch; for d >= 4 they must be supplied. Facet normals are oriented
// inward and the edge list is derived from facet-pair intersections.
Polytope build_polytope(const std::vector<Vec>& points,
                        const std::vector<std::vector<int>>& facets = {});

Polytope translate(const Polytope& P, const Vec& t);

OriginPosition origin_position(const Polytope& P);

// Vertices of P intersected with the hyperplane orthogonal to x. Points are
// exact; for d=3 they come back in cyclic order, for d=2 ordered decreasing
// along the rotated direction. Throws EmptySection when the hyperplane
// misses P, ZeroDirection when x = 0.
std::vector<Vec> cross_section(const Polytope& P, const Vec& x);

}  // namespace interbody
