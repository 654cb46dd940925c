#include "interbody/polytope.hpp"

#include "interbody/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace interbody {

int Polytope::origin_vertex() const {
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (is_zero(vertices[i])) return static_cast<int>(i);
  }
  return -1;
}

namespace {

void check_dims(const std::vector<Vec>& pts, size_t d) {
  for (const auto& p : pts) {
    if (p.size() != d) throw GeometryError("inconsistent point dimensions");
  }
}

bool full_dimensional(const std::vector<Vec>& pts, int d) {
  Matrix diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  return rank(diffs) == d;
}

// Canonical key for a supporting plane (normal, offset) up to positive scale.
std::pair<Vec, Rat> plane_key(Vec n, Rat c) {
  Int lcm = 1;
  for (const auto& x : n) lcm = boost::multiprecision::lcm(lcm, denominator(x));
  lcm = boost::multiprecision::lcm(lcm, denominator(c));
  Int content = 0;
  for (auto& x : n) { x *= lcm; content = boost::multiprecision::gcd(content, numerator(x)); }
  c *= lcm;
  content = boost::multiprecision::gcd(content, numerator(c));
  for (auto& x : n) x /= content;
  c /= Rat(content);
  return {n, c};
}

}  // namespace

Polytope build_polygon(const std::vector<Vec>& points) {
  if (points.size() < 3) throw DegenerateInput("need at least 3 points");
  check_dims(points, 2);
  std::vector<Vec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw DegenerateInput("fewer than 3 distinct points");

  // Andrew's monotone chain; strict turns drop collinear interior points.
  auto turn = [](const Vec& o, const Vec& a, const Vec& b) {
    return cross2(sub(a, o), sub(b, o));
  };
  std::vector<Vec> hull;
  for (const auto& p : pts) {  // lower
    while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  size_t lower = hull.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper
    while (hull.size() >= lower && turn(hull[hull.size() - 2], hull.back(), *it) <= 0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();
  if (hull.size() < 3) throw DegenerateInput("points are collinear");

  Polytope P;
  P.dim = 2;
  P.vertices = hull;
  const int n = static_cast<int>(hull.size());
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    P.edges.emplace_back(std::min(i, j), std::max(i, j));
    Facet f;
    f.vertices = {i, j};
    f.normal = rot90(sub(hull[j], hull[i]));  // CCW order: left normal is inward
    f.offset = dot(f.normal, hull[i]);
    P.facets.push_back(f);
  }
  return P;
}

namespace {

// Brute-force supporting-plane enumeration for small 3D vertex sets.
std::vector<std::vector<int>> facets_by_wrapping(const std::vector<Vec>& pts) {
  const int n = static_cast<int>(pts.size());
  std::map<std::pair<Vec, Rat>, std::vector<int>> planes;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Vec normal = cross3(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
        if (is_zero(normal)) continue;
        Rat c = dot(normal, pts[i]);
        int lo = 0, hi = 0;
        for (int m = 0; m < n; ++m) {
          int s = Rat(dot(normal, pts[m]) - c).sign();
          lo += s < 0;
          hi += s > 0;
        }
        if (lo > 0 && hi > 0) continue;
        if (hi > 0) { normal = neg(normal); c = -c; }
        auto key = plane_key(normal, c);
        if (planes.count(key)) continue;
        std::vector<int> on;
        for (int m = 0; m < n; ++m) {
          if (dot(key.first, pts[m]) == key.second) on.push_back(m);
        }
        planes[key] = on;
      }
    }
  }
  std::vector<std::vector<int>> out;
  for (auto& [key, on] : planes) out.push_back(on);
  return out;
}

}  // namespace

Polytope build_polytope(const std::vector<Vec>& points,
                        const std::vector<std::vector<int>>& facets) {
  if (points.empty()) throw DegenerateInput("no points");
  const int d = static_cast<int>(points[0].size());
  if (d < 3) throw GeometryError("build_polytope expects d >= 3; use build_polygon");
  check_dims(points, d);
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) throw InvalidCombinatorics("duplicate vertices");
    }
  }
  if (!full_dimensional(points, d))
    throw InvalidCombinatorics("polytope is not full-dimensional");

  std::vector<std::vector<int>> facet_sets = facets;
  if (facet_sets.empty()) {
    if (d != 3) throw InvalidCombinatorics("facet lists are required for d >= 4");
    facet_sets = facets_by_wrapping(points);
  }

  Polytope P;
  P.dim = d;
  P.vertices = points;
  for (const auto& fs : facet_sets) {
    if (static_cast<int>(fs.size()) < d)
      throw InvalidCombinatorics("facet with too few vertices");
    // Supporting hyperplane from d affinely independent facet vertices.
    std::optional<std::pair<Vec, Rat>> plane;
    std::vector<Vec> base;
    for (int idx : fs) {
      base.push_back(points.at(idx));
      if (static_cast<int>(base.size()) == d) break;
    }
    plane = hyperplane_through(base);
    if (!plane) {
      // First d vertices dependent; try other combinations of the facet.
      for (size_t a = 0; a < fs.size() && !plane; ++a) {
        std::vector<Vec> alt;
        for (size_t i = 0; i < fs.size(); ++i) {
          if (i == a) continue;
          alt.push_back(points.at(fs[i]));
          if (static_cast<int>(alt.size()) == d) break;
        }
        if (static_cast<int>(alt.size()) == d) plane = hyperplane_through(alt);
      }
    }
    if (!plane) throw InvalidCombinatorics("facet vertices span no hyperplane");
    auto [normal, offset] = *plane;
    for (int idx : fs) {
      if (dot(normal, points.at(idx)) != offset)
        throw InvalidCombinatorics("facet vertices are not coplanar");
    }
    int lo = 0, hi = 0;
    for (const auto& p : points) {
      int s = Rat(dot(normal, p) - offset).sign();
      lo += s < 0;
      hi += s > 0;
    }
    if (lo > 0 && hi > 0)
      throw InvalidCombinatorics("facet hyperplane is not supporting");
    if (lo > 0) { normal = neg(normal); offset = -offset; }
    Facet f;
    f.vertices = fs;
    std::sort(f.vertices.begin(), f.vertices.end());
    f.normal = normal;
    f.offset = offset;
    P.facets.push_back(f);
  }

  // Every vertex must be extreme: it lies on at least d facets.
  std::vector<int> incidence(points.size(), 0);
  for (const auto& f : P.facets) {
    for (int idx : f.vertices) incidence[idx]++;
  }
  for (size_t i = 0; i < points.size(); ++i) {
    if (incidence[i] < d)
      throw InvalidCombinatorics("vertex " + std::to_string(i) + " is not extreme");
  }

  // Edges: facet-pair intersections of cardinality 2.
  std::set<std::pair<int, int>> edge_set;
  for (size_t a = 0; a < P.facets.size(); ++a) {
    for (size_t b = a + 1; b < P.facets.size(); ++b) {
      std::vector<int> common;
      std::set_intersection(P.facets[a].vertices.begin(), P.facets[a].vertices.end(),
                            P.facets[b].vertices.begin(), P.facets[b].vertices.end(),
                            std::back_inserter(common));
      if (common.size() == 2) edge_set.emplace(common[0], common[1]);
    }
  }
  P.edges.assign(edge_set.begin(), edge_set.end());
  return P;
}

Polytope translate(const Polytope& P, const Vec& t) {
  if (static_cast<int>(t.size()) != P.dim) throw GeometryError("translation dimension mismatch");
  Polytope Q = P;
  for (auto& v : Q.vertices) v = add(v, t);
  for (auto& f : Q.facets) f.offset += dot(f.normal, t);
  return Q;
}

OriginPosition origin_position(const Polytope& P) {
  OriginPosition pos;
  std::vector<int> tight;
  for (size_t i = 0; i < P.facets.size(); ++i) {
    Rat g = -P.facets[i].offset;  // <n, 0> - offset
    if (g < 0) {
      pos.tag = OriginPosition::Outside;
      return pos;
    }
    if (g == 0) tight.push_back(static_cast<int>(i));
  }
  if (tight.empty()) {
    pos.tag = OriginPosition::Interior;
    return pos;
  }
  if (tight.size() == 1) {
    pos.tag = OriginPosition::FacetInterior;
    pos.facet = tight[0];
    return pos;
  }
  // The face containing the origin in its relative interior is the
  // intersection of all tight facets.
  pos.tag = OriginPosition::LowerFace;
  for (size_t i = 0; i < P.vertices.size(); ++i) {
    bool on_all = true;
    for (int f : tight) {
      const auto& facet = P.facets[f];
      if (dot(facet.normal, P.vertices[i]) != facet.offset) { on_all = false; break; }
    }
    if (on_all) pos.face_vertices.push_back(static_cast<int>(i));
  }
  return pos;
}

namespace {

// Exact counterclockwise angular order of planar points around the origin.
struct AngularLess {
  bool operator()(const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) const {
    auto half = [](const std::pair<Rat, Rat>& p) {
      // 0: angle in [0, pi), 1: in [pi, 2pi)
      if (p.second > 0 || (p.second == 0 && p.first > 0)) return 0;
      return 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return a.first * b.second - a.second * b.first > 0;
  }
};

}  // namespace

std::vector<Vec> cross_section(const Polytope& P, const Vec& x) {
  if (is_zero(x)) throw ZeroDirection("x = 0");
  std::vector<Rat> s(P.vertices.size());
  int lo = 0, hi = 0;
  for (size_t i = 0; i < P.vertices.size(); ++i) {
    s[i] = dot(P.vertices[i], x);
    lo += s[i] < 0;
    hi += s[i] > 0;
  }
  if (lo == static_cast<int>(P.vertices.size()) ||
      hi == static_cast<int>(P.vertices.size()))
    throw EmptySection("hyperplane misses the polytope");

  std::vector<Vec> pts;
  for (size_t i = 0; i < P.vertices.size(); ++i) {
    if (s[i] == 0) pts.push_back(P.vertices[i]);
  }
  for (const auto& [ia, ib] : P.edges) {
    if (s[ia].sign() * s[ib].sign() < 0) {
      // conv(a,b) cap x^perp = (<b,x> a - <a,x> b) / <b-a, x>
      Vec p = scale(Rat(1) / (s[ib] - s[ia]),
                    sub(scale(s[ib], P.vertices[ia]), scale(s[ia], P.vertices[ib])));
      pts.push_back(p);
    }
  }

  if (P.dim == 2) {
    // Order decreasing along the rotated direction.
    Vec dir = rot90(x);
    std::sort(pts.begin(), pts.end(),
              [&](const Vec& a, const Vec& b) { return dot(a, dir) > dot(b, dir); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
  }

  // d = 3: cyclic order via an exact planar basis of x^perp.
  Vec e1;
  if (x[0] != 0 || x[1] != 0) e1 = Vec{-x[1], x[0], Rat(0)};
  else e1 = Vec{Rat(0), -x[2], x[1]};
  Vec e2 = cross3(x, e1);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  Vec centroid(P.dim, Rat(0));
  for (const auto& p : pts) centroid = add(centroid, p);
  centroid = scale(Rat(1, static_cast<long>(pts.size())), centroid);
  AngularLess less;
  std::sort(pts.begin(), pts.end(), [&](const Vec& a, const Vec& b) {
    Vec da = sub(a, centroid), db = sub(b, centroid);
    return less({dot(da, e1), dot(da, e2)}, {dot(db, e1), dot(db, e2)});
  });
  return pts;
}

}  // namespace interbody
