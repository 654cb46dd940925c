#include "interbody/arrangement.hpp"

#include "interbody/linalg.hpp"

#include <algorithm>
#include <map>

namespace interbody {

std::vector<CentralHyperplane> central_arrangement(const Polytope& P) {
  std::vector<CentralHyperplane> out;
  for (size_t i = 0; i < P.vertices.size(); ++i) {
    if (is_zero(P.vertices[i])) continue;  // the origin vertex spans no wall
    out.push_back({static_cast<int>(i), P.vertices[i]});
  }
  return out;
}

SignVector cocircuit_of(const Polytope& P, const Vec& x) {
  SignVector s;
  for (const auto& h : central_arrangement(P)) {
    int sg = dot(x, h.normal).sign();
    if (sg == 0) throw OnWall(h.vertex_index);
    s[h.vertex_index] = sg;
  }
  return s;
}

std::vector<std::pair<int, int>> crossed_edges(const Polytope& P, const SignVector& s) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, b] : P.edges) {
    auto ia = s.find(a), ib = s.find(b);
    if (ia == s.end() || ib == s.end()) continue;  // incident to the origin vertex
    if (ia->second != ib->second) out.emplace_back(a, b);
  }
  return out;
}

std::string sign_vector_string(const SignVector& s) {
  std::string out;
  for (const auto& [idx, sg] : s) out += sg > 0 ? '+' : '-';
  return out;
}

namespace {

// Primitive integer representative with positive leading entry; `flip`
// records whether the input pointed the other way.
Vec canonical_direction(Vec v, int& flip) {
  Int lcm = 1;
  for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
  Int content = 0;
  for (auto& x : v) { x *= lcm; content = boost::multiprecision::gcd(content, numerator(x)); }
  for (auto& x : v) x /= content;
  flip = 1;
  for (const auto& x : v) {
    if (x != 0) {
      if (x < 0) flip = -1;
      break;
    }
  }
  if (flip < 0) v = neg(v);
  return v;
}

struct AngularLess2 {
  bool operator()(const Vec& a, const Vec& b) const {
    auto half = [](const Vec& p) {
      if (p[1] > 0 || (p[1] == 0 && p[0] > 0)) return 0;
      return 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross2(a, b) > 0;
  }
};

Chamber make_chamber(const Polytope& P, const Vec& witness) {
  Chamber C;
  C.witness = witness;
  C.cocircuit = cocircuit_of(P, witness);
  C.crossed_edges = crossed_edges(P, C.cocircuit);
  return C;
}

std::vector<Chamber> enumerate_chambers_2d(const Polytope& P) {
  auto hyperplanes = central_arrangement(P);
  // Distinct lines, each represented by a canonical direction vector.
  std::map<Vec, bool> lines;
  for (const auto& h : hyperplanes) {
    int flip;
    lines[canonical_direction(rot90(h.normal), flip)] = true;
  }
  std::vector<Chamber> out;
  if (lines.empty()) return out;
  if (lines.size() == 1) {
    // Half-plane chambers: bounding rays are the two line directions.
    const Vec d = lines.begin()->first;
    Chamber upper = make_chamber(P, rot90(d));
    upper.ray_lo = d;
    upper.ray_hi = neg(d);
    Chamber lower = make_chamber(P, neg(rot90(d)));
    lower.ray_lo = neg(d);
    lower.ray_hi = d;
    out.push_back(upper);
    out.push_back(lower);
    return out;
  }
  std::vector<Vec> rays;
  for (const auto& [d, unused] : lines) {
    rays.push_back(d);
    rays.push_back(neg(d));
  }
  std::sort(rays.begin(), rays.end(), AngularLess2{});
  for (size_t i = 0; i < rays.size(); ++i) {
    const Vec& lo = rays[i];
    const Vec& hi = rays[(i + 1) % rays.size()];
    Chamber C = make_chamber(P, add(lo, hi));
    C.ray_lo = lo;
    C.ray_hi = hi;
    out.push_back(C);
  }
  return out;
}

std::vector<Chamber> enumerate_chambers_3d(const Polytope& P) {
  auto hyperplanes = central_arrangement(P);
  // Group vertex hyperplanes by their line through the origin; vertex signs
  // follow the line sign up to recorded orientation.
  std::vector<Vec> lines;
  std::vector<std::vector<std::pair<int, int>>> members;  // (vertex index, orientation)
  std::map<Vec, size_t> index_of;
  for (const auto& h : hyperplanes) {
    int flip;
    Vec canon = canonical_direction(h.normal, flip);
    auto it = index_of.find(canon);
    if (it == index_of.end()) {
      index_of[canon] = lines.size();
      lines.push_back(canon);
      members.push_back({});
      it = index_of.find(canon);
    }
    members[it->second].push_back({h.vertex_index, flip});
  }
  const size_t m = lines.size();
  std::vector<Chamber> out;
  for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
    std::vector<Vec> ineqs;
    for (size_t l = 0; l < m; ++l) {
      int sg = (mask >> l) & 1 ? -1 : 1;
      ineqs.push_back(sg > 0 ? lines[l] : neg(lines[l]));
    }
    auto w = strict_cone_point(ineqs, P.dim);
    if (!w) continue;
    out.push_back(make_chamber(P, *w));
  }
  return out;
}

}  // namespace

std::vector<Chamber> enumerate_chambers(const Polytope& P) {
  if (P.dim == 2) return enumerate_chambers_2d(P);
  if (P.dim == 3) return enumerate_chambers_3d(P);
  throw GeometryError("chamber enumeration supports d in {2, 3}");
}

}  // namespace interbody
