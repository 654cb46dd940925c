#include "interbody/radial.hpp"

#include <algorithm>
#include <cmath>

namespace interbody {

Rat radial_value(const Polytope& P, const Vec& x) {
  if (is_zero(x)) throw ZeroDirection("x = 0");
  std::vector<Vec> pts;
  try {
    pts = cross_section(P, x);
  } catch (const EmptySection&) {
    return Rat(0);
  }
  Rat nx2 = norm2(x);
  if (P.dim == 2) {
    if (pts.size() < 2) return Rat(0);
    Vec chord = sub(pts.front(), pts.back());
    Rat det = cross2(chord, x);
    return abs(det) / nx2;
  }
  if (P.dim == 3) {
    if (pts.size() < 3) return Rat(0);
    Rat total = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
      total += det3(pts[i], pts[(i + 1) % pts.size()], x);
    }
    return abs(total) / (2 * nx2);
  }
  throw GeometryError("radial_value supports d in {2, 3}");
}

namespace {

double dnorm(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

double radial_oracle(const Polytope& P, const Vec& x) {
  if (is_zero(x)) throw ZeroDirection("x = 0");
  std::vector<Vec> pts;
  try {
    pts = cross_section(P, x);
  } catch (const EmptySection&) {
    return 0.0;
  }
  std::vector<double> xd(x.size());
  for (size_t i = 0; i < x.size(); ++i) xd[i] = to_double(x[i]);
  double nx = dnorm(xd);
  if (P.dim == 2) {
    if (pts.size() < 2) return 0.0;
    double dx = to_double(pts.front()[0]) - to_double(pts.back()[0]);
    double dy = to_double(pts.front()[1]) - to_double(pts.back()[1]);
    return std::sqrt(dx * dx + dy * dy) / nx;
  }
  if (pts.size() < 3) return 0.0;
  // Orthonormal basis of x^perp via Gram-Schmidt on coordinate axes.
  std::vector<double> u = {xd[0] / nx, xd[1] / nx, xd[2] / nx};
  std::vector<double> e1(3), e2(3);
  int axis = std::abs(u[0]) < std::abs(u[1])
                 ? (std::abs(u[0]) < std::abs(u[2]) ? 0 : 2)
                 : (std::abs(u[1]) < std::abs(u[2]) ? 1 : 2);
  std::vector<double> a(3, 0.0);
  a[axis] = 1.0;
  double proj = a[0] * u[0] + a[1] * u[1] + a[2] * u[2];
  for (int i = 0; i < 3; ++i) e1[i] = a[i] - proj * u[i];
  double n1 = dnorm(e1);
  for (int i = 0; i < 3; ++i) e1[i] /= n1;
  e2[0] = u[1] * e1[2] - u[2] * e1[1];
  e2[1] = u[2] * e1[0] - u[0] * e1[2];
  e2[2] = u[0] * e1[1] - u[1] * e1[0];

  std::vector<std::pair<double, double>> planar;
  double cx = 0, cy = 0;
  for (const auto& p : pts) {
    double px = 0, py = 0;
    for (int i = 0; i < 3; ++i) {
      px += to_double(p[i]) * e1[i];
      py += to_double(p[i]) * e2[i];
    }
    planar.push_back({px, py});
    cx += px;
    cy += py;
  }
  cx /= planar.size();
  cy /= planar.size();
  std::sort(planar.begin(), planar.end(), [&](const auto& p, const auto& q) {
    return std::atan2(p.second - cy, p.first - cx) < std::atan2(q.second - cy, q.first - cx);
  });
  double area2 = 0;
  for (size_t i = 0; i < planar.size(); ++i) {
    const auto& p = planar[i];
    const auto& q = planar[(i + 1) % planar.size()];
    area2 += p.first * q.second - p.second * q.first;
  }
  return std::abs(area2) / 2.0 / nx;
}

namespace {

// A section vertex with symbolic identity: either the intersection of a
// crossed edge with x^perp, or the origin vertex of P itself.
struct SectionPoint {
  std::pair<int, int> edge;  // (k, k) encodes the origin vertex k
  Vec at_witness;
  bool is_origin() const { return edge.first == edge.second; }
};

std::vector<SectionPoint> section_points(const Polytope& P, const Chamber& C) {
  std::vector<SectionPoint> pts;
  const Vec& w = C.witness;
  for (const auto& [ia, ib] : C.crossed_edges) {
    Rat sa = dot(P.vertices[ia], w), sb = dot(P.vertices[ib], w);
    Vec p = scale(Rat(1) / (sb - sa),
                  sub(scale(sb, P.vertices[ia]), scale(sa, P.vertices[ib])));
    pts.push_back({{ia, ib}, p});
  }
  int ov = P.origin_vertex();
  if (ov >= 0) pts.push_back({{ov, ov}, Vec(P.dim, Rat(0))});
  if (static_cast<int>(pts.size()) < P.dim) throw EmptySection("section has no interior");

  if (P.dim == 3) {
    // Cyclic order fixed across the chamber; computed at the witness.
    Vec e1;
    if (w[0] != 0 || w[1] != 0) e1 = Vec{-w[1], w[0], Rat(0)};
    else e1 = Vec{Rat(0), -w[2], w[1]};
    Vec e2 = cross3(w, e1);
    Vec centroid(3, Rat(0));
    for (const auto& p : pts) centroid = add(centroid, p.at_witness);
    centroid = scale(Rat(1, static_cast<long>(pts.size())), centroid);
    auto half = [](const Rat& u, const Rat& v) {
      return (v > 0 || (v == 0 && u > 0)) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const SectionPoint& A, const SectionPoint& B) {
      Vec da = sub(A.at_witness, centroid), db = sub(B.at_witness, centroid);
      Rat ua = dot(da, e1), va = dot(da, e2);
      Rat ub = dot(db, e1), vb = dot(db, e2);
      int ha = half(ua, va), hb = half(ub, vb);
      if (ha != hb) return ha < hb;
      return ua * vb - va * ub > 0;
    });
    // Rotate so the point on the lexicographically smallest crossed edge is
    // the fan apex.
    size_t apex = 0;
    for (size_t i = 1; i < pts.size(); ++i) {
      if (pts[i].is_origin()) continue;
      if (pts[apex].is_origin() || pts[i].edge < pts[apex].edge) apex = i;
    }
    std::rotate(pts.begin(), pts.begin() + apex, pts.end());
  }
  return pts;
}

// Numerator vector of the symbolic section point (<b,x> a - <a,x> b) and its
// denominator <b-a, x>; the origin vertex has constant 0 numerator and
// denominator 1.
struct SymbolicPoint {
  std::vector<MPoly> num;
  MPoly den;
  bool in_common_denominator;
};

SymbolicPoint symbolic_point(const Polytope& P, const SectionPoint& sp) {
  const int d = P.dim;
  SymbolicPoint out;
  if (sp.is_origin()) {
    out.num.assign(d, MPoly(d));
    out.den = MPoly::constant(d, Rat(1));
    out.in_common_denominator = false;
    return out;
  }
  const Vec& a = P.vertices[sp.edge.first];
  const Vec& b = P.vertices[sp.edge.second];
  out.num.reserve(d);
  for (int j = 0; j < d; ++j) {
    Vec coeffs(d);
    for (int k = 0; k < d; ++k) coeffs[k] = b[k] * a[j] - a[k] * b[j];
    out.num.push_back(MPoly::linear_form(coeffs));
  }
  out.den = MPoly::linear_form(sub(b, a));
  out.in_common_denominator = true;
  return out;
}

MPoly det2_poly(const std::vector<MPoly>& row, int d) {
  // det of [row; x] for d = 2.
  return row[0] * MPoly::variable(d, 1) - row[1] * MPoly::variable(d, 0);
}

MPoly det3_poly(const std::vector<MPoly>& r0, const std::vector<MPoly>& r1, int d) {
  // det of [r0; r1; x] for d = 3, expanded along the x row.
  MPoly x0 = MPoly::variable(d, 0), x1 = MPoly::variable(d, 1), x2 = MPoly::variable(d, 2);
  MPoly m0 = r0[1] * r1[2] - r0[2] * r1[1];
  MPoly m1 = r0[0] * r1[2] - r0[2] * r1[0];
  MPoly m2 = r0[0] * r1[1] - r0[1] * r1[0];
  return x0 * m0 - x1 * m1 + x2 * m2;
}

}  // namespace

std::vector<SectionSimplex> triangulate_section(const Polytope& P, const Chamber& C) {
  auto pts = section_points(P, C);
  std::vector<SectionSimplex> out;
  if (P.dim == 2) {
    // One simplex per endpoint; signs make the chord determinant positive.
    Vec v1 = pts[0].at_witness, v2 = pts[1].at_witness;
    int s = cross2(sub(v1, v2), C.witness).sign();
    out.push_back({{pts[0].edge}, s});
    out.push_back({{pts[1].edge}, -s});
    return out;
  }
  // d = 3: fan triangles from pts[0].
  for (size_t i = 1; i + 1 < pts.size(); ++i) {
    Rat det = det3(sub(pts[i].at_witness, pts[0].at_witness),
                   sub(pts[i + 1].at_witness, pts[0].at_witness), C.witness);
    out.push_back({{pts[i].edge, pts[i + 1].edge}, det.sign()});
  }
  return out;
}

RadialPiece chamber_radial_piece(const Polytope& P, const Chamber& C) {
  const int d = P.dim;
  if (d != 2 && d != 3) throw GeometryError("symbolic pieces support d in {2, 3}");
  auto pts = section_points(P, C);
  const Vec& w = C.witness;

  // Common denominator: each distinct crossed edge once.
  std::vector<SymbolicPoint> sym;
  for (const auto& sp : pts) sym.push_back(symbolic_point(P, sp));
  MPoly q_full = MPoly::constant(d, Rat(1));
  std::vector<MPoly> edge_factors;
  for (const auto& s : sym) {
    if (s.in_common_denominator) {
      q_full = q_full * s.den;
      edge_factors.push_back(s.den);
    }
  }

  MPoly numerator(d);
  if (d == 2) {
    // Chord determinant over the common denominator.
    std::vector<MPoly> row(2, MPoly(d));
    for (int j = 0; j < 2; ++j)
      row[j] = sym[0].num[j] * sym[1].den - sym[1].num[j] * sym[0].den;
    MPoly raw = det2_poly(row, d);
    // raw / (D0 D1) lifted onto q_full: exact since q_full = prod of the
    // participating denominators here.
    numerator = raw;
    int s = cross2(sub(pts[0].at_witness, pts[1].at_witness), w).sign();
    numerator = numerator.scaled(Rat(s));
  } else {
    for (size_t i = 1; i + 1 < pts.size(); ++i) {
      const auto& p0 = sym[0];
      const auto& pi = sym[i];
      const auto& pj = sym[i + 1];
      // det(Vi D0 - V0 Di, Vj D0 - V0 Dj, x) has an exact factor D0:
      MPoly term = p0.den * det3_poly(pi.num, pj.num, d)
                 - pj.den * det3_poly(pi.num, p0.num, d)
                 - pi.den * det3_poly(p0.num, pj.num, d);
      // Multiply by q_full / (D0 Di Dj), i.e. the denominators of every
      // other crossed edge.
      for (size_t k = 0; k < sym.size(); ++k) {
        if (k == 0 || k == i || k == i + 1) continue;
        if (sym[k].in_common_denominator) term = term * sym[k].den;
      }
      Rat det = det3(sub(pts[i].at_witness, pts[0].at_witness),
                     sub(pts[i + 1].at_witness, pts[0].at_witness), w);
      numerator = numerator + term.scaled(Rat(det.sign()));
    }
    numerator = numerator.scaled(Rat(1, 2));  // (d-1)!
  }

  // Orient: q positive on the chamber, and p accordingly so that
  // rho = p / (|x|^2 q) holds with both positive at the witness.
  int tau = q_full.eval(w).sign();
  MPoly q = q_full.scaled(Rat(tau));
  MPoly p = numerator.scaled(Rat(tau));

  RadialPiece piece;
  piece.chamber = C;
  piece.q = q;
  piece.p = p;

  MPoly nsq = MPoly::norm_squared(d);
  MPoly L(d);
  if (!p.divide_exact(nsq, L))
    throw DivisibilityFailure("numerator not divisible by |x|^2");

  // Reduce the fraction L / q by shared edge linear forms, then normalize.
  MPoly Lr = L, qr = q;
  for (const auto& f : edge_factors) {
    MPoly lq(d), qq(d);
    if (Lr.divide_exact(f, lq) && qr.divide_exact(f, qq)) {
      Lr = lq;
      qr = qq;
    }
  }
  if (qr.eval(w) < 0) {
    Lr = Lr.scaled(Rat(-1));
    qr = qr.scaled(Rat(-1));
  }
  piece.boundary = (qr - Lr).primitive_part();

  if (d == 2) {
    std::vector<std::pair<int, int>> crossed;
    for (const auto& sp : pts) {
      if (!sp.is_origin()) crossed.push_back(sp.edge);
    }
    if (crossed.size() == 2) {
      Vec d1 = sub(P.vertices[crossed[0].second], P.vertices[crossed[0].first]);
      Vec d2 = sub(P.vertices[crossed[1].second], P.vertices[crossed[1].first]);
      piece.parallel_edges = cross2(d1, d2) == 0;
    }
  }
  return piece;
}

}  // namespace interbody
