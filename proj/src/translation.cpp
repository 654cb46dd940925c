#include "interbody/translation.hpp"

#include "interbody/linalg.hpp"
#include "interbody/radial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace interbody {

namespace {

// Canonical key: content-1 integer normal with positive leading entry,
// offset scaled along.
std::pair<Vec, Rat> normalize_hyperplane(Vec n, Rat off) {
  Int lcm = 1;
  for (const auto& x : n) lcm = boost::multiprecision::lcm(lcm, denominator(x));
  lcm = boost::multiprecision::lcm(lcm, denominator(off));
  Int content = 0;
  for (auto& x : n) { x *= lcm; content = boost::multiprecision::gcd(content, numerator(x)); }
  off *= lcm;
  if (content != 0) {
    for (auto& x : n) x /= content;
    off /= content;
  }
  int lead = 0;
  for (const auto& x : n) {
    if (x != 0) { lead = x > 0 ? 1 : -1; break; }
  }
  if (lead < 0) { n = neg(n); off = -off; }
  return {n, off};
}

void combinations(int n, int k, std::vector<int>& cur, int start,
                  const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(cur.size()) == k) { fn(cur); return; }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, cur, i + 1, fn);
    cur.pop_back();
  }
}

}  // namespace

std::vector<AffineHyperplane> affine_arrangement(const Polytope& P) {
  const int d = P.dim;
  const int n = static_cast<int>(P.vertices.size());
  std::vector<AffineHyperplane> out;
  std::map<std::pair<Vec, Rat>, bool> seen;
  std::vector<int> cur;
  combinations(n, d, cur, 0, [&](const std::vector<int>& idx) {
    std::vector<Vec> pts;
    for (int i : idx) pts.push_back(neg(P.vertices[i]));
    auto h = hyperplane_through(pts);
    if (!h) return;  // affinely dependent subset spans no hyperplane
    auto key = normalize_hyperplane(h->first, h->second);
    if (seen.count(key)) return;
    seen[key] = true;
    out.push_back({key.first, key.second, idx});
  });
  return out;
}

Region region_of(const std::vector<AffineHyperplane>& L, const Vec& t) {
  Region R;
  R.witness = t;
  for (size_t i = 0; i < L.size(); ++i) {
    Rat v = dot(L[i].normal, t) - L[i].offset;
    int sg = v.sign();
    if (sg == 0) throw OnHyperplane(static_cast<int>(i));
    R.signs.push_back(sg);
  }
  return R;
}

namespace {

std::set<SignVector> cocircuit_set(const Polytope& P, const Vec& t) {
  std::set<SignVector> out;
  for (const auto& C : enumerate_chambers(translate(P, t))) out.insert(C.cocircuit);
  return out;
}

}  // namespace

bool verify_cocircuit_stability(const Polytope& P, const Vec& t1, const Vec& t2) {
  return cocircuit_set(P, t1) == cocircuit_set(P, t2);
}

MPoly radial_polynomial_in_t(const Polytope& P, const std::vector<AffineHyperplane>& L,
                             const Region& R, const SignVector& s, const Vec& x) {
  const int d = P.dim;
  const Vec& w = R.witness;

  // Total-degree <= d-1 monomial basis in t.
  std::vector<std::vector<int>> basis;
  std::vector<int> exp(d, 0);
  std::function<void(int, int)> gen = [&](int pos, int remaining) {
    if (pos == d) { basis.push_back(exp); return; }
    for (int e = 0; e <= remaining; ++e) {
      exp[pos] = e;
      gen(pos + 1, remaining - e);
    }
    exp[pos] = 0;
  };
  gen(0, d - 1);

  auto valid = [&](const Vec& t) {
    try {
      if (region_of(L, t).signs != R.signs) return false;
      return cocircuit_of(translate(P, t), x) == s;
    } catch (const GeometryError&) {
      return false;
    }
  };

  // Held-out offsets, in units of the grid half-width.
  std::vector<Vec> holdout_dirs;
  {
    std::vector<Rat> pool = {Rat(1, 3), Rat(-2, 5), Rat(3, 7), Rat(-4, 9), Rat(5, 11),
                             Rat(-1, 6), Rat(2, 7),  Rat(-3, 8)};
    for (int j = 0; j < 5; ++j) {
      Vec h(d);
      for (int i = 0; i < d; ++i) h[i] = pool[(j + 2 * i) % pool.size()];
      holdout_dirs.push_back(h);
    }
  }

  Rat eps(1, 2);
  std::vector<Vec> nodes, holdout;
  bool placed = false;
  for (int attempt = 0; attempt < 64 && !placed; ++attempt, eps /= 2) {
    nodes.clear();
    holdout.clear();
    bool ok = true;
    std::vector<int> step(d, -1);
    // Tensor grid {-eps, 0, eps}^d around the witness.
    std::function<void(int)> walk = [&](int pos) {
      if (!ok) return;
      if (pos == d) {
        Vec t = w;
        for (int i = 0; i < d; ++i) t[i] += step[i] * eps;
        if (!valid(t)) { ok = false; return; }
        nodes.push_back(t);
        return;
      }
      for (int v = -1; v <= 1 && ok; ++v) {
        step[pos] = v;
        walk(pos + 1);
      }
    };
    walk(0);
    if (!ok) continue;
    for (const auto& h : holdout_dirs) {
      Vec t = add(w, scale(eps, h));
      if (!valid(t)) { ok = false; break; }
      holdout.push_back(t);
    }
    placed = ok;
  }
  if (!placed) throw ChamberMismatch("no valid interpolation grid inside the region");

  Matrix A;
  Vec b;
  for (const auto& t : nodes) {
    Vec row;
    for (const auto& e : basis) {
      Rat m = 1;
      for (int i = 0; i < d; ++i) {
        for (int k = 0; k < e[i]; ++k) m *= t[i];
      }
      row.push_back(m);
    }
    A.push_back(row);
    b.push_back(radial_value(translate(P, t), x));
  }
  auto coeffs = solve_linear(A, b);
  if (!coeffs) throw DegreeExceeded("no polynomial of total degree d-1 fits the grid");

  MPoly poly(d);
  for (size_t j = 0; j < basis.size(); ++j) poly.set_term(basis[j], (*coeffs)[j]);

  for (const auto& t : holdout) {
    if (poly.eval(t) != radial_value(translate(P, t), x))
      throw DegreeExceeded("held-out evaluation mismatch at degree d-1");
  }
  return poly;
}

}  // namespace interbody
