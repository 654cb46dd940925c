#include "interbody/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace interbody {

int rank(Matrix m) {
  if (m.empty()) return 0;
  const size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

std::optional<Vec> solve_linear(Matrix A, Vec b) {
  const size_t rows = A.size();
  if (rows == 0) return std::nullopt;
  const size_t cols = A[0].size();
  for (size_t i = 0; i < rows; ++i) A[i].push_back(b[i]);

  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[r], A[piv]);
    Rat lead = A[r][c];
    for (size_t j = c; j <= cols; ++j) A[r][j] /= lead;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rat f = A[i][c];
      for (size_t j = c; j <= cols; ++j) A[i][j] -= f * A[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  // Inconsistency: a zero row with nonzero rhs.
  for (size_t i = r; i < rows; ++i) {
    if (A[i][cols] != 0) return std::nullopt;
  }
  if (pivot_col.size() < cols) return std::nullopt;  // underdetermined
  Vec x(cols, Rat(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = A[i][cols];
  return x;
}

std::optional<std::pair<Vec, Rat>> hyperplane_through(const std::vector<Vec>& points) {
  if (points.empty()) return std::nullopt;
  const size_t d = points[0].size();
  if (points.size() != d) return std::nullopt;
  // Solve for (n, c) with <n, p_i> - c = 0; one-dimensional null space iff
  // the points are affinely independent.
  Matrix m;
  for (const auto& p : points) {
    Vec row = p;
    row.push_back(Rat(-1));
    m.push_back(row);
  }
  // Null-space extraction by elimination over d+1 unknowns.
  const size_t cols = d + 1;
  Matrix A = m;
  std::vector<int> pivot_of_col(cols, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < A.size(); ++c) {
    size_t piv = r;
    while (piv < A.size() && A[piv][c] == 0) ++piv;
    if (piv == A.size()) continue;
    std::swap(A[r], A[piv]);
    Rat lead = A[r][c];
    for (size_t j = c; j < cols; ++j) A[r][j] /= lead;
    for (size_t i = 0; i < A.size(); ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rat f = A[i][c];
      for (size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
    }
    pivot_of_col[c] = static_cast<int>(r);
    ++r;
  }
  if (r != d) return std::nullopt;  // affinely dependent: null space dim > 1
  // Exactly one free column; set it to 1 and back-substitute.
  size_t free_col = cols;
  for (size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] < 0) { free_col = c; break; }
  }
  Vec sol(cols, Rat(0));
  sol[free_col] = 1;
  for (size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) sol[c] = -A[pivot_of_col[c]][free_col];
  }
  Vec normal(sol.begin(), sol.begin() + d);
  Rat offset = sol[d];
  if (is_zero(normal)) return std::nullopt;
  // Normalize: clear denominators, content 1, first nonzero entry positive.
  Int lcm = 1;
  for (const auto& x : sol) lcm = boost::multiprecision::lcm(lcm, denominator(x));
  Int content = 0;
  for (auto& x : sol) {
    x *= lcm;
    content = boost::multiprecision::gcd(content, numerator(x));
  }
  for (auto& x : sol) x /= content;
  int lead_sign = 0;
  for (size_t c = 0; c < d; ++c) {
    if (sol[c] != 0) { lead_sign = sol[c].sign(); break; }
  }
  if (lead_sign < 0) {
    for (auto& x : sol) x = -x;
  }
  normal.assign(sol.begin(), sol.begin() + d);
  offset = sol[d];
  return std::make_pair(normal, offset);
}

namespace {

// Fourier-Motzkin on strict inequalities sum_j a_j x_j > 0 (homogeneous).
// Eliminates variables from the back; returns a witness by back-substitution.
bool fm_feasible(const std::vector<Vec>& ineqs, int dim, Vec& out) {
  if (dim == 0) {
    // Only constant inequalities "0 > 0" possible; feasible iff none remain.
    return ineqs.empty();
  }
  std::vector<Vec> pos, neg, rest;
  for (const auto& a : ineqs) {
    int s = a[dim - 1].sign();
    if (s > 0) pos.push_back(a);
    else if (s < 0) neg.push_back(a);
    else {
      Vec head(a.begin(), a.begin() + dim - 1);
      if (is_zero(head)) return false;  // 0 > 0
      rest.push_back(head);
    }
  }
  // Combine p (coef > 0) with n (coef < 0): eliminate x_{dim-1}.
  for (const auto& p : pos) {
    for (const auto& n : neg) {
      Vec comb(dim - 1);
      bool zero = true;
      for (int j = 0; j < dim - 1; ++j) {
        comb[j] = p[j] * (-n[dim - 1]) + n[j] * p[dim - 1];
        if (comb[j] != 0) zero = false;
      }
      if (zero) return false;
      rest.push_back(comb);
    }
  }
  Vec sub;
  if (!fm_feasible(rest, dim - 1, sub)) return false;
  // Open bounds L < x < U from the original inequalities at the witness.
  bool has_lo = false, has_hi = false;
  Rat lo = 0, hi = 0;
  auto bound = [&](const Vec& a) {
    Rat head = 0;
    for (int j = 0; j < dim - 1; ++j) head += a[j] * sub[j];
    Rat v = -head / a[dim - 1];
    if (a[dim - 1] > 0) {
      if (!has_lo || v > lo) { lo = v; has_lo = true; }
    } else {
      if (!has_hi || v < hi) { hi = v; has_hi = true; }
    }
  };
  for (const auto& a : pos) bound(a);
  for (const auto& a : neg) bound(a);
  Rat x;
  if (has_lo && has_hi) {
    if (!(lo < hi)) return false;
    x = (lo + hi) / 2;
  } else if (has_lo) {
    x = lo + 1;
  } else if (has_hi) {
    x = hi - 1;
  } else {
    x = 0;
  }
  out = sub;
  out.push_back(x);
  return true;
}

}  // namespace

std::optional<Vec> strict_cone_point(const std::vector<Vec>& ineqs, int dim) {
  Vec w;
  if (!fm_feasible(ineqs, dim, w)) return std::nullopt;
  for (const auto& a : ineqs) assert(dot(a, w) > 0);
  return w;
}

}  // namespace interbody
