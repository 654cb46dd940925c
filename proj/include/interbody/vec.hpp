#pragma once

#include "interbody/rational.hpp"

#include <vector>

namespace interbody {

using Vec = std::vector<Rat>;

inline Rat dot(const Vec& a, const Vec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scale(const Rat& s, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

inline Vec neg(const Vec& a) { return scale(Rat(-1), a); }

inline bool is_zero(const Vec& a) {
  for (const auto& x : a) if (x != 0) return false;
  return true;
}

inline Rat norm2(const Vec& a) { return dot(a, a); }

// 2D only: counterclockwise quarter turn.
inline Vec rot90(const Vec& a) { return Vec{-a[1], a[0]}; }

// 2D cross product / 3D cross product.
inline Rat cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

inline Vec cross3(const Vec& a, const Vec& b) {
  return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
             a[0] * b[1] - a[1] * b[0]};
}

// det of the 3x3 matrix with rows a, b, c.
inline Rat det3(const Vec& a, const Vec& b, const Vec& c) {
  return dot(a, cross3(b, c));
}

}  // namespace interbody
