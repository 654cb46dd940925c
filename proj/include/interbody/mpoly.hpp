#pragma once

#include "interbody/vec.hpp"

#include <map>
#include <string>
#include <vector>

namespace interbody {

// Exponent vectors compared in graded-lexicographic order.
struct GrlexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Zero coefficients are never stored.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(int nvars) : nvars_(nvars) {}

  static MPoly constant(int nvars, const Rat& c);
  static MPoly variable(int nvars, int i);
  // Homogeneous linear form <coeffs, x>.
  static MPoly linear_form(const Vec& coeffs);
  // x_1^2 + ... + x_d^2.
  static MPoly norm_squared(int nvars);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly scaled(const Rat& s) const;

  bool operator==(const MPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  Rat eval(const Vec& x) const;

  // Exact division: quotient if `den` divides this exactly, else nullopt
  // semantics via the bool return.
  bool divide_exact(const MPoly& den, MPoly& quotient) const;

  // Integer coefficients, content 1. Keeps the sign.
  MPoly primitive_part() const;

  // Leading coefficient under grlex.
  Rat leading_coefficient() const;

  const std::map<std::vector<int>, Rat, GrlexLess>& terms() const { return terms_; }
  void set_term(const std::vector<int>& exp, const Rat& coef);

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_ = 0;
  std::map<std::vector<int>, Rat, GrlexLess> terms_;
};

}  // namespace interbody
