#include "interbody/mpoly.hpp"

#include <numeric>
#include <sstream>

namespace interbody {

bool GrlexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

MPoly MPoly::constant(int nvars, const Rat& c) {
  MPoly p(nvars);
  p.set_term(std::vector<int>(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int i) {
  MPoly p(nvars);
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  p.set_term(e, Rat(1));
  return p;
}

MPoly MPoly::linear_form(const Vec& coeffs) {
  MPoly p(static_cast<int>(coeffs.size()));
  for (size_t i = 0; i < coeffs.size(); ++i) {
    std::vector<int> e(coeffs.size(), 0);
    e[i] = 1;
    p.set_term(e, coeffs[i]);
  }
  return p;
}

MPoly MPoly::norm_squared(int nvars) {
  MPoly p(nvars);
  for (int i = 0; i < nvars; ++i) {
    std::vector<int> e(nvars, 0);
    e[i] = 2;
    p.set_term(e, Rat(1));
  }
  return p;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return std::accumulate(terms_.rbegin()->first.begin(), terms_.rbegin()->first.end(), 0);
}

void MPoly::set_term(const std::vector<int>& exp, const Rat& coef) {
  if (coef == 0) terms_.erase(exp);
  else terms_[exp] = coef;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) {
    auto it = r.terms_.find(e);
    if (it == r.terms_.end()) {
      r.terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + o.scaled(Rat(-1)); }

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<int> e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(e, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

MPoly MPoly::scaled(const Rat& s) const {
  MPoly r(nvars_);
  if (s == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
  return r;
}

Rat MPoly::eval(const Vec& x) const {
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat m = c;
    for (int i = 0; i < nvars_; ++i) {
      for (int k = 0; k < e[i]; ++k) m *= x[i];
    }
    total += m;
  }
  return total;
}

bool MPoly::divide_exact(const MPoly& den, MPoly& quotient) const {
  // Greedy leading-term division under grlex. If the input is an exact
  // multiple of den the loop terminates at zero, otherwise it stalls on a
  // leading term the divisor cannot absorb.
  quotient = MPoly(nvars_);
  if (den.terms_.empty()) return false;
  MPoly rem = *this;
  const auto& dlead = *den.terms_.rbegin();
  while (!rem.terms_.empty()) {
    const auto& rlead = *rem.terms_.rbegin();
    std::vector<int> e(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      e[i] = rlead.first[i] - dlead.first[i];
      if (e[i] < 0) return false;
    }
    Rat c = rlead.second / dlead.second;
    MPoly mono(nvars_);
    mono.set_term(e, c);
    quotient = quotient + mono;
    rem = rem - mono * den;
  }
  return true;
}

Rat MPoly::leading_coefficient() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->second;
}

MPoly MPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  Int lcm = 1;
  for (const auto& [e, c] : terms_) lcm = boost::multiprecision::lcm(lcm, denominator(c));
  Int content = 0;
  for (const auto& [e, c] : terms_) {
    content = boost::multiprecision::gcd(content, numerator(Rat(c * lcm)));
  }
  Rat f = Rat(lcm) / Rat(content);
  return scaled(f);
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rat ac = abs(c);
    bool has_var = false;
    for (int i = 0; i < nvars_; ++i) has_var = has_var || e[i] > 0;
    if (ac != 1 || !has_var) os << ac.str();
    bool star = ac != 1 || !has_var;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (star) os << "*";
      star = true;
      if (static_cast<size_t>(i) < names.size()) os << names[i];
      else os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace interbody
