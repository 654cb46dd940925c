#include "interbody/rational.hpp"

#include "interbody/errors.hpp"

namespace interbody {

Rat parse_rat(std::string s) {
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  s = first == std::string::npos ? "" : s.substr(first, last - first + 1);
  if (s.empty()) throw GeometryError("empty rational literal");
  auto dotpos = s.find('.');
  if (dotpos != std::string::npos) {
    // Decimal literal: sign, integer part, fractional part.
    bool negative = false;
    size_t start = 0;
    if (s[0] == '+' || s[0] == '-') {
      negative = s[0] == '-';
      start = 1;
    }
    std::string ip = s.substr(start, dotpos - start);
    std::string fp = s.substr(dotpos + 1);
    if (ip.empty()) ip = "0";
    Int num(ip);
    Int den = 1;
    for (char c : fp) {
      if (c < '0' || c > '9') throw GeometryError("bad decimal literal: " + s);
      num = num * 10 + (c - '0');
      den *= 10;
    }
    Rat r(num, den);
    return negative ? Rat(-r) : r;
  }
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw GeometryError("bad rational literal: " + s);
  }
}

std::string rat_to_string(const Rat& r) { return r.str(); }

}  // namespace interbody
