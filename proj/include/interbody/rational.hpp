#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace interbody {

// Exact rational scalar. cpp_rational keeps values canonical (lowest terms,
// positive denominator), which every predicate below relies on.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline int sign(const Rat& r) { return r.sign(); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// Accepts "p", "-p", "p/q" and decimal literals like "-1.5".
Rat parse_rat(std::string s);

std::string rat_to_string(const Rat& r);

}  // namespace interbody
