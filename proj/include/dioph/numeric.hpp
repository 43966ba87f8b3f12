#pragma once

// Exact arithmetic base types shared by every solver path.
// Integers are arbitrary precision; rationals are kept reduced with a
// positive denominator (cpp_rational maintains canonical form).

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <tuple>

namespace dioph {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct IntTriple {
  Int x, y, z;

  friend bool operator==(const IntTriple& a, const IntTriple& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator<(const IntTriple& a, const IntTriple& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  }
};

struct RatTriple {
  Rat x, y, z;

  friend bool operator==(const RatTriple& a, const RatTriple& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator<(const RatTriple& a, const RatTriple& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  }
};

// "p/q" in lowest terms, plain "p" when q == 1. Never floating point.
inline std::string to_string(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string to_string(const Int& n) { return n.str(); }

}  // namespace dioph
