#pragma once

// Closed-form solutions of the two fixed linear systems
//
//   x + y + z = A          x + y + z = A
//   x - y + z = B          x - y + z = B
//   x + y - z = C          x + y - z = C
//                          x - y - z = D
//
// The 3-equation system always has the unique solution
// ((B+C)/2, (A-B)/2, (A-C)/2); the 4-equation system is consistent
// exactly when A + D = B + C, in which case the same triple solves it.

#include "dioph/numeric.hpp"

#include <optional>

namespace dioph {

inline RatTriple solve3(const Rat& a, const Rat& b, const Rat& c) {
  return {(b + c) / 2, (a - b) / 2, (a - c) / 2};
}

inline std::optional<RatTriple> solve4(const Rat& a, const Rat& b, const Rat& c,
                                       const Rat& d) {
  if (a + d != b + c) return std::nullopt;
  return solve3(a, b, c);
}

}  // namespace dioph
