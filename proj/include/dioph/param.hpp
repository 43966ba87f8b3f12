#pragma once

// Parametric generators for the three auxiliary equations
//
//   u^2 - v^2 = k        (divisor pairs of k)
//   u^2 + v^2 = w^2      (classical Pythagorean parametrization)
//   u^2 + k v^2 = w^2    (conic parametrization)

#include "dioph/arith.hpp"
#include "dioph/numeric.hpp"

#include <boost/integer/common_factor.hpp>

#include <stdexcept>
#include <vector>

namespace dioph {

inline Int gcd(const Int& a, const Int& b) { return boost::integer::gcd(a, b); }

struct SquareDiffPair {
  Int u, v;    // u^2 - v^2 = d1*d2, u > v >= 1
  Int d1, d2;  // generating divisor pair, d1 > d2 >= 1, d1 == d2 (mod 2)
};

// All positive solutions of u^2 - v^2 = k, one per admissible divisor pair.
// Empty when k == 2 (mod 4), and also for k = 4 (the only split with
// matching parity is 2*2, which forces v = 0 and is not a positive
// solution -- the d1 > d2 requirement drops it).
inline std::vector<SquareDiffPair> square_diff_pairs(const Int& k) {
  if (k < 2) throw std::invalid_argument("square_diff_pairs: k must be >= 2");
  std::vector<SquareDiffPair> pairs;
  for (const Int& d2 : divisors(k)) {
    const Int d1 = k / d2;
    if (d1 <= d2) continue;
    if ((d1 - d2) % 2 != 0) continue;
    pairs.push_back({(d1 + d2) / 2, (d1 - d2) / 2, d1, d2});
  }
  return pairs;
}

struct PythagoreanTriple {
  Int u, v, w;  // u^2 + v^2 = w^2
};

enum class LegOrder { odd_first, even_first };

inline PythagoreanTriple pythagorean(const Int& d, const Int& k1, const Int& k2,
                                     LegOrder order = LegOrder::odd_first) {
  if (d < 1) throw std::invalid_argument("pythagorean: d must be >= 1");
  if (!(k1 > k2 && k2 >= 1))
    throw std::invalid_argument("pythagorean: need k1 > k2 >= 1");
  if ((k1 + k2) % 2 != 1)
    throw std::invalid_argument("pythagorean: k1 + k2 must be odd");
  if (gcd(k1, k2) != 1)
    throw std::invalid_argument("pythagorean: k1, k2 must be coprime");
  const Int odd_leg = d * (k1 * k1 - k2 * k2);
  const Int even_leg = d * 2 * k1 * k2;
  const Int hyp = d * (k1 * k1 + k2 * k2);
  if (order == LegOrder::odd_first) return {odd_leg, even_leg, hyp};
  return {even_leg, odd_leg, hyp};
}

struct ConicTriple {
  Int u, v, w;             // u^2 + k v^2 = w^2
  Int d, k1, k2, m1, m2;   // generating parameters, k1*k2 = k
};

// One point of u^2 + k v^2 = w^2 from a validated parameter tuple.
inline ConicTriple conic_point(const Int& k, const Int& d, const Int& k1,
                               const Int& k2, const Int& m1, const Int& m2) {
  if (k < 2) throw std::invalid_argument("conic_point: k must be >= 2");
  if (d < 1 || k1 < 1 || k2 < 1 || m1 < 1 || m2 < 1)
    throw std::invalid_argument("conic_point: parameters must be positive");
  if (k1 * k2 != k) throw std::invalid_argument("conic_point: k1*k2 != k");
  if (gcd(m1, m2) != 1)
    throw std::invalid_argument("conic_point: m1, m2 must be coprime");
  const Int t1 = k1 * m1 * m1;
  const Int t2 = k2 * m2 * m2;
  if ((d * t1 - d * t2) % 2 != 0)
    throw std::invalid_argument("conic_point: d*k1*m1^2 and d*k2*m2^2 must match mod 2");
  if (t1 == t2)
    throw std::invalid_argument("conic_point: k1*m1^2 == k2*m2^2 forces u = 0");
  const Int diff = t1 > t2 ? t1 - t2 : t2 - t1;
  return {d * diff / 2, d * m1 * m2, d * (t1 + t2) / 2, d, k1, k2, m1, m2};
}

}  // namespace dioph
