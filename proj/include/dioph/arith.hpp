#pragma once

// Trial-division factorization, divisor enumeration and exact integer
// square roots. Everything downstream (quadruple searches, divisor-pair
// parametrizations) sits on these three functions.

#include "dioph/numeric.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dioph {

struct Factorization {
  Int n;
  std::vector<std::pair<Int, unsigned>> factors;  // (prime, exponent), primes increasing
};

inline Factorization factorize(Int n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization result;
  result.n = n;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned exp = 0;
    while (n % p == 0) {
      n /= p;
      ++exp;
    }
    result.factors.emplace_back(p, exp);
  }
  if (n > 1) result.factors.emplace_back(n, 1);
  return result;
}

inline std::vector<Int> divisors(const Factorization& f) {
  std::vector<Int> divs{1};
  for (const auto& [p, exp] : f.factors) {
    const std::size_t base = divs.size();
    Int pk = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

inline std::vector<Int> divisors(const Int& n) { return divisors(factorize(n)); }

struct SqrtResult {
  Int root;  // floor(sqrt(n))
  bool exact;
};

inline SqrtResult integer_sqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("integer_sqrt: n must be >= 0");
  Int root = boost::multiprecision::sqrt(n);
  return {root, root * root == n};
}

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace dioph
