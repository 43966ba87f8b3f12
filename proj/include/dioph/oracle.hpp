#pragma once

// Brute-force reference solvers. These deliberately avoid the
// divisor-quadruple and family machinery: the quartic oracle scans the
// sorted octant directly and expands signs and permutations inline, so
// agreement with the solver modules is evidence, not tautology.

#include "dioph/numeric.hpp"
#include "dioph/quadratic.hpp"
#include "dioph/quartic.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace dioph {

namespace detail {

// Polynomial-form evaluation in machine integers; valid for |x|,|y|,|z|
// up to ~3000 (magnitudes stay below 2^63).
inline std::int64_t eval_quartic_i64(std::int64_t x, std::int64_t y,
                                     std::int64_t z) {
  const std::int64_t x2 = x * x, y2 = y * y, z2 = z * z;
  return x2 * x2 + y2 * y2 + z2 * z2 - 2 * x2 * y2 - 2 * y2 * z2 - 2 * z2 * x2;
}

}  // namespace detail

// Every integer solution of the quartic equation. Any nonnegative
// solution has x + y + z equal to a positive divisor of n, so scanning
// x >= y >= z >= 0 with x + y + z <= n is exhaustive; signs and
// permutations supply the rest.
inline std::set<IntTriple> brute_quartic(const Int& n) {
  if (n < 1) throw std::invalid_argument("brute_quartic: n must be >= 1");
  if (n > 3000) throw std::invalid_argument("brute_quartic: n too large for the oracle scan");
  const std::int64_t nn = n.convert_to<std::int64_t>();
  std::set<IntTriple> out;
  for (std::int64_t x = 0; x <= nn; ++x)
    for (std::int64_t y = 0; y <= x && x + y <= nn; ++y)
      for (std::int64_t z = 0; z <= y && x + y + z <= nn; ++z) {
        if (detail::eval_quartic_i64(x, y, z) != nn) continue;
        // inline sign/permutation expansion
        std::int64_t v[3] = {x, y, z};
        int idx[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (auto& p : idx)
          for (int sx : {1, -1})
            for (int sy : {1, -1})
              for (int sz : {1, -1})
                out.insert({Int(sx * v[p[0]]), Int(sy * v[p[1]]),
                            Int(sz * v[p[2]])});
      }
  return out;
}

// Every integer solution of the quadratic-in-x equation with
// |y|, |z| <= box; x comes from the quadratic formula and is complete
// for each (y, z).
inline std::set<IntTriple> brute_quad(const Int& n, const Int& box) {
  if (n < 1) throw std::invalid_argument("brute_quad: n must be >= 1");
  if (box < 1) throw std::invalid_argument("brute_quad: box must be >= 1");
  std::set<IntTriple> out;
  for (Int y = -box; y <= box; ++y)
    for (Int z = -box; z <= box; ++z)
      for (const Int& x : roots_for(y, z, n)) out.insert({x, y, z});
  return out;
}

enum class CheckMode { quartic, quadratic };

struct Mismatch {
  Int n;
  std::set<IntTriple> solver_set;
  std::set<IntTriple> oracle_set;
};

struct EquivalenceReport {
  Int lo, hi;
  std::vector<Mismatch> mismatches;  // ordered by n
  std::chrono::milliseconds elapsed{0};
};

// Solver-side counterpart of the oracles: full integer solution set.
inline std::set<IntTriple> solver_set_for(const Int& n, CheckMode mode,
                                          const Int& box) {
  if (mode == CheckMode::quartic) {
    std::set<IntTriple> full;
    for (const IntTriple& t : enumerate_nonneg(n)) {
      auto orbit = expand_orbit(t);
      full.insert(orbit.begin(), orbit.end());
    }
    return full;
  }
  return enumerate_integer(n, box);
}

// Per-n set comparison between the solver pipeline and the oracle.
// The thread count only affects wall time; the report is identical to
// a sequential run and ordered by n.
inline EquivalenceReport check_equivalence(const Int& lo, const Int& hi,
                                           CheckMode mode, const Int& box = 0,
                                           unsigned threads = 1) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("check_equivalence: bad range");
  if (mode == CheckMode::quadratic && box < 1)
    throw std::invalid_argument("check_equivalence: quadratic mode needs a box");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t count = (hi - lo + 1).convert_to<std::size_t>();
  std::vector<std::optional<Mismatch>> slots(count);

  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < count; i += step) {
      const Int n = lo + Int(i);
      std::set<IntTriple> solver = solver_set_for(n, mode, box);
      std::set<IntTriple> oracle =
          mode == CheckMode::quartic ? brute_quartic(n) : brute_quad(n, box);
      if (solver != oracle) slots[i] = Mismatch{n, solver, oracle};
    }
  };

  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }

  EquivalenceReport report;
  report.lo = lo;
  report.hi = hi;
  for (auto& slot : slots)
    if (slot) report.mismatches.push_back(std::move(*slot));
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace dioph
