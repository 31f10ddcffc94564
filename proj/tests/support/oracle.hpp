#pragma once

// Sieve-free double loop over (n, m) grid pairs. Each pair is evaluated from
// scratch as 3 * 4^k * k! times the residual, in 128-bit integers:
//   3 * 4^k * n (n+1) ... (n+k-1)
//   - 3w * prod_{i<k} (q + 4(k-2) - 4i) - 12k * prod_{i<k-1} (q + 4(k-2) - 4i),   m = q/4.
// No difference tables, no sieves, no bracketing.

#include <vector>

#include "pascalpell/search.hpp"

namespace oracle {

using pascalpell::EquationFamily;
using pascalpell::MedianDomain;
using pascalpell::QuarterInt;
using pascalpell::Solution;

inline __int128 scaled_residual(const EquationFamily& f, long n, long q) {
  const int k = f.k();
  __int128 lhs = 3;
  for (int i = 0; i < k; ++i) lhs *= 4 * static_cast<__int128>(n + i);
  const long w3 = f.quartile() == pascalpell::Quartile::median ? 6 : f.quartile() == pascalpell::Quartile::q1 ? 12 : 4;
  __int128 top = w3;
  for (int i = 0; i < k; ++i) top *= q + 4 * (k - 2) - 4 * i;
  __int128 next = 12 * k;
  for (int i = 0; i < k - 1; ++i) next *= q + 4 * (k - 2) - 4 * i;
  return lhs - top - next;
}

/// All (n, m) with 2 <= n <= N and m >= 2 on the grid. The m loop for each n stops
/// once the m side exceeds the n side (it is increasing from m = 1 on).
inline std::vector<Solution> brute_force(const EquationFamily& f, long N, MedianDomain d) {
  std::vector<Solution> out;
  const long step = pascalpell::grid_step(d);
  for (long n = 2; n <= N; ++n) {
    for (long q = 8;; q += step) {
      const __int128 r = scaled_residual(f, n, q);
      if (r == 0) out.push_back({n, QuarterInt::from_quarters(q)});
      if (r < 0) break;
    }
  }
  return out;
}

}  // namespace oracle
