#pragma once

#include <algorithm>
#include <vector>

#include <gmpxx.h>

#include "k3dw/error.hpp"

namespace k3dw {

/// Positive divisors of n > 0 in increasing order (trial division).
inline std::vector<mpz_class> divisors(const mpz_class& n) {
  if (n <= 0) throw Error(ErrorCode::invalid_argument, "divisors of a nonpositive integer");
  std::vector<mpz_class> low, high;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d * d != n) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

/// Möbius function of n > 0.
inline int mobius(mpz_class n) {
  if (n <= 0) throw Error(ErrorCode::invalid_argument, "mobius of a nonpositive integer");
  int result = 1;
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

inline int sign(const mpq_class& x) { return sgn(x); }

}  // namespace k3dw
