#pragma once

// Genus-zero reduced Gromov-Witten invariants of K3 via the multiple-cover
// formula
//
//   n_beta = sum_{d | content(beta)} d^{-3} G_{(beta/d)^2 / 2 + 1}.
//
// The sum runs over divisors of the content only; for d not dividing beta the
// term is absent (not merely a non-integral index).

#include <gmpxx.h>

#include "k3dw/arithmetic.hpp"
#include "k3dw/error.hpp"
#include "k3dw/lattice.hpp"
#include "k3dw/series.hpp"

namespace k3dw {

struct ClosedInvariant {
  mpq_class value;
  mpz_class beta_square;
  mpz_class divisibility;
};

/// n_beta from the only two numbers it depends on.
inline mpq_class reduced_gw(const mpz_class& beta_square, const mpz_class& divisibility) {
  if (divisibility <= 0) throw Error(ErrorCode::invalid_argument, "divisibility must be positive");
  const mpz_class scale = 2 * divisibility * divisibility;
  if (beta_square % scale != 0)
    throw Error(ErrorCode::invalid_argument, "square " + beta_square.get_str() + " is not compatible with divisibility " +
                                                 divisibility.get_str() + " in an even lattice");
  mpq_class total = 0;
  for (const auto& d : divisors(divisibility)) {
    const mpz_class d_sq = d * d;
    const mpz_class index = beta_square / (2 * d_sq) + 1;
    const mpz_class g = yz_coefficient(index);
    if (g == 0) continue;
    mpq_class term(g, d_sq * d);
    term.canonicalize();
    total += term;
  }
  return total;
}

inline mpq_class reduced_gw(const LatticeVector& beta) {
  if (beta.is_zero()) throw Error(ErrorCode::zero_class, "reduced invariant of the zero class");
  return reduced_gw(square(beta), content(beta));
}

inline ClosedInvariant closed_invariant(const LatticeVector& beta) {
  return {reduced_gw(beta), square(beta), content(beta)};
}

/// G_{4g-3} + G_g / 8 for classes of content exactly 2, where
/// (beta/2)^2 = 2g - 2.
inline mpq_class two_divisible_check(const LatticeVector& beta) {
  if (content(beta) != 2)
    throw Error(ErrorCode::invalid_argument, "two_divisible_check requires content 2, got " + content(beta).get_str());
  const mpz_class half_square = square(beta) / 4;
  const mpz_class genus = half_square / 2 + 1;
  mpq_class eighth(yz_coefficient(genus), 8);
  eighth.canonicalize();
  return mpq_class(yz_coefficient(4 * genus - 3)) + eighth;
}

}  // namespace k3dw
