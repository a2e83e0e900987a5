#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "k3dw/k3dw.hpp"

namespace k3dw::testing {

inline LatticeVector unit(std::size_t i) { return LatticeVector::unit(i); }

/// A rational class with prescribed pairings against the first-block roots
/// alpha_i (1-based), zero pairing with the other roots, plus u (e1 + f1).
inline RationalVector with_root_pairings(const std::vector<std::pair<std::size_t, mpq_class>>& targets,
                                         const mpq_class& u = 10) {
  RationalMatrix a(8, 9);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) a(i, j) = pair(unit(i + 1), unit(j + 1));
  for (const auto& [i, value] : targets) a(i - 1, 8) = value;
  for (std::size_t col = 0; col < 8; ++col) {
    std::size_t piv = col;
    while (a(piv, col) == 0) ++piv;
    a.swap_rows(col, piv);
    for (std::size_t r = 0; r < 8; ++r) {
      if (r == col || a(r, col) == 0) continue;
      a.add_row_multiple(r, col, -a(r, col) / a(col, col));
    }
  }
  RationalVector out;
  for (std::size_t i = 0; i < 8; ++i) out[i] = a(i, 8) / a(i, i);
  out[16] = u;
  out[17] = u;
  return out;
}

inline KahlerVector kahler_with_root_pairings(const std::vector<std::pair<std::size_t, mpq_class>>& targets,
                                              const BoundaryClass& boundary) {
  KahlerOptions options;
  options.require_positive_on_boundary = false;
  return KahlerVector(with_root_pairings(targets), boundary, options);
}

/// Brute-force multiple-cover sum: tries every d up to the largest
/// coordinate and divides the vector itself.
inline mpq_class brute_force_reduced_gw(const LatticeVector& beta) {
  mpz_class bound = 0;
  for (const auto& c : beta.coords())
    if (abs(c) > bound) bound = abs(c);
  mpq_class total = 0;
  for (mpz_class d = 1; d <= bound; ++d) {
    bool divides = true;
    LatticeVector reduced;
    for (std::size_t i = 0; i < kLatticeRank && divides; ++i) {
      if (beta[i] % d != 0) divides = false;
      reduced[i] = beta[i] / d;
    }
    if (!divides) continue;
    const mpz_class sq = square(reduced);
    const mpz_class index = sq / 2 + 1;
    if (index < 0) continue;
    mpq_class term(series_cache().coefficient(index.get_ui()), d * d * d);
    term.canonicalize();
    total += term;
  }
  return total;
}

}  // namespace k3dw::testing
