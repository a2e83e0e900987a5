// Walks through the smallest interesting configuration: boundary L = alpha_1,
// gamma = [alpha_3] and its double, in both chambers of the alpha_3 + alpha_1
// wall.

#include <iostream>

#include "k3dw/k3dw.hpp"

using namespace k3dw;

namespace {

// A Kähler class with <kappa, alpha_3> = a3, <kappa, alpha_1> = a1, zero on
// the other first-block roots, plus 10 (e_1 + f_1) to make the square positive.
KahlerVector kahler(long a1, long a3, const BoundaryClass& boundary) {
  // Inverse of the first E8(-1) block applied to the target pairings.
  RationalMatrix a(8, 9);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) a(i, j) = pair(LatticeVector::unit(i + 1), LatticeVector::unit(j + 1));
  a(0, 8) = a1;
  a(2, 8) = a3;
  for (std::size_t col = 0; col < 8; ++col) {
    std::size_t piv = col;
    while (a(piv, col) == 0) ++piv;
    a.swap_rows(col, piv);
    for (std::size_t r = 0; r < 8; ++r)
      if (r != col && a(r, col) != 0) a.add_row_multiple(r, col, -a(r, col) / a(col, col));
  }
  RationalVector coords;
  for (std::size_t i = 0; i < 8; ++i) coords[i] = a(i, 8) / a(i, i);
  coords[16] = coords[17] = 10;
  KahlerOptions options;
  options.require_positive_on_boundary = false;
  return KahlerVector(coords, boundary, options);
}

}  // namespace

int main() {
  const BoundaryClass boundary(LatticeVector::unit(1));
  const RelativeClass gamma(LatticeVector::unit(3), boundary);

  std::cout << "G_0..G_10:";
  for (const auto& g : yz_coefficients(10)) std::cout << ' ' << g;
  std::cout << "\n\nwalls of [alpha_3]:\n";
  for (const auto& w : valid_hyperplanes(gamma))
    std::cout << "  k=" << w.k << "  <L,lift>=" << w.pairing_with_l << "  n=" << w.closed_invariant << "\n";

  const KahlerVector before = kahler(1, 3, boundary);   // both liftings kappa-positive
  const KahlerVector after = kahler(-4, 3, boundary);   // alpha_3 + alpha_1 flipped
  std::cout << "\nopen [alpha_3]   before: " << open_invariant(gamma, before) << "  after: " << open_invariant(gamma, after)
            << "  delta: " << crossing_delta(gamma, before, after) << "\n";

  const RelativeClass twice = mpz_class(2) * gamma;
  const BpsEvaluation e = evaluate_bps(twice, after);
  std::cout << "open [2 alpha_3] after: " << open_invariant(twice, after) << "  Omega: " << e.value
            << "  Omega([alpha_3]): " << bps_invariant(gamma, after) << "\n";
}
