#pragma once

#include <memory>
#include <vector>

#include <gmpxx.h>

#include "k3dw/error.hpp"
#include "k3dw/integer_matrix.hpp"
#include "k3dw/lattice.hpp"

namespace k3dw {

inline constexpr std::size_t kQuotientRank = kLatticeRank - 1;

/// The class [L] of the boundary rational curve: square -2, primitive.
/// Carries a unimodular frame whose first basis vector is L, which
/// identifies H2(X)/Z[L] with Z^21.
class BoundaryClass {
 public:
  explicit BoundaryClass(LatticeVector l) : l_(std::move(l)) {
    if (square(l_) != -2) throw Error(ErrorCode::invalid_argument, "boundary class must have square -2");
    if (content(l_) != 1) throw Error(ErrorCode::not_primitive, "boundary class must be primitive");
    frame_ = std::make_shared<const UnimodularFrame>(complete_to_unimodular({l_.coords().begin(), l_.coords().end()}));
  }

  const LatticeVector& vector() const noexcept { return l_; }

  /// Coordinates of v in the frame; entry 0 is the coefficient of L.
  std::vector<mpz_class> frame_coordinates(const LatticeVector& v) const {
    std::vector<mpz_class> out(kLatticeRank);
    for (std::size_t r = 0; r < kLatticeRank; ++r)
      for (std::size_t c = 0; c < kLatticeRank; ++c) out[r] += frame_->inverse(r, c) * v[c];
    return out;
  }

  /// Image of v in the quotient Z^22 / Z L, as 21 integers.
  std::vector<mpz_class> quotient_coordinates(const LatticeVector& v) const {
    auto all = frame_coordinates(v);
    return {all.begin() + 1, all.end()};
  }

  /// A lifting of the quotient element with the given coordinates
  /// (L-coefficient zero).
  LatticeVector lift(const std::vector<mpz_class>& quotient) const {
    if (quotient.size() != kQuotientRank) throw Error(ErrorCode::invalid_argument, "expected 21 quotient coordinates");
    LatticeVector out;
    for (std::size_t j = 0; j < kQuotientRank; ++j) {
      if (quotient[j] == 0) continue;
      for (std::size_t r = 0; r < kLatticeRank; ++r) out[r] += quotient[j] * frame_->basis(r, j + 1);
    }
    return out;
  }

  /// Lattice vector of the j-th quotient basis element (0-based, j < 21).
  LatticeVector quotient_basis_vector(std::size_t j) const {
    LatticeVector out;
    for (std::size_t r = 0; r < kLatticeRank; ++r) out[r] = frame_->basis(r, j + 1);
    return out;
  }

  friend bool operator==(const BoundaryClass& a, const BoundaryClass& b) { return a.l_ == b.l_; }
  friend bool operator!=(const BoundaryClass& a, const BoundaryClass& b) { return !(a == b); }

 private:
  LatticeVector l_;
  std::shared_ptr<const UnimodularFrame> frame_;
};

}  // namespace k3dw
