#pragma once

// Relative classes gamma in H2(X, L) = H2(X) / Z[L] and their liftings.

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "k3dw/boundary.hpp"
#include "k3dw/error.hpp"
#include "k3dw/integer_matrix.hpp"
#include "k3dw/lattice.hpp"
#include "k3dw/period_point.hpp"

namespace k3dw {

/// True iff a - b is an integer multiple of l.
inline bool same_class(const LatticeVector& a, const LatticeVector& b, const LatticeVector& l) {
  const LatticeVector diff = a - b;
  if (diff.is_zero()) return true;
  std::size_t i = 0;
  while (i < kLatticeRank && l[i] == 0) ++i;
  if (i == kLatticeRank) return false;
  if (diff[i] % l[i] != 0) return false;
  const mpz_class k = diff[i] / l[i];
  return diff == k * l;
}

class RelativeClass {
 public:
  RelativeClass(LatticeVector representative, BoundaryClass boundary)
      : representative_(std::move(representative)), boundary_(std::move(boundary)) {}

  const LatticeVector& representative() const noexcept { return representative_; }
  const BoundaryClass& boundary() const noexcept { return boundary_; }
  const LatticeVector& l() const noexcept { return boundary_.vector(); }

  bool is_zero() const { return same_class(representative_, LatticeVector{}, l()); }

  std::vector<mpz_class> quotient_coordinates() const { return boundary_.quotient_coordinates(representative_); }

  /// The lifting representative + k L.
  LatticeVector lifting(const mpz_class& k) const { return representative_ + k * l(); }

  RelativeClass operator-() const { return {-representative_, boundary_}; }

  friend RelativeClass operator+(const RelativeClass& a, const RelativeClass& b) {
    check_boundary(a, b);
    return {a.representative_ + b.representative_, a.boundary_};
  }
  friend RelativeClass operator-(const RelativeClass& a, const RelativeClass& b) { return a + (-b); }
  friend RelativeClass operator*(const mpz_class& k, const RelativeClass& a) {
    return {k * a.representative_, a.boundary_};
  }

  friend bool operator==(const RelativeClass& a, const RelativeClass& b) {
    return a.boundary_ == b.boundary_ && same_class(a.representative_, b.representative_, a.l());
  }

 private:
  static void check_boundary(const RelativeClass& a, const RelativeClass& b) {
    if (a.boundary_ != b.boundary_) throw Error(ErrorCode::boundary_mismatch, "relative classes with different boundaries");
  }

  LatticeVector representative_;
  BoundaryClass boundary_;
};

inline mpz_class gcd_of(const std::vector<mpz_class>& xs) {
  mpz_class g = 0;
  for (const auto& x : xs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

/// Largest D with gamma = D gamma' in the quotient lattice.
inline mpz_class relative_divisibility(const RelativeClass& gamma) {
  const mpz_class d = gcd_of(gamma.quotient_coordinates());
  if (d == 0) throw Error(ErrorCode::zero_class, "divisibility of the zero relative class");
  return d;
}

/// gamma / d as a relative class; d must divide relative_divisibility(gamma).
inline RelativeClass divide(const RelativeClass& gamma, const mpz_class& d) {
  if (d <= 0) throw Error(ErrorCode::invalid_argument, "divisor must be positive");
  auto q = gamma.quotient_coordinates();
  for (auto& x : q) {
    if (x % d != 0) throw Error(ErrorCode::invalid_argument, "relative class is not " + d.get_str() + "-divisible");
    x /= d;
  }
  return {gamma.boundary().lift(q), gamma.boundary()};
}

struct Lifting {
  mpz_class k;           // offset from the representative
  LatticeVector vector;  // representative + k L
};

/// Liftings with nonzero closed invariant, i.e. square >= -2 content^2,
/// sorted by k.
///
/// With s0 = representative^2, b = <representative, L> and D the relative
/// divisibility, (rep + kL)^2 = s0 + 2bk - 2k^2 and content(rep + kL) | D,
/// so every such k satisfies |2k - b| <= sqrt(b^2 + 2 s0 + 4 D^2).
inline std::vector<Lifting> valid_liftings(const RelativeClass& gamma) {
  const mpz_class divisibility = relative_divisibility(gamma);
  const LatticeVector& rep = gamma.representative();
  const mpz_class s0 = square(rep);
  const mpz_class b = pair(rep, gamma.l());
  const mpz_class disc = b * b + 2 * s0 + 4 * divisibility * divisibility;
  std::vector<Lifting> out;
  if (disc < 0) return out;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  mpz_class lo, hi;
  const mpz_class lo_num = b - root;
  const mpz_class hi_num = b + root;
  mpz_cdiv_q_ui(lo.get_mpz_t(), lo_num.get_mpz_t(), 2);
  mpz_fdiv_q_ui(hi.get_mpz_t(), hi_num.get_mpz_t(), 2);
  for (mpz_class k = lo; k <= hi; ++k) {
    LatticeVector v = gamma.lifting(k);
    const mpz_class c = content(v);
    const mpz_class sq = s0 + 2 * b * k - 2 * k * k;
    if (sq >= -2 * c * c) out.push_back({k, std::move(v)});
  }
  return out;
}

enum class Strictness {
  literal,               // the remainder class must be nonzero
  allow_zero_remainder,  // also rejects classes that are k-divisible outright
};

/// Strong primitivity against an arbitrary rational charge map on the
/// quotient (rows act on the 21 quotient coordinates).
///
/// The null lattice N is the integer kernel of the map. Writing Z^21 = M + N
/// with M a complement, gamma = k gamma' + gamma'' with gamma'' in N exactly
/// when the M-component of gamma is k-divisible, and the admissible gamma''
/// then form a coset of kN, so for N != 0 a nonzero gamma'' (and nonzero
/// gamma') always exists.
inline bool strongly_primitive_under(const RelativeClass& gamma, const RationalMatrix& charge_map,
                                     Strictness strictness = Strictness::literal) {
  const auto x = gamma.quotient_coordinates();
  if (gcd_of(x) == 0) throw Error(ErrorCode::zero_class, "strong primitivity of the zero class");
  if (charge_map.cols() != kQuotientRank)
    throw Error(ErrorCode::invalid_argument, "charge map must act on 21 quotient coordinates");

  IntMatrix a(charge_map.rows(), kQuotientRank);
  for (std::size_t r = 0; r < charge_map.rows(); ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < kQuotientRank; ++c)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), charge_map(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < kQuotientRank; ++c) {
      const mpq_class scaled = charge_map(r, c) * lcm;
      a(r, c) = scaled.get_num();
    }
  }
  const ColumnEchelon ech = column_echelon(a);
  if (ech.rank == kQuotientRank) {
    return strictness == Strictness::literal || gcd_of(x) == 1;
  }

  std::vector<mpz_class> image(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < kQuotientRank; ++c) image[r] += a(r, c) * x[c];

  std::vector<mpz_class> complement(ech.rank);
  for (std::size_t j = 0; j < ech.rank; ++j) {
    const std::size_t p = ech.pivot_rows[j];
    mpz_class rhs = image[p];
    for (std::size_t i = 0; i < j; ++i) rhs -= ech.echelon(p, i) * complement[i];
    if (rhs % ech.echelon(p, j) != 0) throw Error(ErrorCode::consistency_failure, "inexact echelon solve");
    complement[j] = rhs / ech.echelon(p, j);
  }
  return gcd_of(complement) == 1;
}

/// Charge map v -> (Re Z_v, Im Z_v) on the quotient basis of the period's boundary frame.
inline RationalMatrix charge_map(const PeriodPoint& s) {
  RationalMatrix m(2, kQuotientRank);
  for (std::size_t j = 0; j < kQuotientRank; ++j) {
    const LatticeVector b = s.boundary.quotient_basis_vector(j);
    m(0, j) = pair(b, s.re);
    m(1, j) = pair(b, s.im);
  }
  return m;
}

inline bool strongly_primitive(const RelativeClass& gamma, const PeriodPoint& s,
                               Strictness strictness = Strictness::literal) {
  validate_period(s);
  if (gamma.boundary() != s.boundary)
    throw Error(ErrorCode::boundary_mismatch, "relative class and period use different boundary classes");
  return strongly_primitive_under(gamma, charge_map(s), strictness);
}

}  // namespace k3dw
