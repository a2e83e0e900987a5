#pragma once

#include <gmpxx.h>

#include "k3dw/boundary.hpp"
#include "k3dw/error.hpp"
#include "k3dw/lattice.hpp"

namespace k3dw {

/// Exact complex number with rational parts.
struct GaussianRational {
  mpq_class re = 0;
  mpq_class im = 0;

  GaussianRational conj() const { return {re, -im}; }
  mpq_class norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }

  GaussianRational inverse() const {
    if (is_zero()) throw Error(ErrorCode::invalid_argument, "inverse of zero");
    const mpq_class n = norm();
    return {re / n, -im / n};
  }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }
};

inline const GaussianRational kImaginaryUnit{0, 1};

/// A vector in L_K3 (x) Q[i], stored as real and imaginary parts.
struct ComplexVector {
  RationalVector re;
  RationalVector im;

  friend bool operator==(const ComplexVector& a, const ComplexVector& b) { return a.re == b.re && a.im == b.im; }
};

/// Complex-bilinear extension of the intersection pairing.
inline GaussianRational pair(const ComplexVector& u, const ComplexVector& v) {
  return {pair(u.re, v.re) - pair(u.im, v.im), pair(u.re, v.im) + pair(u.im, v.re)};
}

/// e^{i theta} as an exact rational point (c, s) on the unit circle.
class UnitAngle {
 public:
  UnitAngle(mpq_class c, mpq_class s) : c_(std::move(c)), s_(std::move(s)) {
    if (c_ * c_ + s_ * s_ != 1) throw Error(ErrorCode::invalid_argument, "angle point is not on the unit circle");
  }

  /// Rational parametrization t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)), t = tan(theta/2).
  static UnitAngle from_half_angle_tangent(const mpq_class& t) {
    const mpq_class denom = 1 + t * t;
    return UnitAngle((1 - t * t) / denom, 2 * t / denom);
  }

  const mpq_class& c() const noexcept { return c_; }
  const mpq_class& s() const noexcept { return s_; }
  GaussianRational as_complex() const { return {c_, s_}; }

 private:
  mpq_class c_;
  mpq_class s_;
};

/// A marked period Omega = re + i im with boundary class L.
struct PeriodPoint {
  RationalVector re;
  RationalVector im;
  BoundaryClass boundary;

  ComplexVector omega() const { return {re, im}; }
};

/// Checks Omega^2 = 0, Omega . conj(Omega) > 0 and Omega . L = 0, in that order.
inline void validate_period(const PeriodPoint& s) {
  if (square(s.re) != square(s.im) || pair(s.re, s.im) != 0)
    throw Error(ErrorCode::omega_square_nonzero, "period does not satisfy Omega^2 = 0");
  if (square(s.re) + square(s.im) <= 0)
    throw Error(ErrorCode::omega_norm_nonpositive, "period does not satisfy Omega.conj(Omega) > 0");
  const auto& l = s.boundary.vector();
  if (pair(l, s.re) != 0 || pair(l, s.im) != 0)
    throw Error(ErrorCode::omega_not_orthogonal_to_boundary, "period is not orthogonal to the boundary class");
}

}  // namespace k3dw
