#pragma once

// Central charges, pairwise walls in complex moduli, and hyperKähler rotation
// of a cohomology triple (omega, Re Omega, Im Omega). All exact.

#include <gmpxx.h>

#include "k3dw/error.hpp"
#include "k3dw/lattice.hpp"
#include "k3dw/period_point.hpp"
#include "k3dw/relative.hpp"

namespace k3dw {

/// Z_gamma(s) = <gamma~, Re Omega> + i <gamma~, Im Omega>; independent of the
/// lifting because Omega is orthogonal to L.
inline GaussianRational central_charge(const PeriodPoint& s, const RelativeClass& gamma) {
  validate_period(s);
  if (gamma.boundary() != s.boundary)
    throw Error(ErrorCode::boundary_mismatch, "relative class and period use different boundary classes");
  const LatticeVector& lift = gamma.representative();
  return {pair(lift, s.re), pair(lift, s.im)};
}

/// Arg Z1 == Arg Z2 exactly: Z1 conj(Z2) is a positive real.
inline bool is_on_wall_pair(const PeriodPoint& s, const RelativeClass& g1, const RelativeClass& g2) {
  const GaussianRational z1 = central_charge(s, g1);
  const GaussianRational z2 = central_charge(s, g2);
  if (z1.is_zero() || z2.is_zero())
    throw Error(ErrorCode::zero_central_charge, "wall test needs nonvanishing central charges");
  const GaussianRational w = z1 * z2.conj();
  return w.im == 0 && w.re > 0;
}

struct RotatedStructure {
  RationalVector omega;  // omega_theta
  ComplexVector holomorphic;  // Omega_theta
};

namespace detail {

inline void check_hyperkahler_triple(const RationalVector& omega, const PeriodPoint& s) {
  validate_period(s);
  if (pair(omega, s.re) != 0 || pair(omega, s.im) != 0)
    throw Error(ErrorCode::normalization_violation, "Kähler form is not orthogonal to Omega");
  if (2 * square(omega) != square(s.re) + square(s.im))
    throw Error(ErrorCode::normalization_violation, "triple does not satisfy 2 omega^2 = Omega.conj(Omega)");
}

// sum_i coeff_i * v_i with Gaussian-rational coefficients on real vectors.
inline ComplexVector combine(std::initializer_list<std::pair<GaussianRational, const RationalVector*>> terms) {
  ComplexVector out;
  for (const auto& [coeff, v] : terms) {
    if (coeff.re != 0) out.re += coeff.re * *v;
    if (coeff.im != 0) out.im += coeff.im * *v;
  }
  return out;
}

}  // namespace detail

/// omega_theta = -Im(e^{-i theta} Omega), Omega_theta = omega - i Re(e^{-i theta} Omega).
inline RotatedStructure rotate(const RationalVector& omega, const PeriodPoint& s, const UnitAngle& theta) {
  detail::check_hyperkahler_triple(omega, s);
  const mpq_class& c = theta.c();
  const mpq_class& sn = theta.s();
  // e^{-i theta} Omega = (c re + s im) + i (c im - s re)
  RationalVector real_part = c * s.re + sn * s.im;
  RationalVector imag_part = c * s.im - sn * s.re;
  return {-imag_part, {omega, -real_part}};
}

/// Omega_zeta = -(i / 2 zeta) Omega + omega - (i/2) zeta conj(Omega).
inline ComplexVector twistor_form(const RationalVector& omega, const PeriodPoint& s, const GaussianRational& zeta) {
  if (zeta.is_zero()) throw Error(ErrorCode::zero_twistor_parameter, "twistor parameter must be nonzero");
  detail::check_hyperkahler_triple(omega, s);
  const GaussianRational half_i{0, mpq_class(1, 2)};
  const GaussianRational a = -(half_i * zeta.inverse());
  const GaussianRational b = -(half_i * zeta);
  // a (re + i im) + b (re - i im) = (a + b) re + i (a - b) im
  const GaussianRational on_re = a + b;
  const GaussianRational on_im = kImaginaryUnit * (a - b);
  ComplexVector out = detail::combine({{on_re, &s.re}, {on_im, &s.im}});
  out.re += omega;
  return out;
}

/// Unnormalized e^{i theta} at the only angle where discs of class gamma can
/// exist: i Z_gamma.
inline GaussianRational disc_angle_direction(const PeriodPoint& s, const RelativeClass& gamma) {
  const GaussianRational z = central_charge(s, gamma);
  if (z.is_zero()) throw Error(ErrorCode::zero_central_charge, "class has vanishing central charge");
  return kImaginaryUnit * z;
}

}  // namespace k3dw
