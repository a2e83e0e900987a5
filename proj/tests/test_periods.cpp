#include <gtest/gtest.h>

#include "k3dw/periods.hpp"
#include "k3dw/sampling.hpp"
#include "test_support.hpp"

namespace k3dw {
namespace {

using testing::unit;

const BoundaryClass& alpha1() {
  static const BoundaryClass b(unit(1));
  return b;
}

PeriodPoint example_period() {
  return {to_rational(unit(17) + unit(18)), to_rational(unit(19) + unit(20)), alpha1()};
}

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::invalid_argument;
}

TEST(Periods, ValidateExamples) {
  EXPECT_NO_THROW(validate_period(example_period()));
  const RationalVector ef = to_rational(unit(17) + unit(18));
  EXPECT_EQ(code_of([&] { validate_period({ef, ef, alpha1()}); }), ErrorCode::omega_square_nonzero);
  EXPECT_EQ(code_of([&] { validate_period({RationalVector{}, RationalVector{}, alpha1()}); }),
            ErrorCode::omega_norm_nonpositive);
  // Orthogonal pair of equal positive squares that meets L = alpha_1.
  const PeriodPoint tilted{to_rational(unit(17) + unit(18)), to_rational(unit(19) + unit(20)),
                           BoundaryClass(unit(1) + unit(18))};
  EXPECT_EQ(code_of([&] { validate_period(tilted); }), ErrorCode::omega_not_orthogonal_to_boundary);
}

TEST(Periods, CentralChargeExamples) {
  const PeriodPoint s = example_period();
  EXPECT_TRUE(central_charge(s, {3 * unit(1), alpha1()}).is_zero());
  EXPECT_EQ(central_charge(s, {unit(17), alpha1()}), (GaussianRational{1, 0}));
  EXPECT_EQ(central_charge(s, {unit(17), alpha1()}), central_charge(s, {unit(17) + 7 * unit(1), alpha1()}));
}

TEST(Periods, CentralChargeIsLinearAndLiftingIndependent) {
  Sampler sampler(31);
  for (int n = 0; n < 20; ++n) {
    const HyperkahlerTriple t = sampler.hyperkahler_triple();
    const BoundaryClass& b = t.period.boundary;
    const RelativeClass g1(sampler.vector(), b), g2(sampler.vector(), b);
    EXPECT_EQ(central_charge(t.period, g1 + g2), central_charge(t.period, g1) + central_charge(t.period, g2));
    EXPECT_EQ(central_charge(t.period, g1), central_charge(t.period, {g1.lifting(7), b}));
  }
}

TEST(Periods, WallPairExamples) {
  const PeriodPoint s = example_period();
  const RelativeClass one{unit(17), alpha1()};   // Z = 1
  const RelativeClass i{unit(19), alpha1()};     // Z = i
  const RelativeClass minus_one{-unit(17), alpha1()};
  const RelativeClass two{2 * unit(18) + unit(5), alpha1()};  // Z = 2
  EXPECT_TRUE(is_on_wall_pair(s, one, one));
  EXPECT_FALSE(is_on_wall_pair(s, one, i));
  EXPECT_FALSE(is_on_wall_pair(s, one, minus_one));
  EXPECT_TRUE(is_on_wall_pair(s, one, two));
  EXPECT_TRUE(is_on_wall_pair(s, two, one));
  EXPECT_EQ(code_of([&] { is_on_wall_pair(s, one, {unit(4), alpha1()}); }), ErrorCode::zero_central_charge);
}

TEST(Periods, RotationExamples) {
  const PeriodPoint s = example_period();
  const RationalVector omega = to_rational(unit(21) + unit(22));
  const auto at_zero = rotate(omega, s, UnitAngle(1, 0));
  EXPECT_EQ(at_zero.omega, -s.im);
  EXPECT_EQ(at_zero.holomorphic, (ComplexVector{omega, -s.re}));
  const auto at_right = rotate(omega, s, UnitAngle(0, 1));
  EXPECT_EQ(at_right.omega, s.re);
  EXPECT_EQ(at_right.holomorphic, (ComplexVector{omega, -s.im}));
  EXPECT_EQ(code_of([&] { rotate(2 * omega, s, UnitAngle(1, 0)); }), ErrorCode::normalization_violation);
  EXPECT_EQ(code_of([&] { rotate(s.re, s, UnitAngle(1, 0)); }), ErrorCode::normalization_violation);
  EXPECT_THROW(UnitAngle(1, 1), Error);
}

TEST(Periods, TwistorAtImaginaryUnit) {
  const PeriodPoint s = example_period();
  const RationalVector omega = to_rational(unit(21) + unit(22));
  // -(1/2) Omega + omega + (1/2) conj(Omega) = omega - i im
  const ComplexVector expected{omega, -s.im};
  EXPECT_EQ(twistor_form(omega, s, kImaginaryUnit), expected);
  EXPECT_EQ(code_of([&] { twistor_form(omega, s, GaussianRational{}); }), ErrorCode::zero_twistor_parameter);
}

TEST(Periods, RotationIdentities) {
  Sampler sampler(32);
  for (int n = 0; n < 30; ++n) {
    const HyperkahlerTriple t = sampler.hyperkahler_triple();
    const UnitAngle theta = sampler.angle();
    const auto rotated = rotate(t.omega, t.period, theta);
    EXPECT_EQ(square(rotated.omega), square(t.omega));
    EXPECT_EQ(square(rotated.holomorphic.re), square(rotated.holomorphic.im));
    EXPECT_EQ(pair(rotated.holomorphic.re, rotated.holomorphic.im), 0);
    EXPECT_TRUE(pair(rotated.holomorphic, rotated.holomorphic).is_zero());
    EXPECT_EQ(pair(rotated.omega, rotated.holomorphic.re), 0);
    EXPECT_EQ(pair(rotated.omega, rotated.holomorphic.im), 0);
    EXPECT_EQ(twistor_form(t.omega, t.period, theta.as_complex()), rotated.holomorphic);

    const GaussianRational zeta{sampler.rational(9, 9), sampler.rational(9, 9)};
    if (!zeta.is_zero()) EXPECT_TRUE(pair(twistor_form(t.omega, t.period, zeta), twistor_form(t.omega, t.period, zeta)).is_zero());
  }
}

TEST(Periods, DiscAngleDirection) {
  const PeriodPoint s = example_period();
  EXPECT_EQ(disc_angle_direction(s, {unit(17), alpha1()}), (GaussianRational{0, 1}));
  EXPECT_EQ(disc_angle_direction(s, {unit(19), alpha1()}), (GaussianRational{-1, 0}));
  EXPECT_EQ(code_of([&] { disc_angle_direction(s, {unit(4), alpha1()}); }), ErrorCode::zero_central_charge);

  Sampler sampler(33);
  for (int n = 0; n < 20; ++n) {
    const HyperkahlerTriple t = sampler.hyperkahler_triple();
    const RelativeClass g(sampler.vector(), t.period.boundary);
    const GaussianRational z = central_charge(t.period, g);
    if (z.is_zero()) continue;
    const GaussianRational d = disc_angle_direction(t.period, g);
    // Re(e^{-i theta} Z) = 0 and -Im(e^{-i theta} Z) > 0 for e^{i theta} ~ d.
    const GaussianRational rotated = d.conj() * z;
    EXPECT_EQ(rotated.re, 0);
    EXPECT_GT(-rotated.im, 0);
  }
}

}  // namespace
}  // namespace k3dw
