#include <algorithm>

#include <gtest/gtest.h>

#include "k3dw/periods.hpp"
#include "k3dw/relative.hpp"
#include "k3dw/sampling.hpp"
#include "test_support.hpp"

namespace k3dw {
namespace {

using testing::unit;

const BoundaryClass& alpha1_boundary() {
  static const BoundaryClass b(unit(1));
  return b;
}

RelativeClass rel(const LatticeVector& v) { return {v, alpha1_boundary()}; }

// Liftings with square >= -2 content^2 found by scanning |k| <= bound and
// testing each candidate with a divisor loop on the coordinates.
std::vector<std::pair<mpz_class, LatticeVector>> scan_liftings(const RelativeClass& g, long bound) {
  std::vector<std::pair<mpz_class, LatticeVector>> out;
  for (long k = -bound; k <= bound; ++k) {
    const LatticeVector v = g.lifting(k);
    if (v.is_zero()) continue;
    bool nonzero = false;
    for (long d = 1; d <= 64 && !nonzero; ++d) {
      bool divides = true;
      LatticeVector reduced;
      for (std::size_t i = 0; i < kLatticeRank && divides; ++i) {
        divides = v[i] % d == 0;
        reduced[i] = v[i] / d;
      }
      if (divides && square(reduced) / 2 + 1 >= 0) nonzero = true;
    }
    if (nonzero) out.emplace_back(k, v);
  }
  return out;
}

TEST(Relative, SameClass) {
  EXPECT_TRUE(same_class(unit(3), unit(3) + unit(1), unit(1)));
  EXPECT_FALSE(same_class(unit(3), unit(4), unit(1)));
  EXPECT_TRUE(same_class(unit(3), unit(3), unit(1)));
  EXPECT_TRUE(rel(unit(3)) == rel(unit(3) - 9 * unit(1)));
  EXPECT_TRUE(rel(5 * unit(1)).is_zero());
}

TEST(Relative, BoundaryValidation) {
  EXPECT_THROW(BoundaryClass(unit(17)), Error);
  EXPECT_THROW(BoundaryClass(2 * unit(1)), Error);
}

TEST(Relative, Divisibility) {
  EXPECT_EQ(relative_divisibility(rel(unit(3))), 1);
  EXPECT_EQ(relative_divisibility(rel(2 * unit(3))), 2);
  EXPECT_EQ(relative_divisibility(rel(unit(3) + 5 * unit(1))), 1);
  EXPECT_EQ(relative_divisibility(rel(6 * unit(17) + 4 * unit(3) + unit(1))), 2);
  try {
    relative_divisibility(rel(3 * unit(1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::zero_class);
  }
}

TEST(Relative, DivisibilityIsRepresentativeIndependent) {
  Sampler sampler(21);
  for (int n = 0; n < 30; ++n) {
    const BoundaryClass b = sampler.boundary();
    const long d = sampler.uniform(1, 5);
    const RelativeClass g = sampler.relative_class(b, d);
    EXPECT_EQ(relative_divisibility(g), d);
    const RelativeClass shifted(g.lifting(sampler.uniform(-30, 30)), b);
    EXPECT_EQ(relative_divisibility(shifted), d);
    EXPECT_TRUE(divide(g, d) == divide(shifted, d));
    EXPECT_TRUE(mpz_class(d) * divide(g, d) == g);
  }
}

TEST(Relative, LiftingExamples) {
  auto liftings = valid_liftings(rel(unit(3)));
  ASSERT_EQ(liftings.size(), 2u);
  EXPECT_EQ(liftings[0].k, 0);
  EXPECT_EQ(liftings[0].vector, unit(3));
  EXPECT_EQ(liftings[1].k, 1);
  EXPECT_EQ(liftings[1].vector, unit(3) + unit(1));

  liftings = valid_liftings(rel(2 * unit(3)));
  ASSERT_EQ(liftings.size(), 2u);
  EXPECT_EQ(liftings[0].k, 0);
  EXPECT_EQ(liftings[1].k, 2);
  EXPECT_EQ(liftings[1].vector, 2 * unit(3) + 2 * unit(1));
  for (const auto& l : liftings) EXPECT_EQ(square(l.vector), -8);

  liftings = valid_liftings(rel(unit(17)));
  ASSERT_EQ(liftings.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(liftings[i].k, static_cast<long>(i) - 1);
    EXPECT_EQ(pair(unit(1), liftings[i].vector), 2 - 2 * static_cast<long>(i));
  }
}

TEST(Relative, LiftingsMatchBruteForceScan) {
  Sampler sampler(22);
  for (int n = 0; n < 40; ++n) {
    const BoundaryClass b = sampler.boundary();
    const RelativeClass g = sampler.relative_class(b, sampler.uniform(1, 3));
    const auto liftings = valid_liftings(g);
    const auto scanned = scan_liftings(g, 50);
    ASSERT_EQ(liftings.size(), scanned.size());
    for (std::size_t i = 0; i < scanned.size(); ++i) {
      EXPECT_EQ(liftings[i].k, scanned[i].first);
      EXPECT_EQ(liftings[i].vector, scanned[i].second);
    }
  }
}

TEST(Relative, LiftingSymmetries) {
  Sampler sampler(23);
  for (int n = 0; n < 40; ++n) {
    const BoundaryClass b = sampler.boundary();
    const RelativeClass g = sampler.relative_class(b, sampler.uniform(1, 3));
    const auto liftings = valid_liftings(g);
    std::vector<LatticeVector> vectors, reflected, negated;
    for (const auto& l : liftings) {
      vectors.push_back(l.vector);
      reflected.push_back(reflect(l.vector, b.vector()));
      EXPECT_GT(reduced_gw(l.vector), 0);
    }
    for (const auto& l : valid_liftings(-g)) negated.push_back(-l.vector);
    auto by_coords = [](const LatticeVector& x, const LatticeVector& y) { return x.coords() < y.coords(); };
    std::sort(vectors.begin(), vectors.end(), by_coords);
    std::sort(reflected.begin(), reflected.end(), by_coords);
    std::sort(negated.begin(), negated.end(), by_coords);
    EXPECT_EQ(vectors, reflected);
    EXPECT_EQ(vectors, negated);
  }
}

PeriodPoint u_block_period() {
  return {to_rational(unit(17) + unit(18)), to_rational(unit(19) + unit(20)), alpha1_boundary()};
}

TEST(Relative, StronglyPrimitiveWithTrivialNullLattice) {
  const RationalMatrix injective = RationalMatrix::identity(kQuotientRank);
  for (const auto& v : {unit(3), 2 * unit(3), 6 * unit(17) + 4 * unit(3)}) {
    EXPECT_TRUE(strongly_primitive_under(rel(v), injective));
  }
  EXPECT_TRUE(strongly_primitive_under(rel(unit(3)), injective, Strictness::allow_zero_remainder));
  EXPECT_FALSE(strongly_primitive_under(rel(2 * unit(3)), injective, Strictness::allow_zero_remainder));
}

TEST(Relative, StronglyPrimitiveDecompositionWitness) {
  const PeriodPoint s = u_block_period();
  // gamma = 2 [alpha3] + [alpha4] with Z_[alpha4] = 0.
  const RelativeClass remainder = rel(unit(4));
  ASSERT_TRUE(central_charge(s, remainder).is_zero());
  ASSERT_FALSE(remainder.is_zero());
  const RelativeClass gamma = mpz_class(2) * rel(unit(3)) + remainder;
  EXPECT_FALSE(strongly_primitive(gamma, s));

  EXPECT_TRUE(strongly_primitive(rel(unit(17)), s));
  EXPECT_TRUE(strongly_primitive(rel(unit(17) + 3 * unit(19) + unit(5)), s));
  EXPECT_FALSE(strongly_primitive(rel(2 * unit(17) + unit(4)), s));
  EXPECT_FALSE(strongly_primitive(rel(3 * unit(17) + 6 * unit(20) + unit(9)), s));
  EXPECT_THROW(strongly_primitive(rel(unit(1)), s), Error);
}

}  // namespace
}  // namespace k3dw
