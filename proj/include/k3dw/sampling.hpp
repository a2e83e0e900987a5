#pragma once

// Seeded generators for property checks. Fully determined by the seed:
// draws come from std::mt19937_64 reduced by modulo, so the sequence is the
// same on every platform.
//
// Distributions:
//   vector(range)          every coordinate uniform in [-range, range]
//   sparse_vector(n, r)    n random positions, each uniform in [-r, r]
//   root()                 x + e_i + m f_i (or with e_i, f_i swapped), x an
//                          E8-part vector with entries in {-1,0,1} on 4
//                          random positions, m = (-2 - x^2)/2; square -2,
//                          primitive
//   relative_class(L, D)   sparse base (4 positions, range 10) made primitive
//                          in the quotient, rejected unless its projection
//                          orthogonal to L has square in [-6, 60], then
//                          scaled by D and shifted by t L, t in [-10, 10]
//   kahler(L)              E8 entries p/q with |p| <= 2, U entries p/q with
//                          |p| <= 10, q in [1,3]; rejected unless square > 0
//                          and nonzero on L, then signed to be positive on L
//   kahler(gamma)          kahler(L) moved orthogonally to L so that the
//                          kappa-positive liftings are those with k > tau,
//                          tau = k_min - 1 + m + p/3 drawn across the valid
//                          offsets; off every wall since tau is not integral
//   angle()                tan(theta/2) = p/q with |p| <= 20, q in [1,20]

#include <cstdint>
#include <optional>
#include <random>

#include <gmpxx.h>

#include "k3dw/boundary.hpp"
#include "k3dw/error.hpp"
#include "k3dw/lattice.hpp"
#include "k3dw/period_point.hpp"
#include "k3dw/relative.hpp"
#include "k3dw/wall_engine.hpp"

namespace k3dw {

struct HyperkahlerTriple {
  RationalVector omega;
  PeriodPoint period;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

  LatticeVector vector(long range = 10) {
    LatticeVector v;
    for (std::size_t i = 0; i < kLatticeRank; ++i) v[i] = uniform(-range, range);
    return v;
  }

  LatticeVector sparse_vector(std::size_t nonzeros, long range) {
    LatticeVector v;
    for (std::size_t n = 0; n < nonzeros; ++n) v[index(kLatticeRank)] = uniform(-range, range);
    return v;
  }

  /// A nonzero vector divided by its content, then scaled to content c.
  LatticeVector vector_with_content(long c, long range = 10) {
    for (;;) {
      LatticeVector v = vector(range);
      const mpz_class g = content(v);
      if (g == 0) continue;
      for (std::size_t i = 0; i < kLatticeRank; ++i) v[i] = v[i] / g * c;
      return v;
    }
  }

  LatticeVector root() {
    LatticeVector r;
    for (int n = 0; n < 4; ++n) r[index(16)] = uniform(-1, 1);
    const mpz_class m = (-2 - square(r)) / 2;
    const std::size_t block = 16 + 2 * index(3);
    if (uniform(0, 1) == 0) {
      r[block] = 1;
      r[block + 1] = m;
    } else {
      r[block] = m;
      r[block + 1] = 1;
    }
    return r;
  }

  BoundaryClass boundary() { return BoundaryClass(root()); }

  /// A relative class of relative divisibility exactly `divisibility`.
  RelativeClass relative_class(const BoundaryClass& boundary, long divisibility) {
    const LatticeVector& l = boundary.vector();
    for (;;) {
      auto q = boundary.quotient_coordinates(sparse_vector(4, 10));
      const mpz_class g = gcd_of(q);
      if (g == 0) continue;
      for (auto& x : q) x /= g;
      const LatticeVector base = boundary.lift(q);
      const mpz_class b = pair(base, l);
      const mpz_class projected_twice = 2 * square(base) + b * b;  // 2 * (square of projection)
      if (projected_twice < -12 || projected_twice > 120) continue;
      LatticeVector rep = mpz_class(divisibility) * base + mpz_class(uniform(-10, 10)) * l;
      return {std::move(rep), boundary};
    }
  }

  mpq_class rational(long range, long max_den) {
    mpq_class q(uniform(-range, range), uniform(1, max_den));
    q.canonicalize();
    return q;
  }

  RationalVector rational_vector(long range, long max_den) {
    RationalVector v;
    for (std::size_t i = 0; i < kLatticeRank; ++i) v[i] = rational(range, max_den);
    return v;
  }

  KahlerVector kahler(const BoundaryClass& boundary) {
    for (;;) {
      RationalVector v;
      for (std::size_t i = 0; i < 16; ++i) v[i] = rational(2, 3);
      for (std::size_t i = 16; i < kLatticeRank; ++i) v[i] = rational(10, 3);
      if (square(v) <= 0) continue;
      const mpq_class on_l = pair(v, boundary.vector());
      if (on_l == 0) continue;
      if (on_l < 0) v = -v;
      return KahlerVector(std::move(v), boundary);
    }
  }

  KahlerVector kahler(const RelativeClass& gamma) {
    const auto liftings = valid_liftings(gamma);
    if (liftings.empty()) return kahler(gamma.boundary());
    const LatticeVector& l = gamma.l();
    const LatticeVector& rep = gamma.representative();
    const mpz_class spread = liftings.back().k - liftings.front().k;
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const RationalVector v = kahler(gamma.boundary()).coords();
      const LatticeVector w = sparse_vector(4, 5);
      RationalVector u = to_rational(w);
      mpq_class half_on_l(pair(w, l), 2);
      half_on_l.canonicalize();
      u = u + half_on_l * to_rational(l);  // now <u, L> = 0
      const mpq_class on_rep = pair(u, to_rational(rep));
      if (on_rep == 0) continue;
      mpq_class tau(uniform(1, 2), 3);
      tau += mpq_class(liftings.front().k - 1 + uniform(0, spread.get_si() + 1));
      const mpq_class step = (-tau * pair(v, to_rational(l)) - pair(v, to_rational(rep))) / on_rep;
      RationalVector kappa = v + step * u;
      if (square(kappa) <= 0) continue;
      return KahlerVector(std::move(kappa), gamma.boundary());
    }
    return kahler(gamma.boundary());
  }

  UnitAngle angle() {
    mpq_class t(uniform(-20, 20), uniform(1, 20));
    t.canonicalize();
    return UnitAngle::from_half_angle_tangent(t);
  }

  /// (omega, Omega, L) with Omega^2 = 0, 2 omega^2 = Omega.conj(Omega),
  /// omega and L orthogonal to Omega: the standard triple on the three U
  /// blocks with L = alpha_1, moved by `reflections` random integral
  /// reflections and scaled by a random rational.
  HyperkahlerTriple hyperkahler_triple(int reflections = 5) {
    LatticeVector re = LatticeVector::unit(17) + LatticeVector::unit(18);
    LatticeVector im = LatticeVector::unit(19) + LatticeVector::unit(20);
    LatticeVector omega = LatticeVector::unit(21) + LatticeVector::unit(22);
    LatticeVector l = LatticeVector::unit(1);
    for (int n = 0; n < reflections; ++n) {
      const LatticeVector r = root();
      re = reflect(re, r);
      im = reflect(im, r);
      omega = reflect(omega, r);
      l = reflect(l, r);
    }
    mpq_class scale(uniform(1, 9), uniform(1, 9));
    scale.canonicalize();
    if (uniform(0, 1) == 0) scale = -scale;
    return {scale * to_rational(omega), PeriodPoint{scale * to_rational(re), scale * to_rational(im), BoundaryClass(l)}};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace k3dw
