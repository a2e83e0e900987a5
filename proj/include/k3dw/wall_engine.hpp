#pragma once

// Valid hyperplanes in the Kähler cone, the chamber formula for the reduced
// open invariant, the wall-crossing delta, and BPS integers.
//
// Chamber convention: the open invariant at a generic Kähler class kappa is
//
//   sum over valid liftings g with <kappa, g> > 0 of <L, g> n_g,
//
// which equals (1/2) sum over all valid liftings of sgn<kappa, g> <L, g> n_g
// because reflection in L permutes the liftings, keeps n_g and negates
// <L, g>. Crossing the wall of g changes it by
// (1/2)(sgn<kappa1, g> - sgn<kappa0, g>) <L, g> n_g.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "k3dw/arithmetic.hpp"
#include "k3dw/closed_gw.hpp"
#include "k3dw/error.hpp"
#include "k3dw/lattice.hpp"
#include "k3dw/period_point.hpp"
#include "k3dw/relative.hpp"
#include "k3dw/series.hpp"

namespace k3dw {

inline constexpr const char* kChamberConvention = "symmetric: sum over kappa-positive liftings";

struct KahlerOptions {
  bool require_positive_on_boundary = true;
  std::optional<PeriodPoint> period;  // when set, kappa must be of type (1,1)
};

/// A rational class modeling [omega]; validated at construction.
class KahlerVector {
 public:
  KahlerVector(RationalVector coords, const BoundaryClass& boundary, const KahlerOptions& options = {})
      : coords_(std::move(coords)) {
    if (square(coords_) <= 0) throw Error(ErrorCode::invalid_kahler_class, "Kähler class must have positive square");
    if (options.require_positive_on_boundary && pair(coords_, boundary.vector()) <= 0)
      throw Error(ErrorCode::invalid_kahler_class, "Kähler class must be positive on the boundary curve");
    if (options.period) {
      if (options.period->boundary != boundary)
        throw Error(ErrorCode::boundary_mismatch, "period and Kähler class use different boundary classes");
      if (pair(coords_, options.period->re) != 0 || pair(coords_, options.period->im) != 0)
        throw Error(ErrorCode::invalid_kahler_class, "Kähler class is not of type (1,1) for the period");
    }
  }

  const RationalVector& coords() const noexcept { return coords_; }

 private:
  RationalVector coords_;
};

struct WallRecord {
  mpz_class k;
  LatticeVector lifting;
  mpz_class pairing_with_l;
  mpq_class closed_invariant;
};

inline std::vector<WallRecord> valid_hyperplanes(const RelativeClass& gamma) {
  std::vector<WallRecord> out;
  for (auto& lift : valid_liftings(gamma)) {
    const mpz_class p = pair(gamma.l(), lift.vector);
    mpq_class n = reduced_gw(lift.vector);
    out.push_back({lift.k, std::move(lift.vector), p, std::move(n)});
  }
  return out;
}

/// Offsets k of the walls (with nonzero L-pairing) that contain kappa.
inline std::vector<mpz_class> walls_containing(const std::vector<WallRecord>& walls, const KahlerVector& kappa) {
  std::vector<mpz_class> hits;
  for (const auto& w : walls) {
    if (w.pairing_with_l == 0) continue;
    if (pair(w.lifting, kappa.coords()) == 0) hits.push_back(w.k);
  }
  return hits;
}

namespace detail {

inline void require_chamber(const std::vector<WallRecord>& walls, const KahlerVector& kappa) {
  auto hits = walls_containing(walls, kappa);
  if (hits.empty()) return;
  std::string list;
  for (const auto& k : hits) list += (list.empty() ? "" : ",") + k.get_str();
  throw OnWallError(std::move(hits), "Kähler class lies on the wall(s) k=" + list);
}

inline mpq_class chamber_sum(const std::vector<WallRecord>& walls, const KahlerVector& kappa) {
  mpq_class total = 0;
  for (const auto& w : walls) {
    if (w.pairing_with_l == 0) continue;
    if (pair(w.lifting, kappa.coords()) > 0) total += w.pairing_with_l * w.closed_invariant;
  }
  return total;
}

}  // namespace detail

inline void chamber_check(const RelativeClass& gamma, const KahlerVector& kappa) {
  detail::require_chamber(valid_hyperplanes(gamma), kappa);
}

/// Reduced open invariant of gamma in the chamber of kappa.
inline mpq_class open_invariant(const RelativeClass& gamma, const KahlerVector& kappa) {
  const auto walls = valid_hyperplanes(gamma);
  detail::require_chamber(walls, kappa);
  return detail::chamber_sum(walls, kappa);
}

/// Change of the open invariant along a path from kappa0 to kappa1.
inline mpq_class crossing_delta(const RelativeClass& gamma, const KahlerVector& from, const KahlerVector& to) {
  const auto walls = valid_hyperplanes(gamma);
  detail::require_chamber(walls, from);
  detail::require_chamber(walls, to);
  mpq_class total = 0;
  for (const auto& w : walls) {
    const int jump = sgn(pair(w.lifting, to.coords())) - sgn(pair(w.lifting, from.coords()));
    if (jump == 0 || w.pairing_with_l == 0) continue;
    mpq_class term = w.pairing_with_l * w.closed_invariant;
    term *= jump;
    term /= 2;
    total += term;
  }
  return total;
}

struct BpsEvaluation {
  mpz_class value;
  mpq_class by_mobius;  // sum_{d|D} mu(d) d^-2 open(gamma/d)
  mpq_class by_walls;   // sum over kappa-positive liftings of <L,g> G_{g^2/2+1}
};

/// Both evaluations of the BPS integer, without the agreement check.
inline BpsEvaluation evaluate_bps(const RelativeClass& gamma, const KahlerVector& kappa) {
  const mpz_class divisibility = relative_divisibility(gamma);
  BpsEvaluation out;
  for (const auto& d : divisors(divisibility)) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    mpq_class term = open_invariant(divide(gamma, d), kappa);
    term /= d * d;
    out.by_mobius += mu * term;
  }
  for (const auto& lift : valid_liftings(gamma)) {
    const mpz_class sq = square(lift.vector);
    if (sq < -2) continue;
    if (pair(lift.vector, kappa.coords()) <= 0) continue;
    out.by_walls += pair(gamma.l(), lift.vector) * yz_coefficient(sq / 2 + 1);
  }
  if (out.by_walls.get_den() == 1) out.value = out.by_walls.get_num();
  return out;
}

/// BPS integer Omega(gamma); throws consistency_failure if the two
/// evaluations disagree or are not integral.
inline mpz_class bps_invariant(const RelativeClass& gamma, const KahlerVector& kappa) {
  const BpsEvaluation e = evaluate_bps(gamma, kappa);
  if (e.by_mobius != e.by_walls)
    throw Error(ErrorCode::consistency_failure,
                "BPS evaluations disagree: " + e.by_mobius.get_str() + " vs " + e.by_walls.get_str());
  if (e.by_mobius.get_den() != 1)
    throw Error(ErrorCode::consistency_failure, "BPS value is not an integer: " + e.by_mobius.get_str());
  return e.value;
}

}  // namespace k3dw
