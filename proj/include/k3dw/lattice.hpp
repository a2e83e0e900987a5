#pragma once

// The K3 lattice (-E8) + (-E8) + U + U + U.
//
// Basis order (1-based, as used in serialized vectors):
//   1..8    first -E8 block, Bourbaki node numbering
//   9..16   second -E8 block, Bourbaki node numbering
//   17,18   first hyperbolic plane U  (e1, f1)
//   19,20   second hyperbolic plane U (e2, f2)
//   21,22   third hyperbolic plane U  (e3, f3)
//
// Gram matrix: each E8 block is the negated Cartan matrix, i.e. -2 on the
// diagonal and +1 exactly on the node pairs {1,3} {3,4} {4,5} {5,6} {6,7}
// {7,8} {2,4}; each U block is [[0,1],[1,0]]. Everything else is 0.

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "k3dw/error.hpp"
#include "k3dw/integer_matrix.hpp"

namespace k3dw {

inline constexpr std::size_t kLatticeRank = 22;

namespace detail {

struct GramEntry {
  std::size_t i;
  std::size_t j;
  int value;
};

// Upper-triangular nonzero entries of the Gram matrix, 0-based.
inline const std::vector<GramEntry>& gram_entries() {
  static const std::vector<GramEntry> entries = [] {
    std::vector<GramEntry> e;
    constexpr std::array<std::pair<int, int>, 7> kE8Edges{
        {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}}};
    for (std::size_t block = 0; block < 2; ++block) {
      const std::size_t offset = 8 * block;
      for (std::size_t node = 0; node < 8; ++node) e.push_back({offset + node, offset + node, -2});
      for (auto [a, b] : kE8Edges) {
        const std::size_t i = offset + static_cast<std::size_t>(std::min(a, b) - 1);
        const std::size_t j = offset + static_cast<std::size_t>(std::max(a, b) - 1);
        e.push_back({i, j, 1});
      }
    }
    for (std::size_t h = 0; h < 3; ++h) e.push_back({16 + 2 * h, 17 + 2 * h, 1});
    return e;
  }();
  return entries;
}

}  // namespace detail

/// A 22-tuple in the fixed K3 lattice basis. `Scalar` is mpz_class for
/// lattice vectors and mpq_class for vectors in the rational span.
template <class Scalar>
class BasicVector {
 public:
  using value_type = Scalar;

  BasicVector() {
    for (auto& c : coords_) c = 0;
  }
  explicit BasicVector(const std::array<Scalar, kLatticeRank>& coords) : coords_(coords) {}
  BasicVector(std::initializer_list<long> coords) {
    if (coords.size() != kLatticeRank)
      throw Error(ErrorCode::invalid_argument, "expected 22 coordinates");
    std::size_t i = 0;
    for (long c : coords) coords_[i++] = c;
  }

  /// Unit coordinate vector; `index` is 1-based to match the basis table.
  static BasicVector unit(std::size_t index) {
    if (index < 1 || index > kLatticeRank)
      throw Error(ErrorCode::invalid_argument, "unit index out of range");
    BasicVector v;
    v.coords_[index - 1] = 1;
    return v;
  }

  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const std::array<Scalar, kLatticeRank>& coords() const noexcept { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  BasicVector& operator+=(const BasicVector& o) {
    for (std::size_t i = 0; i < kLatticeRank; ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  BasicVector& operator-=(const BasicVector& o) {
    for (std::size_t i = 0; i < kLatticeRank; ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  BasicVector& operator*=(const Scalar& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  friend BasicVector operator+(BasicVector a, const BasicVector& b) { return a += b; }
  friend BasicVector operator-(BasicVector a, const BasicVector& b) { return a -= b; }
  friend BasicVector operator-(BasicVector a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  friend BasicVector operator*(const Scalar& s, BasicVector a) { return a *= s; }
  friend BasicVector operator*(BasicVector a, const Scalar& s) { return a *= s; }
  friend BasicVector operator*(long s, BasicVector a) { return a *= Scalar(s); }

  friend bool operator==(const BasicVector& a, const BasicVector& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const BasicVector& a, const BasicVector& b) { return !(a == b); }

 private:
  std::array<Scalar, kLatticeRank> coords_;
};

using LatticeVector = BasicVector<mpz_class>;
using RationalVector = BasicVector<mpq_class>;

inline RationalVector to_rational(const LatticeVector& v) {
  RationalVector out;
  for (std::size_t i = 0; i < kLatticeRank; ++i) out[i] = v[i];
  return out;
}

/// Intersection pairing u^T G v.
template <class Scalar>
Scalar pair(const BasicVector<Scalar>& u, const BasicVector<Scalar>& v) {
  Scalar total = 0;
  for (const auto& e : detail::gram_entries()) {
    if (e.i == e.j) {
      total += e.value * (u[e.i] * v[e.i]);
    } else {
      total += e.value * (u[e.i] * v[e.j] + u[e.j] * v[e.i]);
    }
  }
  return total;
}

inline mpq_class pair(const LatticeVector& u, const RationalVector& v) { return pair(to_rational(u), v); }
inline mpq_class pair(const RationalVector& u, const LatticeVector& v) { return pair(u, to_rational(v)); }

template <class Scalar>
Scalar square(const BasicVector<Scalar>& v) {
  return pair(v, v);
}

/// gcd of the coordinates; 0 exactly for the zero vector.
inline mpz_class content(const LatticeVector& v) {
  mpz_class g = 0;
  for (const auto& c : v.coords()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

/// Reflection in a (-2)-class: v + <r,v> r.
inline LatticeVector reflect(const LatticeVector& v, const LatticeVector& root) {
  if (square(root) != -2)
    throw Error(ErrorCode::not_a_root, "reflection requires a class of square -2, got " + square(root).get_str());
  return v + pair(root, v) * root;
}

/// Integral basis of Z^22 whose first element is p. Requires content(p) == 1.
inline std::array<LatticeVector, kLatticeRank> extend_to_unimodular_basis(const LatticeVector& p) {
  if (content(p) != 1)
    throw Error(ErrorCode::not_primitive, "basis extension requires a primitive vector, content " + content(p).get_str());
  const auto frame = complete_to_unimodular({p.coords().begin(), p.coords().end()});
  std::array<LatticeVector, kLatticeRank> basis;
  for (std::size_t c = 0; c < kLatticeRank; ++c)
    for (std::size_t r = 0; r < kLatticeRank; ++r) basis[c][r] = frame.basis(r, c);
  return basis;
}

inline IntMatrix gram_matrix() {
  IntMatrix g(kLatticeRank, kLatticeRank);
  for (const auto& e : detail::gram_entries()) {
    g(e.i, e.j) = e.value;
    g(e.j, e.i) = e.value;
  }
  return g;
}

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Signature of a symmetric rational matrix by exact congruence
/// diagonalization (symmetric Gaussian elimination).
inline Signature signature(RationalMatrix m) {
  const std::size_t n = m.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      // Bring a nonzero diagonal entry to position k, or create one.
      std::size_t diag = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (m(i, i) != 0) {
          diag = i;
          break;
        }
      if (diag != n) {
        m.swap_rows(k, diag);
        m.swap_cols(k, diag);
      } else {
        std::size_t off = n;
        for (std::size_t j = k + 1; j < n; ++j)
          if (m(k, j) != 0) {
            off = j;
            break;
          }
        if (off == n) {
          ++sig.zero;
          continue;
        }
        // Replace basis vector b_k by b_k + b_off: new diagonal 2*m(k,off).
        m.add_row_multiple(k, off, 1);
        m.add_col_multiple(k, off, 1);
      }
    }
    const mpq_class pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const mpq_class f = m(i, k) / pivot;
      m.add_row_multiple(i, k, -f);
      m.add_col_multiple(i, k, -f);
    }
    if (pivot > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
  }
  return sig;
}

}  // namespace k3dw
