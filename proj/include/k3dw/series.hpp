#pragma once

// Coefficients G_d of the Yau-Zaslow series
//
//   q / Delta(q) = prod_{k>0} (1 - q^k)^{-24} = sum_{d>=0} G_d q^d.
//
// Logarithmic differentiation gives q F'/F = 24 sum_n sigma(n) q^n, hence the
// exact recurrence
//
//   n G_n = 24 sum_{k=1}^{n} sigma(k) G_{n-k},
//
// which is what SeriesTable evaluates. The division by n is always exact.

#include <algorithm>
#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "k3dw/error.hpp"

namespace k3dw {

inline constexpr std::size_t kDefaultSeriesCap = 100000;

/// Memoized prefix G_0..G_N. Extending never changes computed entries.
class SeriesTable {
 public:
  explicit SeriesTable(std::size_t cap = kDefaultSeriesCap) : cap_(cap), coefficients_{1}, sigma_{0} {}

  std::size_t cap() const noexcept { return cap_; }
  void set_cap(std::size_t cap) noexcept { cap_ = cap; }

  /// Highest index computed so far.
  std::size_t order() const noexcept { return coefficients_.size() - 1; }

  void extend_to(std::size_t n) {
    if (n > cap_)
      throw Error(ErrorCode::series_cap_exceeded,
                  "order " + std::to_string(n) + " exceeds series cap " + std::to_string(cap_));
    if (n <= order()) return;
    extend_divisor_sums(n);
    coefficients_.reserve(n + 1);
    mpz_class acc;
    for (std::size_t m = coefficients_.size(); m <= n; ++m) {
      acc = 0;
      for (std::size_t k = 1; k <= m; ++k) mpz_addmul_ui(acc.get_mpz_t(), coefficients_[m - k].get_mpz_t(), sigma_[k]);
      acc *= 24;
      mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), m);
      coefficients_.push_back(acc);
    }
  }

  const mpz_class& operator[](std::size_t d) const { return coefficients_.at(d); }
  std::span<const mpz_class> coefficients() const noexcept { return coefficients_; }

 private:
  void extend_divisor_sums(std::size_t n) {
    if (n < sigma_.size()) return;
    n = std::max(n, 2 * sigma_.size());
    sigma_.assign(n + 1, 0);
    for (std::size_t d = 1; d <= n; ++d)
      for (std::size_t m = d; m <= n; m += d) sigma_[m] += d;
  }

  std::size_t cap_;
  std::vector<mpz_class> coefficients_;
  std::vector<unsigned long> sigma_;
};

/// Process-wide table shared by the invariant computations. Readers of
/// computed entries proceed concurrently; extension takes the writer lock.
class SeriesCache {
 public:
  explicit SeriesCache(std::size_t cap = kDefaultSeriesCap) : table_(cap) {}

  void set_cap(std::size_t cap) {
    std::unique_lock lock(mutex_);
    table_.set_cap(cap);
  }
  std::size_t cap() const {
    std::shared_lock lock(mutex_);
    return table_.cap();
  }

  mpz_class coefficient(std::size_t d) {
    {
      std::shared_lock lock(mutex_);
      if (d <= table_.order()) return table_[d];
      if (d > table_.cap())
        throw Error(ErrorCode::series_cap_exceeded,
                    "index " + std::to_string(d) + " exceeds series cap " + std::to_string(table_.cap()));
    }
    std::unique_lock lock(mutex_);
    table_.extend_to(d);
    return table_[d];
  }

  std::vector<mpz_class> prefix(std::size_t n) {
    std::unique_lock lock(mutex_);
    table_.extend_to(n);
    auto all = table_.coefficients();
    return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n + 1)};
  }

 private:
  mutable std::shared_mutex mutex_;
  SeriesTable table_;
};

inline SeriesCache& series_cache() {
  static SeriesCache cache;
  return cache;
}

/// G_0..G_N from the shared cache.
inline std::vector<mpz_class> yz_coefficients(std::size_t n) { return series_cache().prefix(n); }

/// G_d for any integer d; zero for negative d.
inline mpz_class yz_coefficient(const mpz_class& d) {
  if (d < 0) return 0;
  if (!d.fits_ulong_p() || d.get_ui() > series_cache().cap())
    throw Error(ErrorCode::series_cap_exceeded, "index " + d.get_str() + " exceeds series cap");
  return series_cache().coefficient(d.get_ui());
}

/// G at a rational index: zero unless the index is a nonnegative integer.
inline mpz_class yz_coefficient_at(mpq_class index) {
  index.canonicalize();
  if (index.get_den() != 1) return 0;
  return yz_coefficient(index.get_num());
}

}  // namespace k3dw
