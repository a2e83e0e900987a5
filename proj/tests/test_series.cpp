#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "k3dw/series.hpp"

namespace k3dw {
namespace {

// Independent route: partition numbers by the coin-change recurrence, then
// 24 naive truncated convolutions.
std::vector<mpz_class> product_oracle(std::size_t order) {
  std::vector<mpz_class> partitions(order + 1, 0);
  partitions[0] = 1;
  for (std::size_t part = 1; part <= order; ++part)
    for (std::size_t n = part; n <= order; ++n) partitions[n] += partitions[n - part];
  std::vector<mpz_class> power(order + 1, 0);
  power[0] = 1;
  for (int copy = 0; copy < 24; ++copy) {
    std::vector<mpz_class> next(order + 1, 0);
    for (std::size_t i = 0; i <= order; ++i)
      for (std::size_t j = 0; i + j <= order; ++j) next[i + j] += power[i] * partitions[j];
    power = std::move(next);
  }
  return power;
}

TEST(Series, GoldenValues) {
  const std::vector<mpz_class> expected{1, 24, 324, 3200, 25650, 176256};
  EXPECT_EQ(yz_coefficients(5), expected);
  EXPECT_EQ(yz_coefficients(0), std::vector<mpz_class>{1});
}

TEST(Series, MatchesProductOracle) {
  const auto oracle = product_oracle(30);
  SeriesTable table;
  table.extend_to(30);
  for (std::size_t d = 0; d <= 30; ++d) EXPECT_EQ(table[d], oracle[d]) << "d=" << d;
  // Frozen from the oracle.
  EXPECT_EQ(table[10], mpz_class("639249300"));
}

TEST(Series, IndexConventions) {
  EXPECT_EQ(yz_coefficient(1), 24);
  EXPECT_EQ(yz_coefficient(-3), 0);
  EXPECT_EQ(yz_coefficient_at(mpq_class(3, 2)), 0);
  EXPECT_EQ(yz_coefficient_at(mpq_class(-4)), 0);
  EXPECT_EQ(yz_coefficient_at(mpq_class(4, 2)), 324);
}

TEST(Series, StableUnderExtension) {
  SeriesTable small, large;
  small.extend_to(20);
  large.extend_to(7);
  large.extend_to(60);
  for (std::size_t d = 0; d <= 20; ++d) EXPECT_EQ(small[d], large[d]);
  for (std::size_t d = 0; d <= 60; ++d) EXPECT_GT(large[d], 0);
}

TEST(Series, CapIsEnforced) {
  SeriesTable table(5);
  table.extend_to(5);
  try {
    table.extend_to(6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::series_cap_exceeded);
  }
  EXPECT_EQ(table.order(), 5u);
  EXPECT_THROW(yz_coefficient(mpz_class("100000000000000000000")), Error);
}

TEST(Series, ConcurrentReadersAgree) {
  SeriesCache cache;
  std::vector<std::vector<mpz_class>> seen(4);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < seen.size(); ++t)
    threads.emplace_back([&, t] {
      for (std::size_t d = 0; d <= 300; d += 1 + t) seen[t].push_back(cache.coefficient(d));
    });
  for (auto& th : threads) th.join();
  const auto reference = cache.prefix(300);
  for (std::size_t t = 0; t < seen.size(); ++t)
    for (std::size_t i = 0; i < seen[t].size(); ++i) EXPECT_EQ(seen[t][i], reference[i * (1 + t)]);
}

}  // namespace
}  // namespace k3dw
