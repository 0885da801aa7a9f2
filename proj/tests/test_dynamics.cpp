#include <random>
#include <vector>

#include "collatz/dynamics.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace collatz;

namespace {

template <Natural N>
std::vector<std::string> as_strings(const Trajectory<N>& t) {
  std::vector<std::string> out;
  for (const auto& v : t.values) out.push_back(v.to_string());
  return out;
}

}  // namespace

TEST_CASE("collatz_step examples") {
  CHECK(collatz_step(std::uint64_t{3}) == 10);
  CHECK(collatz_step(std::uint64_t{10}) == 5);
  CHECK(collatz_step(std::uint64_t{1}) == 4);
  CHECK_THROWS_AS(collatz_step(std::uint64_t{0}), DomainError);
  CHECK_THROWS_AS(collatz_step(std::uint64_t{0xAAAAAAAAAAAAAAABULL}), OverflowError);
}

TEST_CASE("two_adic_valuation") {
  CHECK(two_adic_valuation(std::uint64_t{1}) == 0);
  CHECK(two_adic_valuation(std::uint64_t{16}) == 4);
  CHECK(two_adic_valuation(std::uint64_t{40}) == oracle::valuation(40));
  CHECK(two_adic_valuation(std::uint64_t{40}) == 3);
  CHECK_THROWS_AS(two_adic_valuation(std::uint64_t{0}), DomainError);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> dist(1, std::uint64_t{1} << 60);
  for (int i = 0; i < 5000; ++i) {
    std::uint64_t x = dist(rng);
    unsigned m = two_adic_valuation(x);
    CHECK(x % (std::uint64_t{1} << m) == 0);
    CHECK((x >> m) % 2 == 1);
  }
}

TEST_CASE("odd_step examples") {
  CHECK(odd_step(std::uint64_t{13}) == 5);
  CHECK(odd_step(std::uint64_t{7}) == 11);
  CHECK(odd_step(std::uint64_t{5}) == oracle::next_odd(5));
  CHECK(odd_step(std::uint64_t{5}) == 1);
  CHECK_THROWS_AS(odd_step(std::uint64_t{4}), DomainError);
  CHECK_THROWS_AS(odd_step(std::uint64_t{0xAAAAAAAAAAAAAAABULL}), OverflowError);
  CHECK(odd_step(BigNat(std::uint64_t{0xAAAAAAAAAAAAAAABULL})).is_odd());
}

TEST_CASE("odd_step agrees with iterating the standard map, x <= 1e5") {
  for (std::uint64_t x = 1; x <= 100000; x += 2) {
    REQUIRE(odd_step(x) == oracle::next_odd(x));
    REQUIRE(collatz_step(x) % 2 == 0);
  }
}

TEST_CASE("trajectory examples") {
  auto t3 = trajectory(FastNat{3}, 100);
  CHECK(t3.terminated);
  CHECK(as_strings(t3) == std::vector<std::string>{"3", "10", "5", "16", "8", "4", "2", "1"});
  auto t1 = trajectory(FastNat{1}, 100);
  CHECK(t1.terminated);
  CHECK(as_strings(t1) == std::vector<std::string>{"1", "4", "2", "1"});
  auto t7 = trajectory(FastNat{7}, 2);
  CHECK_FALSE(t7.terminated);
  CHECK(as_strings(t7) == std::vector<std::string>{"7", "22", "11"});
  CHECK_THROWS_AS(trajectory(FastNat{0}, 10), DomainError);
  CHECK_THROWS_AS(trajectory(FastNat{3}, 0), InvalidArgument);
}

TEST_CASE("total_stopping_time examples") {
  auto expect = [](std::uint64_t x, std::uint64_t sigma, std::uint64_t odd) {
    auto r = total_stopping_time(FastNat{x});
    CHECK(oracle::stopping(x) == std::pair{sigma, odd});
    CHECK(r.sigma == sigma);
    CHECK(r.odd_steps == odd);
    CHECK_FALSE(r.capped);
  };
  expect(3, 7, 2);
  expect(1, 3, 1);
  expect(4, 2, 0);

  auto capped = total_stopping_time(FastNat{27}, 10);
  CHECK(capped.capped);
  CHECK(capped.sigma == 10);
}

TEST_CASE("stopping time matches the oracle and the trajectory length") {
  for (std::uint64_t x = 1; x <= 20000; ++x) {
    auto r = total_stopping_time(FastNat{x});
    REQUIRE(oracle::stopping(x) == std::pair{r.sigma, r.odd_steps});
    auto t = trajectory(FastNat{x});
    REQUIRE(t.terminated);
    REQUIRE(r.sigma == t.values.size() - 1);
    if (x > 1) REQUIRE(r.odd_steps <= r.sigma);
  }
}

TEST_CASE("FastNat and BigNat trajectories agree for x <= 1e5") {
  for (std::uint64_t x = 1; x <= 100000; ++x) {
    auto a = total_stopping_time(FastNat{x});
    auto b = total_stopping_time(BigNat(x));
    REQUIRE(a.sigma == b.sigma);
    REQUIRE(a.odd_steps == b.odd_steps);
  }
  // full value lists on a sample
  for (std::uint64_t x : {27ULL, 97ULL, 871ULL, 77031ULL}) {
    CHECK(as_strings(trajectory(FastNat{x})) == as_strings(trajectory(BigNat(x))));
  }
}

TEST_CASE("BigNat trajectory runs past 64 bits") {
  // 2^64 - 1 peaks far beyond a machine word
  auto x = BigNat::from_string("18446744073709551615");
  auto r = total_stopping_time(x);
  CHECK_FALSE(r.capped);
  CHECK_THROWS_AS(total_stopping_time(FastNat{0xFFFFFFFFFFFFFFFFULL}), OverflowError);
}
