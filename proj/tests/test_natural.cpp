#include <limits>
#include <random>

#include "collatz/error.hpp"
#include "collatz/natural.hpp"
#include "doctest.h"

using collatz::BigNat;
using collatz::FastNat;

TEST_CASE("FastNat arithmetic is checked") {
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  CHECK(FastNat{5}.three_x_plus_one() == FastNat{16});
  CHECK_THROWS_AS(FastNat{max / 3 + 1}.three_x_plus_one(), collatz::OverflowError);
  CHECK_NOTHROW(FastNat{(max - 1) / 3}.three_x_plus_one());
  CHECK_THROWS_AS(FastNat{max} + FastNat{1}, collatz::OverflowError);
  CHECK_THROWS_AS(FastNat{std::uint64_t{1} << 33} * FastNat{std::uint64_t{1} << 31}, collatz::OverflowError);
  CHECK_THROWS_AS(FastNat{1} - FastNat{2}, collatz::DomainError);
}

TEST_CASE("BigNat has no overflow and widens FastNat losslessly") {
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  BigNat b = BigNat(FastNat{max}).three_x_plus_one();
  CHECK(b.to_string() == "55340232221128654846");
  CHECK_FALSE(b.to_u64().has_value());
  CHECK(BigNat(FastNat{max}).to_u64() == max);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t v = rng();
    CHECK(BigNat(FastNat{v}).to_string() == std::to_string(v));
    CHECK(BigNat::from_string(std::to_string(v)) == BigNat(v));
  }
}

TEST_CASE("BigNat helpers") {
  CHECK(BigNat::pow2(70).to_string() == "1180591620717411303424");
  CHECK(BigNat::pow3(40).to_string() == "12157665459056928801");
  CHECK(BigNat::pow2(70).trailing_zeros() == 70);
  CHECK(BigNat(45).mod3() == 0);
  CHECK(BigNat(47).mod(6) == 5);
  CHECK(exact_div(BigNat(42), 6) == BigNat(7));
  CHECK_THROWS_AS(exact_div(BigNat(43), 6), collatz::DomainError);
  CHECK_THROWS_AS(BigNat(1) - BigNat(2), collatz::DomainError);
  CHECK_THROWS_AS(BigNat::from_string("12a"), collatz::InvalidArgument);
  CHECK_THROWS_AS(BigNat::from_string(""), collatz::InvalidArgument);
  CHECK(BigNat(3) < BigNat(10));
}
