#include "collatz/dynamics.hpp"
#include "collatz/error.hpp"
#include "collatz/format.hpp"
#include "collatz/increasing.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace collatz;

namespace {

std::string str(const std::vector<BigNat>& v) { return format::join(v); }

}  // namespace

TEST_CASE("n_terms follow the table") {
  CHECK(str(n_terms(2)) == "4 6 9");
  CHECK(str(n_terms(0)) == "1");
  CHECK(str(n_terms(3)) == "8 12 18 27");
  CHECK(str(n_terms(4)) == "16 24 36 54 81");
}

TEST_CASE("n_terms ratio law") {
  for (unsigned q = 0; q <= 40; ++q) {
    auto n = n_terms(q);
    REQUIRE(n.size() == q + 1);
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
      REQUIRE(BigNat(2) * n[i + 1] == BigNat(3) * n[i]);
      REQUIRE(BigNat(6) * n[i] == BigNat(4) * n[i + 1]);
    }
  }
}

TEST_CASE("q_sequence examples") {
  auto s = q_sequence(2, 1);
  CHECK(str(s.values) == "15 23 35 53");
  CHECK(s.verified);
  CHECK(str(q_sequence(0, 1).values) == "3 5");
  CHECK(oracle::next_odd(3) == 5);
  auto s5 = q_sequence(1, 5);
  CHECK(str(s5.values) == "39 59 89");
  CHECK(oracle::next_odd(39) == 59);
  CHECK(oracle::next_odd(59) == 89);
  CHECK_THROWS_AS(q_sequence(1, 25, true), InvalidArgument);
  CHECK_THROWS_AS(q_sequence(1, 0, false), InvalidArgument);
}

TEST_CASE("q_sequence successor law against plain iteration") {
  for (std::uint64_t m : strict_multipliers(10)) {
    for (unsigned q = 0; q <= 12; ++q) {
      auto s = q_sequence(q, m);
      REQUIRE(s.values.size() == q + 2);
      for (std::size_t i = 0; i + 1 < s.values.size(); ++i) {
        auto a = *s.values[i].to_u64();
        auto b = *s.values[i + 1].to_u64();
        REQUIRE(oracle::next_odd(a) == b);
        REQUIRE(b > a);
      }
    }
  }
}

TEST_CASE("q_sequence at q = 200 stays exact") {
  auto s = q_sequence(200, 1);
  CHECK(s.values.size() == 202);
  CHECK_FALSE(s.values.back().to_u64().has_value());
  CHECK(s.values[200] == BigNat(4) * BigNat::pow3(200) - BigNat(1));
  for (std::size_t i = 0; i < 5; ++i) CHECK(odd_step(s.values[i]) == s.values[i + 1]);
}

TEST_CASE("validate_multiplier") {
  CHECK(validate_multiplier(5, true) == MultiplierVerdict::Accepted);
  CHECK(validate_multiplier(1, true) == MultiplierVerdict::Accepted);
  CHECK(validate_multiplier(3, true) == MultiplierVerdict::RejectedThree);
  CHECK(validate_multiplier(2, true) == MultiplierVerdict::RejectedTwo);
  CHECK(validate_multiplier(25, true) == MultiplierVerdict::RejectedComposite);
  CHECK(validate_multiplier(25, false) == MultiplierVerdict::Accepted);
  CHECK(validate_multiplier(0, false) == MultiplierVerdict::RejectedZero);
  CHECK(q_sequence(1, 25, false).verified);

  CHECK(strict_multipliers(10) == std::vector<std::uint64_t>{1, 5, 7, 11, 13, 17, 19, 23, 29, 31});
  for (std::uint64_t m = 1; m < 5000; ++m) {
    bool expect = m == 1 || (oracle::prime(m) && m >= 5);
    REQUIRE((validate_multiplier(m, true) == MultiplierVerdict::Accepted) == expect);
  }
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(18446744073709551555ULL));
}

TEST_CASE("run_seed examples") {
  CHECK(run_seed(1, 1).x0 == BigNat(3));
  CHECK(run_seed(2, 1).x0 == BigNat(7));
  CHECK(run_seed(3, 2).x0 == BigNat(47));
  CHECK_THROWS_AS(run_seed(0, 1), InvalidArgument);
  CHECK_THROWS_AS(run_seed(1, 0), InvalidArgument);
}

TEST_CASE("verify_increasing_run examples") {
  auto r7 = verify_increasing_run(BigNat(7), 2);
  CHECK(r7.passed);
  CHECK(r7.maximal_run >= 2);
  CHECK(str(r7.values) == "7 11 17");
  auto r13 = verify_increasing_run(BigNat(13), 1);
  CHECK_FALSE(r13.passed);
  CHECK(r13.maximal_run == 0);
  CHECK(verify_increasing_run(BigNat(3), 1).passed);
  auto r47 = verify_increasing_run(BigNat(47), 3);
  CHECK(str(r47.values) == "47 71 107 161");
  CHECK(r47.maximal_run == 3);
  CHECK_THROWS_AS(verify_increasing_run(BigNat(8), 1), DomainError);
}

TEST_CASE("run seeds give at least s increasing steps, and exactly s") {
  for (unsigned s = 1; s <= 12; ++s) {
    for (std::uint64_t n = 1; n <= 200; ++n) {
      auto seed = run_seed(s, n);
      auto x0 = *seed.x0.to_u64();
      REQUIRE(x0 % 4 == 3);
      // plain iteration, independent of the report
      std::uint64_t v = x0;
      unsigned run = 0;
      for (std::uint64_t w = oracle::next_odd(v); w > v; v = w, w = oracle::next_odd(v)) ++run;
      REQUIRE(run == s);
      auto report = verify_increasing_run(seed.x0, s);
      REQUIRE(report.passed);
      REQUIRE(report.maximal_run == run);
    }
  }
}

TEST_CASE("table and sequence serializations") {
  CHECK(format::n_table_csv(2) == "q,i,n\n0,0,1\n1,0,2\n1,1,3\n2,0,4\n2,1,6\n2,2,9\n");
  CHECK(format::sequence_json(q_sequence(2, 1)) ==
        "{\"multiplier\":1,\"n_terms\":[\"4\",\"6\",\"9\"],\"q\":2,\"values\":[\"15\",\"23\",\"35\",\"53\"],"
        "\"verified\":true}\n");
}
