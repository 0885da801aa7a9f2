#include <algorithm>
#include <functional>

#include "collatz/dynamics.hpp"
#include "collatz/error.hpp"
#include "collatz/odd_tree.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace collatz;

namespace {

std::vector<std::uint64_t> values_of(const std::vector<Predecessor>& ps) {
  std::vector<std::uint64_t> out;
  for (const auto& p : ps) out.push_back(*p.value.to_u64());
  return out;
}

std::vector<std::uint64_t> values_of(const std::vector<BigNat>& ps) {
  std::vector<std::uint64_t> out;
  for (const auto& p : ps) out.push_back(*p.to_u64());
  return out;
}

using V = std::vector<std::uint64_t>;

}  // namespace

TEST_CASE("predecessors_formula examples") {
  CHECK(values_of(predecessors_formula(BigNat(5), 4)) == V{13, 53, 213, 853});
  CHECK(predecessors_formula(BigNat(9), 5).empty());
  CHECK(values_of(predecessors_formula(BigNat(7), 2)) == V{9, 37});
  // direct-preimage check for the y = 7 case
  CHECK(oracle::preimages(7, 40) == V{9, 37});
  CHECK_THROWS_AS(predecessors_formula(BigNat(4), 2), DomainError);

  auto ps = predecessors_formula(BigNat(5), 3);
  CHECK(ps[0].p_exp == 4);
  CHECK(ps[1].p_exp == 6);
  auto qs = predecessors_formula(BigNat(7), 3);
  CHECK(qs[0].p_exp == 3);
  CHECK(qs[2].p_exp == 7);
}

TEST_CASE("predecessors_direct examples") {
  // brute force: 3 (k=1), then k = 3, 5, 7, 9, 11
  CHECK(oracle::preimages(5, 4000) == V{3, 13, 53, 213, 853, 3413});
  CHECK(values_of(predecessors_direct(BigNat(5), 12)) == V{3, 13, 53, 213, 853, 3413});
  CHECK(predecessors_direct(BigNat(3), 20).empty());
  CHECK(values_of(predecessors_direct(BigNat(1), 10)) == V{1, 5, 21, 85, 341});
}

TEST_CASE("predecessors_complete adds the 4n-1 predecessor") {
  CHECK(values_of(predecessors_complete(BigNat(5), 5)) == V{3, 13, 53, 213, 853});
  CHECK(predecessors_complete(BigNat(5), 1)[0].p_exp == 2);
  CHECK(values_of(predecessors_complete(BigNat(7), 3)) == V{9, 37, 149});
  CHECK(predecessors_complete(BigNat(15), 3).empty());
}

TEST_CASE("formula and exhaustive preimage search agree for small y") {
  for (std::uint64_t y = 1; y <= 301; y += 2) {
    auto brute = oracle::preimages(y, 64 * y + 64);
    auto formula = values_of(predecessors_complete(BigNat(y), brute.size()));
    if (y % 3 == 0) {
      CHECK(brute.empty());
      continue;
    }
    REQUIRE(brute.size() >= 2);
    CHECK(formula == brute);
  }
}

TEST_CASE("formula family is exactly the k >= 2 direct predecessors, y <= 1e4") {
  for (std::uint64_t y = 1; y <= 10000; y += 2) {
    if (y % 3 == 0) continue;
    auto formula = values_of(predecessors_formula(BigNat(y), 5));
    V direct;
    for (std::uint64_t x : values_of(predecessors_direct(BigNat(y), 14))) {
      if (oracle::valuation(3 * x + 1) >= 2) direct.push_back(x);
    }
    direct.resize(5);
    REQUIRE(formula == direct);
  }
}

TEST_CASE("halvings between a predecessor and its target number p-1") {
  for (std::uint64_t y = 1; y <= 2000; y += 2) {
    if (y % 3 == 0) continue;
    for (const auto& p : predecessors_complete(BigNat(y), 4)) {
      auto x = *p.value.to_u64();
      REQUIRE(odd_step(x) == y);
      REQUIRE(oracle::valuation(3 * x + 1) == p.p_exp - 1);
    }
  }
}

TEST_CASE("closed-form divisibility depends on the parity of p") {
  for (unsigned p = 2; p <= 40; ++p) {
    BigNat a = BigNat::pow2(p - 1) + BigNat(1);
    BigNat b = BigNat(5) * BigNat::pow2(p - 1) + BigNat(1);
    CHECK((a.mod3() == 0) == (p % 2 == 0));
    CHECK((b.mod3() == 0) == (p % 2 == 1));
  }
}

TEST_CASE("increasing set: F(4n-1) = 6n-1") {
  for (std::uint64_t n = 1; n <= 100000; ++n) REQUIRE(odd_step(4 * n - 1) == 6 * n - 1);
}

TEST_CASE("classify") {
  auto c15 = classify(15);
  CHECK(c15.kind == OddKind::Inc);
  CHECK(c15.n == 4);
  CHECK(c15.root3);
  auto c13 = classify(13);
  CHECK(c13.kind == OddKind::Dec);
  CHECK(c13.n == 3);
  CHECK_FALSE(c13.root3);
  auto c7 = classify(7);
  CHECK(c7.kind == OddKind::Inc);
  CHECK(c7.n == 2);
  CHECK(classify(1).kind == OddKind::TrivialCycle);
  CHECK_THROWS_AS(classify(8), DomainError);

  for (std::uint64_t x = 3; x < 2000; x += 2) {
    auto c = classify(x);
    if (c.kind == OddKind::Dec) REQUIRE((x == 4 * c.n + 1 && odd_step(x) < x));
    if (c.kind == OddKind::Inc) REQUIRE((x == 4 * c.n - 1 && odd_step(x) > x));
  }
}

TEST_CASE("build_tree examples") {
  auto t = build_tree(5, 300, 2);
  V kids;
  for (const auto& c : t.children) kids.push_back(c.value);
  CHECK(kids == V{3, 13, 53, 213});
  const auto& n13 = t.children[1];
  V kids13;
  for (const auto& c : n13.children) kids13.push_back(c.value);
  CHECK(kids13 == oracle::preimages(13, 300));
  CHECK(kids13.front() == 17);
  CHECK(t.truncated);
  CHECK(t.children[0].children.empty());  // 3 is a branch root
  CHECK_FALSE(t.children[0].truncated);

  auto leaf = build_tree(9, 1000000, 10);
  CHECK(leaf.children.empty());
  CHECK(leaf.classification.root3);

  auto one = build_tree(1, 100, 1);
  V ones;
  for (const auto& c : one.children) ones.push_back(c.value);
  CHECK(ones == V{5, 21, 85});
  for (const auto& c : one.children) CHECK(c.children.empty());

  CHECK_THROWS_AS(build_tree(4, 100, 2), DomainError);
}

TEST_CASE("every tree edge is an F-step and branch roots stay leaves") {
  auto t = build_tree(1, 100000, 6);
  std::size_t edges = 0;
  std::function<void(const OddTreeNode&)> walk = [&](const OddTreeNode& n) {
    if (n.value % 3 == 0) CHECK(n.children.empty());
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      const auto& c = n.children[i];
      REQUIRE(odd_step(c.value) == n.value);
      REQUIRE(c.value <= 100000);
      if (i) REQUIRE(n.children[i - 1].value < c.value);
      ++edges;
      walk(c);
    }
  };
  walk(t);
  CHECK(edges + 1 == node_count(t));
  CHECK(edges > 50);
}

TEST_CASE("verify_roots") {
  auto small = verify_roots(3);
  CHECK(small.checked == 2);
  CHECK(small.passed());
  auto r99 = verify_roots(99);
  CHECK(r99.checked == 50);
  CHECK(r99.passed());
  auto r100 = verify_roots(100);
  CHECK(r100.checked == 50);
  CHECK_THROWS_AS(verify_roots(2), InvalidArgument);
}
