#pragma once

// The standard map C and the odd-only map F, plus trajectory iteration and
// total stopping time. Every function is templated over the representation
// (FastNat or BigNat) so that both can be cross-checked.

#include <cstdint>
#include <vector>

#include "collatz/error.hpp"
#include "collatz/natural.hpp"

namespace collatz {

inline constexpr std::uint64_t kDefaultStepCap = 1'000'000;

template <Natural N>
struct Trajectory {
  N start;
  /// X(1), X(2), ... with X(1) = start.
  std::vector<N> values;
  /// True when the list ends at the first return to 1, false when the cap cut it.
  bool terminated = false;
};

struct StoppingResult {
  std::uint64_t sigma = 0;
  /// Odd values among X(1)..X(sigma); the terminal 1 is not included.
  std::uint64_t odd_steps = 0;
  bool capped = false;
};

template <Natural N>
N collatz_step(const N& x) {
  if (x.is_zero()) throw DomainError("collatz_step is defined for x >= 1");
  return x.is_odd() ? x.three_x_plus_one() : x.halved();
}

template <Natural N>
unsigned two_adic_valuation(const N& x) {
  if (x.is_zero()) throw DomainError("2-adic valuation of 0 is undefined");
  return x.trailing_zeros();
}

/// F(x) = (3x+1) / 2^m(3x+1); maps odd numbers to odd numbers.
template <Natural N>
N odd_step(const N& x) {
  if (!x.is_odd()) throw DomainError("odd_step requires an odd argument, got " + x.to_string());
  N y = x.three_x_plus_one();
  return y.shifted_right(y.trailing_zeros());
}

/// Iterates C until 1 is produced or `cap` steps have been taken. Starting
/// from 1 the first step is taken, so trajectory(1) is [1, 4, 2, 1].
template <Natural N>
Trajectory<N> trajectory(const N& x, std::uint64_t cap = kDefaultStepCap) {
  if (x.is_zero()) throw DomainError("trajectory requires x >= 1");
  if (cap == 0) throw InvalidArgument("step cap must be >= 1");
  Trajectory<N> t{x, {x}, false};
  N v = x;
  for (std::uint64_t step = 0; step < cap; ++step) {
    v = collatz_step(v);
    t.values.push_back(v);
    if (v.is_one()) {
      t.terminated = true;
      break;
    }
  }
  return t;
}

/// sigma = least k >= 1 with C^k(x) = 1, so sigma(1) = 3.
template <Natural N>
StoppingResult total_stopping_time(const N& x, std::uint64_t cap = kDefaultStepCap) {
  if (x.is_zero()) throw DomainError("total_stopping_time requires x >= 1");
  if (cap == 0) throw InvalidArgument("step cap must be >= 1");
  StoppingResult r;
  N v = x;
  while (r.sigma < cap) {
    if (v.is_odd()) ++r.odd_steps;
    v = collatz_step(v);
    ++r.sigma;
    if (v.is_one()) return r;
  }
  r.capped = true;
  return r;
}

// Non-template conveniences on machine words.
std::uint64_t collatz_step(std::uint64_t x);
std::uint64_t odd_step(std::uint64_t x);
unsigned two_adic_valuation(std::uint64_t x);

}  // namespace collatz
