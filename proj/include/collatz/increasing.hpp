#pragma once

#include <cstdint>
#include <vector>

#include "collatz/natural.hpp"

namespace collatz {

/// n_i = 3^i * 2^(q-i) for i = 0..q.
std::vector<BigNat> n_terms(unsigned q);

struct QSequence {
  unsigned q = 0;
  std::uint64_t multiplier = 1;
  std::vector<BigNat> n_terms;
  /// 4*m*n_i - 1 for i = 0..q, then 6*m*n_q - 1.
  std::vector<BigNat> values;
  bool verified = false;
};

enum class MultiplierVerdict {
  Accepted,
  RejectedTwo,
  RejectedThree,
  RejectedComposite,
  RejectedZero,
};

const char* to_string(MultiplierVerdict v);

/// Strict mode accepts 1 and primes >= 5; permissive mode accepts any m >= 1.
MultiplierVerdict validate_multiplier(std::uint64_t m, bool strict);

bool is_prime(std::uint64_t n);

/// The first `count` multipliers accepted in strict mode: 1, 5, 7, 11, ...
std::vector<std::uint64_t> strict_multipliers(std::size_t count);

/// Builds the q+2 term increasing sequence and checks every F-step.
/// Throws VerificationFailure on a mismatch and InvalidArgument when the
/// multiplier is rejected under `strict`.
QSequence q_sequence(unsigned q, std::uint64_t multiplier = 1, bool strict = true);

struct RunSeed {
  unsigned s = 0;
  std::uint64_t n = 0;
  BigNat x0;  // 2^(s+2) n - (2^(s+1) + 1)
};

RunSeed run_seed(unsigned s, std::uint64_t n);

struct RunReport {
  BigNat x0;
  unsigned requested = 0;
  /// x0, F(x0), ..., F^requested(x0).
  std::vector<BigNat> values;
  bool passed = false;
  /// Longest strictly increasing F-run starting at x0.
  unsigned maximal_run = 0;
};

RunReport verify_increasing_run(const BigNat& x0, unsigned s);

}  // namespace collatz
