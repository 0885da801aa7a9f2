#include "collatz/increasing.hpp"

#include <string>

#include "collatz/dynamics.hpp"
#include "collatz/error.hpp"

namespace collatz {

std::vector<BigNat> n_terms(unsigned q) {
  std::vector<BigNat> out;
  out.reserve(q + 1);
  BigNat pow3(1);
  for (unsigned i = 0; i <= q; ++i) {
    out.push_back(pow3.shifted_left(q - i));
    pow3 = pow3 * BigNat(3);
  }
  return out;
}

const char* to_string(MultiplierVerdict v) {
  switch (v) {
    case MultiplierVerdict::Accepted: return "accepted";
    case MultiplierVerdict::RejectedTwo: return "rejected: divisible by 2";
    case MultiplierVerdict::RejectedThree: return "rejected: divisible by 3";
    case MultiplierVerdict::RejectedComposite: return "rejected: composite";
    case MultiplierVerdict::RejectedZero: return "rejected: multiplier must be >= 1";
  }
  return "unknown";
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  for (b %= m; e; e >>= 1, b = mulmod(b, b, m)) {
    if (e & 1) r = mulmod(r, b, m);
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; these bases cover every 64-bit n.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r && composite; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

MultiplierVerdict validate_multiplier(std::uint64_t m, bool strict) {
  if (m == 0) return MultiplierVerdict::RejectedZero;
  if (!strict || m == 1) return MultiplierVerdict::Accepted;
  if (m % 2 == 0) return MultiplierVerdict::RejectedTwo;
  if (m % 3 == 0) return MultiplierVerdict::RejectedThree;
  return is_prime(m) ? MultiplierVerdict::Accepted : MultiplierVerdict::RejectedComposite;
}

std::vector<std::uint64_t> strict_multipliers(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; out.size() < count; ++m) {
    if (validate_multiplier(m, true) == MultiplierVerdict::Accepted) out.push_back(m);
  }
  return out;
}

QSequence q_sequence(unsigned q, std::uint64_t multiplier, bool strict) {
  auto verdict = validate_multiplier(multiplier, strict);
  if (verdict != MultiplierVerdict::Accepted) {
    throw InvalidArgument("multiplier " + std::to_string(multiplier) + " " + to_string(verdict));
  }
  QSequence seq{q, multiplier, n_terms(q), {}, false};
  const BigNat m(multiplier);
  seq.values.reserve(q + 2);
  for (const auto& n : seq.n_terms) seq.values.push_back(BigNat(4) * m * n - BigNat(1));
  seq.values.push_back(BigNat(6) * m * seq.n_terms.back() - BigNat(1));

  for (std::size_t i = 0; i + 1 < seq.values.size(); ++i) {
    if (odd_step(seq.values[i]) != seq.values[i + 1] || !(seq.values[i] < seq.values[i + 1])) {
      throw VerificationFailure("q-sequence (q=" + std::to_string(q) + ", m=" + std::to_string(multiplier) +
                                ") breaks at term " + std::to_string(i));
    }
  }
  seq.verified = true;
  return seq;
}

RunSeed run_seed(unsigned s, std::uint64_t n) {
  if (s < 1) throw InvalidArgument("run length s must be >= 1");
  if (n < 1) throw InvalidArgument("run parameter n must be >= 1");
  BigNat x0 = BigNat::pow2(s + 2) * BigNat(n) - BigNat::pow2(s + 1) - BigNat(1);
  return RunSeed{s, n, std::move(x0)};
}

RunReport verify_increasing_run(const BigNat& x0, unsigned s) {
  if (!x0.is_odd()) throw DomainError("run verification needs an odd start, got " + x0.to_string());
  RunReport report{x0, s, {x0}, true, 0};
  BigNat v = x0;
  for (unsigned i = 0; i < s; ++i) {
    BigNat next = odd_step(v);
    if (!(next > v)) report.passed = false;
    report.values.push_back(next);
    v = std::move(next);
  }
  // The run is finite: x+1 loses one factor of 2 per increasing step.
  v = x0;
  for (;;) {
    BigNat next = odd_step(v);
    if (!(next > v)) break;
    ++report.maximal_run;
    v = std::move(next);
  }
  return report;
}

}  // namespace collatz
