#pragma once

#include <cstdint>
#include <vector>

#include "collatz/natural.hpp"

namespace collatz {

enum class OddKind {
  TrivialCycle,  // x = 1, F(1) = 1
  Dec,           // x = 4n+1, F(x) < x
  Inc,           // x = 4n-1, F(x) = 6n-1 > x
};

struct OddClass {
  OddKind kind = OddKind::TrivialCycle;
  std::uint64_t n = 0;  // witness: x = 4n+1 or x = 4n-1; 0 for TrivialCycle
  bool root3 = false;   // x is a multiple of 3 and so has no F-predecessor
};

const char* to_string(OddKind kind);

/// A predecessor of y under F together with p_exp, the exponent of the
/// closed form that produced it (p_exp - 1 halvings separate it from y).
struct Predecessor {
  BigNat value;
  unsigned p_exp = 0;
  friend bool operator==(const Predecessor&, const Predecessor&) = default;
};

/// First `count` predecessors of odd y from the decreasing-set closed forms:
///   y = 6n-1:  x = 2^p n - (1 + 2^(p-1))/3,   p = 4, 6, 8, ...
///   y = 6n-5:  x = 2^p n - (1 + 5*2^(p-1))/3, p = 3, 5, 7, ...
/// These are exactly the x = 4k+1 predecessors. Multiples of 3 have none.
std::vector<Predecessor> predecessors_formula(const BigNat& y, std::size_t count);

/// As predecessors_formula, plus the single increasing-set predecessor
/// 4n-1 of y = 6n-1 (p_exp = 2), merged in ascending order.
std::vector<Predecessor> predecessors_complete(const BigNat& y, std::size_t count);

/// Brute-force inversion: every odd x with 3x+1 = y * 2^k, 1 <= k <= k_max.
std::vector<BigNat> predecessors_direct(const BigNat& y, unsigned k_max);

OddClass classify(std::uint64_t x);

struct OddTreeNode {
  std::uint64_t value = 0;
  OddClass classification;
  unsigned p_exp = 0;  // exponent on the edge to the parent; 0 at the root
  bool truncated = false;
  std::vector<OddTreeNode> children;  // ascending by value
};

/// Expands predecessors recursively. A child is kept iff its value is
/// <= max_value and its depth is <= max_depth (root has depth 0). The
/// self-predecessor of 1 is never expanded.
OddTreeNode build_tree(std::uint64_t root, std::uint64_t max_value, unsigned max_depth);

std::size_t node_count(const OddTreeNode& node);

struct RootsReport {
  std::uint64_t checked = 0;
  std::vector<std::uint64_t> counterexamples;
  bool passed() const { return counterexamples.empty(); }
};

/// Checks F(x) mod 3 != 0 for every odd x <= n_max.
RootsReport verify_roots(std::uint64_t n_max);

}  // namespace collatz
