#include "collatz/odd_tree.hpp"

#include <algorithm>
#include <string>

#include "collatz/dynamics.hpp"
#include "collatz/error.hpp"

namespace collatz {

namespace {

void require_odd(const BigNat& y) {
  if (!y.is_odd()) throw DomainError("predecessors are defined for odd y, got " + y.to_string());
}

// (1 + c * 2^(p-1)) / 3, integral by the parity choice of p.
BigNat offset(unsigned p, std::uint64_t c) { return exact_div(BigNat(c) * BigNat::pow2(p - 1) + BigNat(1), 3); }

}  // namespace

const char* to_string(OddKind kind) {
  switch (kind) {
    case OddKind::TrivialCycle: return "trivial_cycle";
    case OddKind::Dec: return "dec";
    case OddKind::Inc: return "inc";
  }
  return "unknown";
}

std::vector<Predecessor> predecessors_formula(const BigNat& y, std::size_t count) {
  require_odd(y);
  std::vector<Predecessor> out;
  const unsigned r = y.mod(6);
  if (r == 3) return out;

  BigNat n;
  unsigned p = 0;
  std::uint64_t c = 0;
  if (r == 5) {
    n = exact_div(y + BigNat(1), 6);
    p = 4;
    c = 1;
  } else {
    n = exact_div(y + BigNat(5), 6);
    p = 3;
    c = 5;
  }
  out.reserve(count);
  for (; out.size() < count; p += 2) out.push_back({BigNat::pow2(p) * n - offset(p, c), p});
  return out;
}

std::vector<Predecessor> predecessors_complete(const BigNat& y, std::size_t count) {
  auto out = predecessors_formula(y, count);
  if (y.mod(6) == 5 && count > 0) {
    // y = 6n-1 is reached from 4n-1 in one halving
    BigNat n = exact_div(y + BigNat(1), 6);
    out.insert(out.begin(), Predecessor{BigNat(4) * n - BigNat(1), 2});
    out.resize(count);
  }
  return out;
}

std::vector<BigNat> predecessors_direct(const BigNat& y, unsigned k_max) {
  require_odd(y);
  std::vector<BigNat> out;
  for (unsigned k = 1; k <= k_max; ++k) {
    BigNat t = y.shifted_left(k) - BigNat(1);
    if (t.mod3() != 0) continue;
    out.push_back(exact_div(t, 3));
  }
  return out;
}

OddClass classify(std::uint64_t x) {
  if (x % 2 == 0 || x == 0) throw DomainError("classify requires an odd x >= 1, got " + std::to_string(x));
  OddClass c;
  c.root3 = x % 3 == 0;
  if (x == 1) return c;
  if (x % 4 == 1) {
    c.kind = OddKind::Dec;
    c.n = (x - 1) / 4;
  } else {
    c.kind = OddKind::Inc;
    c.n = (x + 1) / 4;
  }
  return c;
}

namespace {

void expand(OddTreeNode& node, std::uint64_t max_value, unsigned depth, unsigned max_depth) {
  if (node.classification.root3) return;
  if (depth >= max_depth) {
    node.truncated = true;
    return;
  }
  // Predecessors grow by roughly 4x per step, so a few dozen cover any 64-bit bound.
  const BigNat bound(max_value);
  std::size_t want = 8;
  for (;;) {
    auto preds = predecessors_complete(BigNat(node.value), want);
    if (preds.back().value > bound) {
      for (const auto& p : preds) {
        if (p.value > bound) break;
        auto v = *p.value.to_u64();
        if (v == node.value) continue;  // 1 -> 1
        OddTreeNode child{v, classify(v), p.p_exp, false, {}};
        expand(child, max_value, depth + 1, max_depth);
        node.children.push_back(std::move(child));
      }
      break;
    }
    want *= 2;
  }
  // The predecessor list is infinite, so some were always left out.
  node.truncated = true;
}

}  // namespace

OddTreeNode build_tree(std::uint64_t root, std::uint64_t max_value, unsigned max_depth) {
  OddTreeNode node{root, classify(root), 0, false, {}};
  expand(node, max_value, 0, max_depth);
  return node;
}

std::size_t node_count(const OddTreeNode& node) {
  std::size_t n = 1;
  for (const auto& c : node.children) n += node_count(c);
  return n;
}

RootsReport verify_roots(std::uint64_t n_max) {
  if (n_max < 3) throw InvalidArgument("verify_roots needs n_max >= 3");
  RootsReport report;
  for (std::uint64_t x = 1; x <= n_max; x += 2) {
    ++report.checked;
    if (odd_step(x) % 3 == 0) report.counterexamples.push_back(x);
    if (x > n_max - 2) break;
  }
  return report;
}

}  // namespace collatz
