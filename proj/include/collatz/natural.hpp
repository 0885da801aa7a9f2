#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace collatz {

/// Non-negative integer in a single machine word. Every operation that can
/// leave the representable range throws OverflowError instead of wrapping.
class FastNat {
 public:
  constexpr FastNat() = default;
  constexpr explicit FastNat(std::uint64_t v) : v_(v) {}

  constexpr std::uint64_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }
  constexpr bool is_one() const { return v_ == 1; }
  constexpr bool is_odd() const { return (v_ & 1u) != 0; }

  FastNat three_x_plus_one() const;
  constexpr FastNat halved() const { return FastNat{v_ >> 1}; }
  FastNat shifted_right(unsigned bits) const { return FastNat{bits >= 64 ? 0 : v_ >> bits}; }
  /// Number of trailing zero bits; 64 for zero.
  unsigned trailing_zeros() const;
  unsigned mod3() const { return static_cast<unsigned>(v_ % 3); }

  std::string to_string() const { return std::to_string(v_); }

  friend FastNat operator+(FastNat a, FastNat b);
  friend FastNat operator*(FastNat a, FastNat b);
  friend FastNat operator-(FastNat a, FastNat b);
  friend constexpr bool operator==(FastNat, FastNat) = default;
  friend constexpr auto operator<=>(FastNat, FastNat) = default;

 private:
  std::uint64_t v_ = 0;
};

/// Unbounded non-negative integer.
class BigNat {
 public:
  using Rep = boost::multiprecision::cpp_int;

  BigNat() = default;
  BigNat(std::uint64_t v) : v_(v) {}  // NOLINT: lossless widening
  BigNat(FastNat v) : v_(v.value()) {}  // NOLINT: lossless widening

  /// Parses a decimal string of digits only.
  static BigNat from_string(std::string_view digits);
  static BigNat pow2(unsigned exponent);
  static BigNat pow3(unsigned exponent);

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }
  bool is_odd() const { return bit_test(v_, 0); }

  BigNat three_x_plus_one() const;
  BigNat halved() const;
  BigNat shifted_right(unsigned bits) const;
  BigNat shifted_left(unsigned bits) const;
  unsigned trailing_zeros() const;
  unsigned mod3() const;
  unsigned mod(unsigned m) const;

  /// Value as a machine word if it fits.
  std::optional<std::uint64_t> to_u64() const;
  std::string to_string() const;

  friend BigNat operator+(const BigNat& a, const BigNat& b);
  friend BigNat operator*(const BigNat& a, const BigNat& b);
  /// Throws DomainError if b > a.
  friend BigNat operator-(const BigNat& a, const BigNat& b);
  /// Exact division; throws DomainError if d does not divide a.
  friend BigNat exact_div(const BigNat& a, std::uint64_t d);
  friend bool operator==(const BigNat& a, const BigNat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b);

 private:
  explicit BigNat(Rep v) : v_(std::move(v)) {}
  Rep v_;
};

/// Minimal surface shared by both representations; the dynamics templates
/// are written against it.
template <class N>
concept Natural = requires(const N& n, unsigned k) {
  { n.is_zero() } -> std::same_as<bool>;
  { n.is_one() } -> std::same_as<bool>;
  { n.is_odd() } -> std::same_as<bool>;
  { n.three_x_plus_one() } -> std::same_as<N>;
  { n.halved() } -> std::same_as<N>;
  { n.shifted_right(k) } -> std::same_as<N>;
  { n.trailing_zeros() } -> std::same_as<unsigned>;
  { n.to_string() } -> std::same_as<std::string>;
};

}  // namespace collatz
