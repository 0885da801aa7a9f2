#include "collatz/natural.hpp"

#include <bit>
#include <limits>

#include "collatz/error.hpp"

namespace collatz {

namespace mp = boost::multiprecision;

FastNat FastNat::three_x_plus_one() const {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(v_, std::uint64_t{3}, &r) || __builtin_add_overflow(r, std::uint64_t{1}, &r)) {
    throw OverflowError("3x+1 overflows 64 bits for x = " + std::to_string(v_));
  }
  return FastNat{r};
}

unsigned FastNat::trailing_zeros() const { return static_cast<unsigned>(std::countr_zero(v_)); }

FastNat operator+(FastNat a, FastNat b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("addition overflows 64 bits");
  return FastNat{r};
}

FastNat operator*(FastNat a, FastNat b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("multiplication overflows 64 bits");
  return FastNat{r};
}

FastNat operator-(FastNat a, FastNat b) {
  if (b.v_ > a.v_) throw DomainError("natural subtraction would go negative");
  return FastNat{a.v_ - b.v_};
}

BigNat BigNat::from_string(std::string_view digits) {
  if (digits.empty()) throw InvalidArgument("empty number");
  Rep v = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw InvalidArgument("not a decimal natural: " + std::string(digits));
    v = v * 10 + (c - '0');
  }
  return BigNat{std::move(v)};
}

BigNat BigNat::pow2(unsigned exponent) {
  Rep v = 1;
  return BigNat{Rep(v << exponent)};
}

BigNat BigNat::pow3(unsigned exponent) { return BigNat{mp::pow(Rep(3), exponent)}; }

BigNat BigNat::three_x_plus_one() const { return BigNat{Rep(v_ * 3 + 1)}; }
BigNat BigNat::halved() const { return BigNat{Rep(v_ >> 1)}; }
BigNat BigNat::shifted_right(unsigned bits) const { return BigNat{Rep(v_ >> bits)}; }
BigNat BigNat::shifted_left(unsigned bits) const { return BigNat{Rep(v_ << bits)}; }

unsigned BigNat::trailing_zeros() const {
  if (v_.is_zero()) return std::numeric_limits<unsigned>::max();
  return static_cast<unsigned>(mp::lsb(v_));
}

unsigned BigNat::mod3() const { return mod(3); }
unsigned BigNat::mod(unsigned m) const { return static_cast<unsigned>(Rep(v_ % m)); }

std::optional<std::uint64_t> BigNat::to_u64() const {
  if (v_ > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<std::uint64_t>(v_);
}

std::string BigNat::to_string() const { return v_.str(); }

BigNat operator+(const BigNat& a, const BigNat& b) { return BigNat{BigNat::Rep(a.v_ + b.v_)}; }
BigNat operator*(const BigNat& a, const BigNat& b) { return BigNat{BigNat::Rep(a.v_ * b.v_)}; }

BigNat operator-(const BigNat& a, const BigNat& b) {
  if (b.v_ > a.v_) throw DomainError("natural subtraction would go negative");
  return BigNat{BigNat::Rep(a.v_ - b.v_)};
}

BigNat exact_div(const BigNat& a, std::uint64_t d) {
  if (d == 0) throw DomainError("division by zero");
  BigNat::Rep q;
  BigNat::Rep r;
  mp::divide_qr(a.v_, BigNat::Rep(d), q, r);
  if (!r.is_zero()) throw DomainError(a.to_string() + " is not divisible by " + std::to_string(d));
  return BigNat{std::move(q)};
}

std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
  int c = a.v_.compare(b.v_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace collatz
