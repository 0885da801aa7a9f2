#include "collatz/dynamics.hpp"

namespace collatz {

std::uint64_t collatz_step(std::uint64_t x) { return collatz_step(FastNat{x}).value(); }
std::uint64_t odd_step(std::uint64_t x) { return odd_step(FastNat{x}).value(); }
unsigned two_adic_valuation(std::uint64_t x) { return two_adic_valuation(FastNat{x}); }

}  // namespace collatz
