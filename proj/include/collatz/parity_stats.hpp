#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "collatz/dynamics.hpp"
#include "collatz/stopping_cache.hpp"

namespace collatz {

/// y(t) for t = 1..sigma: 1 where X(t) is odd.
using ParitySequence = std::vector<std::uint8_t>;

/// Per-start summary behind P_odd.
///
/// P_odd counts odd values over the whole path X(1)..X(sigma+1) (so the
/// terminal 1 is included) and divides by sigma. This is the convention
/// that reproduces the published peak values (0.372, 0.37190, 0.37168).
struct TrajectoryRecord {
  std::uint64_t x = 0;
  std::uint64_t sigma = 0;
  std::uint64_t odd_steps = 0;  // odd values among X(1)..X(sigma)

  std::uint64_t p_odd_numerator() const { return odd_steps + 1; }
  std::uint64_t p_odd_denominator() const { return sigma; }
  double p_odd() const { return static_cast<double>(p_odd_numerator()) / static_cast<double>(sigma); }

  friend bool operator==(const TrajectoryRecord&, const TrajectoryRecord&) = default;
};

/// Exact comparison of two records' P_odd values.
int compare_p_odd(const TrajectoryRecord& a, const TrajectoryRecord& b);

ParitySequence parity_sequence(std::uint64_t x, std::uint64_t cap = kDefaultStepCap);

/// Throws CapExceeded if the trajectory does not reach 1 within `cap`.
TrajectoryRecord p_odd(std::uint64_t x, std::uint64_t cap = kDefaultStepCap);

struct ScanOptions {
  unsigned workers = 1;
  std::uint64_t cap = kDefaultStepCap;
  /// Shared memo table; when null an internal one sized to the range is used.
  StoppingCache* cache = nullptr;
};

/// One record per x in [lo, hi], ascending, identical for any worker count.
std::vector<TrajectoryRecord> scan_range(std::uint64_t lo, std::uint64_t hi, const ScanOptions& options = {});

/// Largest P_odd among records with x > x_threshold; smallest x wins ties.
TrajectoryRecord max_p_odd(std::span<const TrajectoryRecord> records, std::uint64_t x_threshold);

inline constexpr unsigned kDefaultBins = 250;
inline constexpr double kHistogramTop = 0.5;
inline constexpr double kDefaultFitLo = 0.25;
inline constexpr double kDefaultFitHi = 0.365;

/// Equal-width probability histogram over [0, 0.5]. Values at or above 0.5
/// land in the last bin.
struct Histogram {
  std::vector<double> bin_edges;
  std::vector<double> probabilities;
  std::uint64_t sample_count = 0;

  std::size_t bin_count() const { return probabilities.size(); }
  double bin_center(std::size_t i) const { return 0.5 * (bin_edges[i] + bin_edges[i + 1]); }
};

std::vector<double> uniform_edges(unsigned bin_count);
Histogram histogram(std::span<const TrajectoryRecord> records, unsigned bin_count = kDefaultBins);
Histogram histogram_of_values(std::span<const double> values, unsigned bin_count = kDefaultBins);
/// Wraps precomputed bins; probabilities must be non-negative and sum to 1.
Histogram histogram_from_bins(std::vector<double> bin_edges, std::vector<double> probabilities,
                              std::uint64_t sample_count);

struct PowerLawFit {
  double alpha = 0;
  double intercept = 0;  // natural-log intercept: ln D = intercept + alpha ln P
  double window_lo = 0;
  double window_hi = 0;
  double r_squared = 0;
  std::uint64_t bins_used = 0;
  std::uint64_t sample_count = 0;
};

/// Ordinary least squares of ln(probability) on ln(bin center) over the
/// nonzero bins whose center lies in [lo, hi].
PowerLawFit power_law_fit(const Histogram& h, double lo = kDefaultFitLo, double hi = kDefaultFitHi);

}  // namespace collatz
