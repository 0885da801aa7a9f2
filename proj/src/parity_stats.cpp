#include "collatz/parity_stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>

#include "collatz/error.hpp"

namespace collatz {

namespace {

constexpr std::uint64_t kInternalCacheLimit = std::uint64_t{1} << 24;
constexpr std::uint64_t kChunk = 4096;

std::size_t bin_of_fraction(std::uint64_t num, std::uint64_t den, unsigned bins) {
  // floor((num/den) / 0.5 * bins), exact in integers
  unsigned __int128 scaled = static_cast<unsigned __int128>(num) * 2 * bins / den;
  return static_cast<std::size_t>(std::min<unsigned __int128>(scaled, bins - 1));
}

void check_bins(unsigned bin_count) {
  if (bin_count < 10) throw InvalidArgument("histogram needs at least 10 bins, got " + std::to_string(bin_count));
}

}  // namespace

int compare_p_odd(const TrajectoryRecord& a, const TrajectoryRecord& b) {
  using u128 = unsigned __int128;
  u128 lhs = static_cast<u128>(a.p_odd_numerator()) * b.p_odd_denominator();
  u128 rhs = static_cast<u128>(b.p_odd_numerator()) * a.p_odd_denominator();
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

ParitySequence parity_sequence(std::uint64_t x, std::uint64_t cap) {
  auto t = trajectory(FastNat{x}, cap);
  if (!t.terminated) throw CapExceeded("step cap exceeded for x = " + std::to_string(x), x);
  ParitySequence bits;
  bits.reserve(t.values.size() - 1);
  for (std::size_t i = 0; i + 1 < t.values.size(); ++i) bits.push_back(t.values[i].is_odd() ? 1 : 0);
  return bits;
}

TrajectoryRecord p_odd(std::uint64_t x, std::uint64_t cap) {
  auto r = total_stopping_time(FastNat{x}, cap);
  if (r.capped) throw CapExceeded("step cap exceeded for x = " + std::to_string(x), x);
  return TrajectoryRecord{x, r.sigma, r.odd_steps};
}

std::vector<TrajectoryRecord> scan_range(std::uint64_t lo, std::uint64_t hi, const ScanOptions& options) {
  if (lo < 1 || lo > hi) {
    throw InvalidArgument("scan range requires 1 <= lo <= hi, got [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  }
  if (options.workers < 1) throw InvalidArgument("worker count must be >= 1");

  std::optional<StoppingCache> own;
  StoppingCache* cache = options.cache;
  if (!cache) {
    own.emplace(std::min(hi, kInternalCacheLimit));
    cache = &*own;
  }

  const std::uint64_t n = hi - lo + 1;
  std::vector<TrajectoryRecord> out(n);
  const std::uint64_t chunks = (n + kChunk - 1) / kChunk;
  std::atomic<std::uint64_t> next{0};

  std::mutex err_mu;
  std::uint64_t err_x = std::numeric_limits<std::uint64_t>::max();
  std::exception_ptr err;

  auto work = [&] {
    for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
      const std::uint64_t first = lo + c * kChunk;
      const std::uint64_t last = std::min(hi, first + kChunk - 1);
      for (std::uint64_t x = first;; ++x) {
        try {
          auto r = memoized_stopping_time(x, cache, options.cap);
          out[x - lo] = TrajectoryRecord{x, r.sigma, r.odd_steps};
        } catch (...) {
          std::lock_guard lock(err_mu);
          if (x < err_x) {
            err_x = x;
            err = std::current_exception();
          }
          break;
        }
        if (x == last) break;
      }
    }
  };

  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(options.workers, chunks));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  if (err) std::rethrow_exception(err);
  return out;
}

TrajectoryRecord max_p_odd(std::span<const TrajectoryRecord> records, std::uint64_t x_threshold) {
  const TrajectoryRecord* best = nullptr;
  for (const auto& r : records) {
    if (r.x <= x_threshold) continue;
    if (!best || compare_p_odd(r, *best) > 0 || (compare_p_odd(r, *best) == 0 && r.x < best->x)) best = &r;
  }
  if (!best) throw InvalidArgument("no records with x > " + std::to_string(x_threshold));
  return *best;
}

std::vector<double> uniform_edges(unsigned bin_count) {
  std::vector<double> edges(bin_count + 1);
  for (unsigned i = 0; i <= bin_count; ++i) edges[i] = kHistogramTop * i / bin_count;
  return edges;
}

Histogram histogram(std::span<const TrajectoryRecord> records, unsigned bin_count) {
  check_bins(bin_count);
  if (records.empty()) throw InvalidArgument("histogram of an empty record set");
  std::vector<std::uint64_t> counts(bin_count, 0);
  for (const auto& r : records) ++counts[bin_of_fraction(r.p_odd_numerator(), r.p_odd_denominator(), bin_count)];
  Histogram h{uniform_edges(bin_count), std::vector<double>(bin_count), records.size()};
  for (unsigned i = 0; i < bin_count; ++i) h.probabilities[i] = static_cast<double>(counts[i]) / records.size();
  return h;
}

Histogram histogram_of_values(std::span<const double> values, unsigned bin_count) {
  check_bins(bin_count);
  if (values.empty()) throw InvalidArgument("histogram of an empty value set");
  std::vector<std::uint64_t> counts(bin_count, 0);
  for (double v : values) {
    if (!(v >= 0.0)) throw DomainError("histogram values must be non-negative");
    double scaled = std::floor(v / kHistogramTop * bin_count);
    ++counts[static_cast<std::size_t>(std::min<double>(scaled, bin_count - 1))];
  }
  Histogram h{uniform_edges(bin_count), std::vector<double>(bin_count), values.size()};
  for (unsigned i = 0; i < bin_count; ++i) h.probabilities[i] = static_cast<double>(counts[i]) / values.size();
  return h;
}

Histogram histogram_from_bins(std::vector<double> bin_edges, std::vector<double> probabilities,
                              std::uint64_t sample_count) {
  if (probabilities.empty() || bin_edges.size() != probabilities.size() + 1) {
    throw InvalidArgument("histogram needs one more edge than bins");
  }
  for (std::size_t i = 0; i + 1 < bin_edges.size(); ++i) {
    if (!(bin_edges[i] < bin_edges[i + 1])) throw InvalidArgument("histogram edges must increase");
  }
  double total = 0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw InvalidArgument("histogram probabilities must be non-negative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw InvalidArgument("histogram probabilities must sum to 1");
  return Histogram{std::move(bin_edges), std::move(probabilities), sample_count};
}

PowerLawFit power_law_fit(const Histogram& h, double lo, double hi) {
  if (!(lo < hi)) throw InvalidArgument("fit window requires lo < hi");
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < h.bin_count(); ++i) {
    double c = h.bin_center(i);
    if (c < lo || c > hi || h.probabilities[i] <= 0.0 || c <= 0.0) continue;
    xs.push_back(std::log(c));
    ys.push_back(std::log(h.probabilities[i]));
  }
  if (xs.size() < 3) {
    throw InsufficientData("power-law fit needs >= 3 nonzero bins in [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "], found " + std::to_string(xs.size()));
  }
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  PowerLawFit fit;
  fit.alpha = sxy / sxx;
  fit.intercept = my - fit.alpha * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double e = ys[i] - (fit.intercept + fit.alpha * xs[i]);
    ss_res += e * e;
  }
  // A perfectly flat window has no variance to explain.
  fit.r_squared = syy > 0 ? 1.0 - ss_res / syy : 1.0;
  fit.window_lo = lo;
  fit.window_hi = hi;
  fit.bins_used = xs.size();
  fit.sample_count = h.sample_count;
  return fit;
}

}  // namespace collatz
