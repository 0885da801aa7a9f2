#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>

#include "collatz/dynamics.hpp"

namespace collatz {

/// Memo table of (sigma, odd_steps) for contiguous x in [1, limit].
///
/// Safe for concurrent use: lookups and stores are relaxed atomics and every
/// store for a given x writes the same value, so interleaving never changes
/// what a reader can observe beyond "known" vs "not yet known".
///
/// On-disk layout (little-endian):
///   8 bytes  magic "CLZMEMO1"
///   8 bytes  entry count N
///   N * 8    entry for x = 1..N: uint32 sigma, uint32 odd_steps; (0, 0) = unknown
class StoppingCache {
 public:
  explicit StoppingCache(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  std::optional<StoppingResult> lookup(std::uint64_t x) const;
  void store(std::uint64_t x, std::uint64_t sigma, std::uint64_t odd_steps);
  std::uint64_t known_count() const;

  /// Loads a cache file; the table covers max(limit, entries in file).
  static StoppingCache load(const std::filesystem::path& path, std::uint64_t limit);
  void save(const std::filesystem::path& path) const;

 private:
  std::uint64_t limit_;
  std::unique_ptr<std::atomic<std::uint64_t>[]> entries_;
};

/// Stopping time of x on 64-bit values, reading and filling `cache` along
/// the way. Throws OverflowError / CapExceeded naming x.
StoppingResult memoized_stopping_time(std::uint64_t x, StoppingCache* cache,
                                      std::uint64_t cap = kDefaultStepCap);

}  // namespace collatz
