#include "collatz/stopping_cache.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <limits>
#include <vector>

#include "collatz/error.hpp"

namespace collatz {

namespace {

constexpr std::array<char, 8> kMagic = {'C', 'L', 'Z', 'M', 'E', 'M', 'O', '1'};
constexpr std::uint64_t kMaxField = std::numeric_limits<std::uint32_t>::max();

std::uint64_t pack(std::uint64_t sigma, std::uint64_t odd) { return (sigma << 32) | odd; }

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> b{};
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b.data(), b.size());
}

std::uint64_t get_u64(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

}  // namespace

StoppingCache::StoppingCache(std::uint64_t limit)
    : limit_(limit), entries_(std::make_unique<std::atomic<std::uint64_t>[]>(limit + 1)) {
  for (std::uint64_t i = 0; i <= limit_; ++i) entries_[i].store(0, std::memory_order_relaxed);
  if (limit_ >= 1) entries_[1].store(pack(3, 1), std::memory_order_relaxed);
}

std::optional<StoppingResult> StoppingCache::lookup(std::uint64_t x) const {
  if (x == 0 || x > limit_) return std::nullopt;
  std::uint64_t e = entries_[x].load(std::memory_order_relaxed);
  if (e == 0) return std::nullopt;
  return StoppingResult{e >> 32, e & 0xffffffffu, false};
}

void StoppingCache::store(std::uint64_t x, std::uint64_t sigma, std::uint64_t odd_steps) {
  if (x == 0 || x > limit_ || sigma == 0 || sigma > kMaxField || odd_steps > kMaxField) return;
  entries_[x].store(pack(sigma, odd_steps), std::memory_order_relaxed);
}

std::uint64_t StoppingCache::known_count() const {
  std::uint64_t n = 0;
  for (std::uint64_t i = 1; i <= limit_; ++i) n += entries_[i].load(std::memory_order_relaxed) != 0;
  return n;
}

StoppingCache StoppingCache::load(const std::filesystem::path& path, std::uint64_t limit) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open cache file " + path.string());
  std::vector<unsigned char> header(16);
  in.read(reinterpret_cast<char*>(header.data()), 16);
  if (in.gcount() != 16 || std::memcmp(header.data(), kMagic.data(), kMagic.size()) != 0) {
    throw IoError("not a stopping-time cache file: " + path.string());
  }
  std::uint64_t count = get_u64(header.data() + 8);
  std::vector<unsigned char> body(count * 8);
  in.read(reinterpret_cast<char*>(body.data()), static_cast<std::streamsize>(body.size()));
  if (static_cast<std::uint64_t>(in.gcount()) != body.size()) {
    throw IoError("truncated cache file: " + path.string());
  }
  StoppingCache cache(std::max(limit, count));
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t raw = get_u64(body.data() + 8 * i);
    std::uint64_t sigma = raw & 0xffffffffu;
    std::uint64_t odd = raw >> 32;
    if (sigma != 0) cache.store(i + 1, sigma, odd);
  }
  return cache;
}

void StoppingCache::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write cache file " + path.string());
  out.write(kMagic.data(), kMagic.size());
  put_u64(out, limit_);
  for (std::uint64_t x = 1; x <= limit_; ++x) {
    std::uint64_t e = entries_[x].load(std::memory_order_relaxed);
    // file order: sigma in the low word, odd_steps in the high word
    put_u64(out, (e >> 32) | ((e & 0xffffffffu) << 32));
  }
  if (!out) throw IoError("failed writing cache file " + path.string());
}

StoppingResult memoized_stopping_time(std::uint64_t x, StoppingCache* cache, std::uint64_t cap) {
  if (x == 0) throw DomainError("stopping time requires x >= 1");
  if (x == 1) return StoppingResult{3, 1, false};
  if (cache) {
    if (auto hit = cache->lookup(x)) return *hit;
  }

  // Walk forward until 1 or a known value, then back-fill the path.
  thread_local std::vector<std::uint64_t> path;
  path.clear();
  std::uint64_t v = x;
  std::uint64_t base_sigma = 0;
  std::uint64_t base_odd = 0;
  while (v != 1) {
    if (v != x && cache) {
      if (auto hit = cache->lookup(v)) {
        base_sigma = hit->sigma;
        base_odd = hit->odd_steps;
        break;
      }
    }
    if (path.size() >= cap) {
      throw CapExceeded("step cap " + std::to_string(cap) + " exceeded for x = " + std::to_string(x), x);
    }
    path.push_back(v);
    if (v & 1u) {
      if (v > (std::numeric_limits<std::uint64_t>::max() - 1) / 3) {
        throw OverflowError("trajectory of x = " + std::to_string(x) + " exceeds 64 bits", x);
      }
      v = 3 * v + 1;
    } else {
      v >>= 1;
    }
  }
  if (path.size() + base_sigma > cap) {
    throw CapExceeded("step cap " + std::to_string(cap) + " exceeded for x = " + std::to_string(x), x);
  }

  std::uint64_t sigma = base_sigma;
  std::uint64_t odd = base_odd;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    ++sigma;
    odd += *it & 1u;
    if (cache && *it <= cache->limit()) cache->store(*it, sigma, odd);
  }
  return StoppingResult{sigma, odd, false};
}

}  // namespace collatz
