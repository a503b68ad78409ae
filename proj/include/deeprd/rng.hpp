#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "deeprd/errors.hpp"

namespace deeprd {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independent sub-seed for a named stream of a master seed.
inline constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(splitmix64(master) ^ splitmix64(stream ^ 0xa5a5a5a5a5a5a5a5ULL));
}

/// Seeded generator with hand-rolled draws. mt19937_64 output is pinned by the
/// standard and none of std::*_distribution is used, so identical seeds give
/// identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Unbiased integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw DomainError("Rng::below: empty range");
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  /// Integer in [lo, hi], both inclusive.
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo) throw DomainError("Rng::range: hi < lo");
    return lo + below(hi - lo + 1);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double real01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return real01() < p; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i)
      std::swap(items[i - 1], items[below(i)]);
  }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    if (items.empty()) throw DomainError("Rng::pick: empty pool");
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

/// FNV-1a over arbitrary bytes; used for content digests and mock seeding.
inline constexpr std::uint64_t fnv1a64(const char* data, std::size_t size,
                                       std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (std::size_t i = 0; i < size; ++i) {
    h ^= static_cast<unsigned char>(data[i]);
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  return fnv1a64(s.data(), s.size(), h);
}

}  // namespace deeprd
