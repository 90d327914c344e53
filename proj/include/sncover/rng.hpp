#pragma once

#include <cstdint>

namespace sncover {

/// Counter-based random bits: every draw is a pure hash of
/// (seed, purpose, a, b, c), so draws for distinct keys are independent and
/// the result never depends on evaluation order or thread count.
class CounterRng {
 public:
  explicit CounterRng(uint64_t seed) : seed_(seed) {}

  uint64_t seed() const { return seed_; }

  uint64_t bits(uint64_t purpose, uint64_t a = 0, uint64_t b = 0, uint64_t c = 0) const {
    uint64_t h = seed_ ^ 0x9e3779b97f4a7c15ULL;
    h = mix(h ^ purpose);
    h = mix(h ^ a);
    h = mix(h ^ b);
    h = mix(h ^ c);
    return h;
  }

  /// Uniform double in [0,1).
  double uniform01(uint64_t purpose, uint64_t a = 0, uint64_t b = 0, uint64_t c = 0) const {
    return static_cast<double>(bits(purpose, a, b, c) >> 11) * 0x1.0p-53;
  }

  bool coin(uint64_t purpose, uint64_t a = 0, uint64_t b = 0, uint64_t c = 0) const {
    return bits(purpose, a, b, c) & 1;
  }

  /// Uniform integer in [0, bound), unbiased via rejection; extra attempts are
  /// folded into the key so retries stay deterministic.
  uint64_t below(uint64_t bound, uint64_t purpose, uint64_t a = 0, uint64_t b = 0,
                 uint64_t c = 0) const {
    if (bound <= 1) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (uint64_t attempt = 0;; ++attempt) {
      uint64_t v = bits(purpose, a, b, c ^ (attempt << 48));
      if (v < limit) return v % bound;
    }
  }

 private:
  static uint64_t mix(uint64_t z) {
    // splitmix64 finalizer
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t seed_;
};

/// Purpose tags keeping the independent random streams apart.
namespace rng_purpose {
inline constexpr uint64_t kShrinkCoin = 1;
inline constexpr uint64_t kShrinkPick = 2;
inline constexpr uint64_t kLubyPriority = 3;
inline constexpr uint64_t kGenerator = 4;
}  // namespace rng_purpose

}  // namespace sncover
