#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace toto {

// splitmix64. Seeded dataset operations must produce identical byte
// streams on every platform, which rules out std::shuffle and the
// standard distributions (both implementation-defined).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n) via multiply-shift.
  uint64_t bounded(uint64_t n) {
    return static_cast<uint64_t>(
        (static_cast<__uint128_t>(next_u64()) * n) >> 64);
  }

 private:
  uint64_t state_;
};

inline uint64_t fnv1a(std::string_view s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Per-item randomness keyed by (seed, id): deterministic regardless of
// processing order.
inline Rng keyed_rng(uint64_t seed, std::string_view id) {
  return Rng(seed ^ fnv1a(id));
}

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    const size_t j = static_cast<size_t>(rng.bounded(i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace toto
