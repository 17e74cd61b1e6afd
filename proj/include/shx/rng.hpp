#ifndef SHX_RNG_HPP
#define SHX_RNG_HPP

#include <cstdint>

namespace shx {

// Portable deterministic generator: xoshiro256** seeded through splitmix64.
// Every randomized operation owns one stream and draws from it in a
// documented order, so results are bit-reproducible across platforms.

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform double in [0, 1), 53 significant bits.
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n); n must be positive.
  std::uint64_t next_below(std::uint64_t n) {
    auto v = static_cast<std::uint64_t>(next_double() * static_cast<double>(n));
    return v >= n ? n - 1 : v;
  }

  // Uniform double in [-1, 1); the draw used for generated parameters.
  double next_signed() { return 2.0 * next_double() - 1.0; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

}  // namespace shx

#endif  // SHX_RNG_HPP
