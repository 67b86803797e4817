#pragma once

#include <cstdint>

namespace frobtrace {

// SplitMix64. Portable and fully specified, so seeded runs reproduce across
// platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

// Independent substream for one (seed, q, index) triple.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t q, std::uint64_t index) noexcept {
  SplitMix64 mix(seed);
  std::uint64_t s = mix.next();
  s ^= SplitMix64(q ^ 0x5851f42d4c957f2dull).next();
  s = SplitMix64(s).next() ^ SplitMix64(index + 0x14057b7ef767814full).next();
  return SplitMix64(s);
}

}  // namespace frobtrace
