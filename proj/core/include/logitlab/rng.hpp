#pragma once

#include <cstdint>
#include <string_view>

namespace logitlab {

/// SplitMix64: 64-bit state, one add and a mixing function per draw.
///
/// Streams are split with a counter scheme: substream k of root seed s is
/// seeded with mix(s + (k + 1) * golden). Trials that use substream(k)
/// therefore do not depend on the order in which other trials run.
class SplitMix64 {
 public:
  static constexpr std::string_view kAlgorithm = "splitmix64";
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  explicit constexpr SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t next() {
    state_ += kGolden;
    return mix(state_);
  }

  /// Uniform in [0, 1) with 53 random bits.
  constexpr double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound). Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t threshold = (0 - bound) % bound;
    __extension__ typedef unsigned __int128 Wide;
    for (;;) {
      const Wide product = static_cast<Wide>(next()) * bound;
      if (static_cast<std::uint64_t>(product) >= threshold) {
        return static_cast<std::uint64_t>(product >> 64);
      }
    }
  }

  static constexpr SplitMix64 substream(std::uint64_t root,
                                        std::uint64_t index) {
    return SplitMix64(mix(root + (index + 1) * kGolden));
  }

  constexpr std::uint64_t state() const { return state_; }

  // UniformRandomBitGenerator interface.
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  constexpr result_type operator()() { return next(); }

 private:
  std::uint64_t state_;
};

}  // namespace logitlab
