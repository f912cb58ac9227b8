#ifndef BGROVER_RNG_HPP
#define BGROVER_RNG_HPP

#include <cstdint>

namespace bgrover {

/// Counter-based generator: draw i is SplitMix64's finalizer applied to
/// seed + (i + 1) * golden_gamma. Every draw is a pure function of
/// (seed, i), so streams are reproducible on any platform and can be
/// split without shared state.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t at(std::uint64_t counter) const {
    std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() { return at(counter_++); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound]. Uses the widening-multiply reduction;
  /// the bias is below 2^-64 * bound and irrelevant at the sizes used here.
  std::uint64_t uniform_int(std::uint64_t bound) {
    if (bound == UINT64_MAX) return next();
    __extension__ typedef unsigned __int128 Wide;
    const Wide product = static_cast<Wide>(next()) * (bound + 1);
    return static_cast<std::uint64_t>(product >> 64);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace bgrover

#endif  // BGROVER_RNG_HPP
