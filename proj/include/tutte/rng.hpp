#ifndef TUTTE_RNG_HPP
#define TUTTE_RNG_HPP

#include <cstdint>
#include <random>

namespace tutte {

/// Seeded generator with an unbiased bounded draw. std::mt19937_64 is
/// fully specified by the standard; the rejection step below avoids
/// std::uniform_int_distribution, whose output is implementation-defined.
/// This keeps generated test families identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform value in [0, bound); bound 0 yields 0.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t threshold = (-bound) % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

  /// Uniform value in [lo, hi] inclusive.
  std::uint64_t in_range(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tutte

#endif  // TUTTE_RNG_HPP
