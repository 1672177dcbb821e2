#ifndef MOMKP_RNG_HPP
#define MOMKP_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace momkp {

/// One SplitMix64 step: advances `state` and returns the next output word.
inline constexpr std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Stateless SplitMix64 output for a given input word.
inline constexpr std::uint64_t mix64(std::uint64_t x) {
  std::uint64_t s = x;
  return splitmix64_next(s);
}

/// xoshiro256** seeded through SplitMix64.
///
/// The project pins this exact generator (instead of <random> engines and
/// distributions, whose bounded draws are implementation-defined) so that a
/// seed reproduces instances and runs bit-exactly on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64_next(s);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Unbiased draw in [0, n) via Lemire's multiply-shift with rejection.
  std::uint64_t bounded(std::uint64_t n) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
      const std::uint64_t threshold = -n % n;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * n;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    bounded(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

/// Deterministic sub-seed derivation: one root seed plus a path of tags
/// (phase, pass, solution index, ...) yields an independent stream seed.
/// Used everywhere a component needs its own RNG, so sequential and any
/// future parallel execution see identical per-unit streams.
inline std::uint64_t derive_seed(std::uint64_t root,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = mix64(root ^ 0x6f7ea1c9d4b35a17ULL);
  for (std::uint64_t word : path) h = mix64(h ^ mix64(word));
  return h;
}

/// Seed-path tags for the solver pipeline (documented part of the
/// reproducibility contract; see README).
enum : std::uint64_t {
  kSeedTagInitialPopulation = 1,
  kSeedTagPls = 2,
  kSeedTagAdaptiveWeight = 3,
  kSeedTagSubsolver = 4,
  kSeedTagMemotsInit = 5,
  kSeedTagMemotsMain = 6,
  kSeedTagWeightVector = 7,
};

}  // namespace momkp

#endif  // MOMKP_RNG_HPP
