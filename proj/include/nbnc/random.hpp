#pragma once

#include <cstdint>
#include <random>

namespace nbnc {

/// SplitMix64 finalizer: a bijective 64-bit avalanche mix.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed of sub-stream `index` under `seed`:
///   mix64(seed ^ mix64((index + 1) * 0x9E3779B97F4A7C15)).
/// Changing this changes every published result; keep it stable.
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(seed ^ mix64((index + 1) * 0x9E3779B97F4A7C15ULL));
}

/// Reproducible uniform stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; doubles are formed from the top
/// 53 bits so u lies in [0, 1) identically on every platform.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline RandomStream make_stream(std::uint64_t seed, std::uint64_t index) {
  return RandomStream(stream_seed(seed, index));
}

/// Fresh nondeterministic seed for runs where the user supplied none.
/// Callers must echo it so the run can be replayed.
std::uint64_t entropy_seed();

}  // namespace nbnc
