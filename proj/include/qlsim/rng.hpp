#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace qlsim {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// SplitMix64 finalizer.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Counter-based generator: draw i is a pure function of (seed, i). Sweeps
/// hand each row/sample its own derived stream, so results do not depend on
/// execution order or thread count.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(detail::mix64(seed)) {}

  std::uint64_t word(std::uint64_t i) const {
    return detail::mix64(key_ + (i + 1) * detail::kGolden);
  }

  /// Uniform on [0, 1).
  double uniform(std::uint64_t i) const {
    return static_cast<double>(word(i) >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; one draw consumes two counter slots.
  double normal(std::uint64_t i) const {
    const double u1 = static_cast<double>((word(2 * i) >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = uniform(2 * i + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t key_;
};

/// Combines a seed with up to two stream labels into an independent substream.
inline constexpr std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a,
                                             std::uint64_t b = 0) {
  return detail::mix64(seed ^ detail::mix64(a ^ detail::mix64(b)));
}

}  // namespace qlsim
