#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace itcalc {

inline constexpr std::uint64_t kDefaultSeed = 0x49545F44;
inline constexpr int kDefaultHorizon = 50;

/// Knobs shared by the randomized parts of the engine. Every operation that
/// samples seeds a fresh generator from `seed`, so results only depend on
/// the inputs and these settings.
struct Settings {
  std::uint64_t seed = kDefaultSeed;
  /// Exhaustive searches run when |F_p|^dim <= 2^enumeration_bits.
  int enumeration_bits = 16;
  int random_trials = 24;
};

inline bool enumerable(std::size_t dim, std::uint32_t p, const Settings& s) {
  return static_cast<double>(dim) * std::log2(static_cast<double>(p)) <=
         static_cast<double>(s.enumeration_bits) + 1e-9;
}

}  // namespace itcalc
