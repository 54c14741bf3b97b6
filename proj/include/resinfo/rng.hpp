#pragma once

#include <cstdint>

namespace resinfo {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Counter-based generator keyed on (seed, stream).
///
/// Output n of a stream is a pure function of (seed, stream, n), so parallel
/// consumers drawing from disjoint streams reproduce bit-identically in any
/// execution order.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : key_(detail::splitmix64(detail::splitmix64(seed + detail::kGolden) ^
                                (0xD1342543DE82EF95ull * stream + 0x632BE59BD9B4E019ull))) {}

  std::uint64_t bits(std::uint64_t counter) const noexcept {
    return detail::splitmix64(key_ + detail::kGolden * (counter + 1));
  }

  /// Uniform double in [0, 1) addressed by counter.
  double uniform(std::uint64_t counter) const noexcept {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  std::uint64_t next_bits() noexcept { return bits(counter_++); }
  double next_uniform() noexcept { return uniform(counter_++); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace resinfo
