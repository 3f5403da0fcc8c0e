#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace excc {

/// Stateless counter-based random stream. Every draw is a pure function of
/// (key, counter), so results do not depend on scheduling or thread count.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t key) noexcept : key_(key) {}

  /// Key derived from a tuple of integers, e.g. (seed, n, sample, coefficient).
  template <typename... Ts>
  static constexpr CounterRng keyed(std::uint64_t seed, Ts... parts) noexcept {
    std::uint64_t key = mix(seed ^ 0x6a09e667f3bcc909ULL);
    ((key = mix(key ^ (static_cast<std::uint64_t>(parts) + 0x9e3779b97f4a7c15ULL))), ...);
    return CounterRng(key);
  }

  constexpr std::uint64_t next_u64() noexcept {
    return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_);
  }

  /// Uniform on [0, 1).
  constexpr double uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard complex Gaussian, E|z|^2 = 1 (Box-Muller).
  std::complex<double> complex_gaussian() noexcept {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double radius = std::sqrt(-std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

  /// Uniform on the disk of the given radius.
  std::complex<double> uniform_disk(double radius) noexcept {
    const double r = radius * std::sqrt(uniform());
    const double angle = 2.0 * std::numbers::pi * uniform();
    return {r * std::cos(angle), r * std::sin(angle)};
  }

 private:
  // splitmix64 finalizer
  static constexpr std::uint64_t mix(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace excc
