#pragma once

#include <cstdint>
#include <random>

#include "eigenstrata/rational.hpp"

namespace eigenstrata {

/// splitmix64 finalizer; used to derive independent sub-seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

/// Sub-seed for stream `stream` of `seed`. Every random quantity in the
/// library is drawn from a stream derived this way, so results depend only
/// on the root seed and never on evaluation order.
constexpr std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(mix64(seed) ^ (stream * 0xd1b54a32d192ed03ULL + 0x632be59bd9b4e019ULL));
}

/// Deterministic generator. Only raw mt19937_64 output is used (bounded
/// draws by rejection), so sequences are identical across standard
/// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1U;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return lo + static_cast<std::int64_t>(x % span);
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11U) * 0x1.0p-53; }

  /// Rational p/q with p uniform in [-height, height], q uniform in [1, height].
  Rational rational(std::int64_t height) { return {static_cast<long>(uniform(-height, height)), static_cast<long>(uniform(1, height))}; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace eigenstrata
