#pragma once

#include <cstdint>
#include <random>

namespace tiltcara {

/// splitmix64 finalizer; derives independent stream seeds from (base, stream).
std::uint64_t split_seed(std::uint64_t base, std::uint64_t stream);

/// Seeded generator whose output is fixed by the standard (mt19937_64 plus
/// explicit bit-to-double mapping), so draws are identical across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Unit-rate exponential.
  double exponential();
  /// Uniform integer in [lo, hi].
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi);

private:
  std::mt19937_64 engine_;
};

}  // namespace tiltcara
