#pragma once

#include "stabinfer/types.hpp"

#include <cstdint>

namespace stabinfer {

/// SplitMix64 generator (Steele, Lea, Flood 2014). All randomness in the
/// toolkit flows from a single 64-bit seed through this generator so that
/// every experiment is bit-reproducible; std::random distributions are
/// avoided on purpose because their streams are implementation-defined.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; consumes two uniforms per pair and
  /// caches the second draw.
  double next_gaussian();

  /// Derives an independent stream (e.g. per trial) from this one.
  SplitMix64 fork() { return SplitMix64(next_u64()); }

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Matrix with i.i.d. standard normal entries, filled column-major.
Matrix gaussian_matrix(SplitMix64& rng, Index rows, Index cols,
                       double stddev = 1.0);

/// Haar-ish random orthogonal matrix: QR of a Gaussian matrix with the
/// R-diagonal sign fix so the result is deterministic in the seed.
Matrix random_orthogonal(SplitMix64& rng, Index n);

}  // namespace stabinfer
