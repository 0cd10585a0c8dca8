#pragma once

#include <complex>
#include <cstdint>

namespace nsspec {

/// Counter-based SplitMix64 stream.
///
/// Output k (k = 0, 1, ...) of the stream with key `s` is
///   mix64(s + (k + 1) * 0x9E3779B97F4A7C15)
/// where mix64 is the SplitMix64 finalizer
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z =  z ^ (z >> 31)
/// with all arithmetic mod 2^64. Stream 0 uses the seed as key; stream id != 0 uses
/// mix64(seed ^ mix64(stream_id)). Doubles in [0, 1) take the top 53 bits.
class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  static std::uint64_t mix64(std::uint64_t z);

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Real and imaginary parts independently uniform in [-1, 1).
  std::complex<double> unit_square();

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace nsspec
