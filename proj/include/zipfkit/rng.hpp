#pragma once

#include <cstdint>
#include <random>

namespace zipfkit {

/// Deterministic uniform source shared by every randomized component.
///
/// The generator is std::mt19937_64 seeded directly with the caller's seed;
/// its output stream is specified bit-for-bit by the C++ standard, so runs
/// are reproducible across platforms. Doubles are derived from the top 53
/// bits rather than std::uniform_real_distribution, whose mapping is
/// implementation-defined.
class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53-bit resolution.
  double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace zipfkit
