#pragma once

#include <cstdint>
#include <random>

namespace kop {

/// Seeded generator with platform-independent uniform draws (53-bit mantissa
/// from mt19937_64), so fixed seeds reproduce bit-identical runs everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double a, double b) {
    return a + (b - a) * ((eng_() >> 11) * 0x1.0p-53);
  }

  int uniform_int(int a, int b) {  // inclusive bounds
    return a + static_cast<int>(eng_() % static_cast<std::uint64_t>(b - a + 1));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace kop
