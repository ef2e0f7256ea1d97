#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ccn {

// Deterministic double streams on top of mt19937_64. The standard
// distributions are implementation-defined, so the mappings are spelled out
// here; identical seeds give identical draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double unit() { return (double)(g_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  double symmetric() { return uniform(-1.0, 1.0); }

  // Uniform on [-1,1] conditioned on |x| >= margin.
  double away_from_zero(double margin) {
    for (;;) {
      double x = symmetric();
      if (std::fabs(x) >= margin) return x;
    }
  }

  int pick(int n) { return (int)(g_() % (std::uint64_t)n); }

  double sign() { return (g_() & 1) ? 1.0 : -1.0; }

  // Standard normal via Box-Muller.
  double normal() {
    double u1;
    do {
      u1 = unit();
    } while (u1 <= 0.0);
    double u2 = unit();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::mt19937_64 g_;
};

}  // namespace ccn
