#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "magsq/linalg.hpp"

namespace magsq {

// Deterministic sampler. std::mt19937_64 output is pinned by the standard;
// the distribution mappings here are spelled out so results do not depend
// on the standard library's (unspecified) distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(eng_() % span);
  }

  double gaussian() {
    double u1 = uniform01();
    if (u1 < 1e-300) u1 = 1e-300;
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  Vec unit_vector(std::size_t n) {
    while (true) {
      Vec v(n);
      double s = 0.0;
      for (auto& x : v) {
        x = gaussian();
        s += x * x;
      }
      if (s > 1e-12) {
        const double inv = 1.0 / std::sqrt(s);
        for (auto& x : v) x *= inv;
        return v;
      }
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace magsq
