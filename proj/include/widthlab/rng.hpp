#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace widthlab::util {

// Deterministic uniform and Gaussian draws on top of mt19937_64.  The
// standard distributions are implementation-defined, which would break
// byte-identical regression outputs across toolchains; these are not.
inline double uniform01(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

class Gaussian {
public:
  double operator()(std::mt19937_64& rng) {
    if (have_) {
      have_ = false;
      return cached_;
    }
    double u1 = uniform01(rng);
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = uniform01(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(a);
    have_ = true;
    return r * std::cos(a);
  }

private:
  bool have_ = false;
  double cached_ = 0.0;
};

}  // namespace widthlab::util
