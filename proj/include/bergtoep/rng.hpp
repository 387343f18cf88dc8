#pragma once

#include <random>

#include "bergtoep/bergman.hpp"

namespace bergtoep {

/// Uniform double in [0, 1), platform-independent (raw 53-bit draw).
inline double u01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * u01(gen);
}

inline cplx random_unit(std::mt19937_64& gen) {
  const double th = 6.283185307179586476925286766559 * u01(gen);
  return {std::cos(th), std::sin(th)};
}

/// Uniform point of the ball of the given radius, by rejection.
Point random_ball_point(int n, double radius, std::mt19937_64& gen);

}  // namespace bergtoep
