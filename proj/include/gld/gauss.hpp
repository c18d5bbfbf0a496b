#pragma once

#include <cmath>

namespace gld {

/// log P(Z > z) for standard normal Z, valid far into the tail.
/// Below the switch point the value goes through erfc directly; beyond it
/// erfc underflows and the asymptotic series
///   log Phi_bar(z) = -z^2/2 - log(z sqrt(2 pi)) + log(1 - 1/z^2 + 3/z^4 - ...)
/// takes over (relative error < 1e-13 at the crossover).
inline double log_norm_tail(double z) {
  if (z < 20.0) {
    return std::log(0.5 * std::erfc(z / std::sqrt(2.0)));
  }
  const double z2 = z * z;
  double term = 1.0;
  double series = 0.0;
  for (int k = 1; k <= 8; ++k) {
    term *= -(2.0 * k - 1.0) / z2;
    series += term;
  }
  return -0.5 * z2 - 0.5 * std::log(2.0 * M_PI) - std::log(z) + std::log1p(series);
}

/// P(Z > z); underflows to 0 for very large z, use log_norm_tail there.
inline double norm_tail(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace gld
