#pragma once

#include <cmath>
#include <random>

#include "sasaki/numlin.hpp"

namespace sasaki {

/// Deterministic standard normal via Box-Muller on mt19937_64 uniforms.
/// std::normal_distribution is implementation-defined; this keeps seeded
/// outputs identical across standard libraries.
inline double sample_gaussian(std::mt19937_64& rng) {
  // Map to (0, 1]; avoids log(0).
  const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

inline Vector random_unit_vector(std::mt19937_64& rng, int dim) {
  Vector v(dim);
  double norm2 = 0.0;
  do {
    for (int i = 0; i < dim; ++i) v(i) = sample_gaussian(rng);
    norm2 = v.squaredNorm();
  } while (norm2 < 1e-12);
  return v / std::sqrt(norm2);
}

}  // namespace sasaki
