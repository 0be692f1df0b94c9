#pragma once

#include <random>

#include "field.hpp"
#include "spectral.hpp"

namespace dkp {

// Seeded band-limited random field: gaussian coefficients damped by
// exp(-decay |p|^2) on modes |j| <= N/3, zero mean. Deterministic for a
// given (grid, seed, decay); used by property tests and the empirical
// contraction diagnostic.
inline ComplexField random_field(const GridPtr& grid, unsigned long long seed,
                                 double decay = 0.05) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Spectrum s(grid);
  const int n = grid->n();
  const int cut = n / 3;
  for (int jx = -cut; jx <= cut; ++jx)
    for (int jy = -cut; jy <= cut; ++jy) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      if (jx == 0 && jy == 0) continue;
      const double px = M_PI / grid->half_width() * jx;
      const double py = M_PI / grid->half_width() * jy;
      s.at(jx, jy) = Complex(re, im) * std::exp(-decay * (px * px + py * py));
    }
  return dft_inverse(s);
}

}  // namespace dkp
