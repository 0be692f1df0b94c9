#pragma once

#include "field.hpp"
#include "solver_config.hpp"
#include "spectral.hpp"

namespace dkp {

// Solution of the Beltrami equation dzbar w = q dz w for the deformed
// coordinate w = z + dzbar^{-1} f, f = sum_m (q Pi)^m q.
struct BeltramiSolution {
  SpectralParam k;
  ComplexField q;
  ComplexField f;            // Neumann series sum
  ComplexField w_minus_z;    // dzbar^{-1} f
  ComplexField pi_f;         // Pi f, so dz w = 1 + pi_f
  int terms = 0;
  double sup_q = 0.0;
  double jacobian_min = 0.0;     // min |dz w|^2 (1 - |q|^2)
  double residual = 0.0;         // sup | dzbar w - q dz w |
  double mean_defect = 0.0;      // |mean(q + q Pi f)|, the torus compatibility constant
  double last_term_ratio = 0.0;  // measured series contraction

  Complex w(double x, double y, int ix, int iy) const {
    return k.z(x, y) + w_minus_z(ix, iy);
  }
};

// Beltrami coefficient q = a / (1 + a) with a = phi / (k - kbar).
// Throws Error(degenerate_coefficient) when sup|a| >= 1 - margin.
ComplexField compute_q(const ComplexField& phi, const SpectralParam& k,
                       double margin = 0.05);

// Sum the Neumann series for f and assemble w. Throws
// Error(series_divergence) when partial sums stop contracting.
BeltramiSolution solve_w(const ComplexField& q, const SpectralParam& k,
                         const SolverConfig& cfg);

// min over the grid of (dz w)(conj dz w)(1 - q conj q); asserts positivity.
double jacobian_diagnostic(const BeltramiSolution& sol);

}  // namespace dkp
