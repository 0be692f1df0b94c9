#pragma once

#include "beltrami.hpp"
#include "field.hpp"
#include "hopf.hpp"

namespace dkp {

// Special solution Xi = 1 + Xi1 of the homogeneous linearized Hopf equation
// and the assembled Lambda2 = (k - kbar) Xi w, which tends to
// (k - kbar) z = -(x - k y) at the box edge.
struct LinearizedSolution {
  SpectralParam k;
  ComplexField xi1;       // decaying part
  ComplexField xi;        // 1 + xi1
  ComplexField lambda2;   // (k - kbar) Xi w sampled on the grid
  int terms = 0;
  double residual = 0.0;           // sup norm of the eq residual for Lambda2
  double xi_equation_residual = 0.0;  // substitution residual of the Xi1 equation
  double sup_xi1 = 0.0;
  double last_term_ratio = 0.0;
};

// Solve Xi1 + (Pi-1)(phi Xi1)/(kbar-k) = -(Pi-1)(phi)/(kbar-k) by Neumann
// iteration. Throws Error(series_divergence) when the iteration stops
// contracting (operator norm too large, |Im k| too small).
ComplexField solve_xi1(const ComplexField& phi, const SpectralParam& k,
                       const SolverConfig& cfg, int* terms_out = nullptr,
                       double* ratio_out = nullptr);

// Lambda2 = (k - kbar) Xi w with w = z + w_minus_z, sampled pointwise.
ComplexField assemble_lambda2(const ComplexField& xi,
                              const ComplexField& w_minus_z,
                              const SpectralParam& k);

// Substitution residual of the Xi1 integral equation (both sides evaluated).
double xi1_equation_residual(const ComplexField& phi, const ComplexField& xi1,
                             const SpectralParam& k, bool dealias_products);

// Residual of (Lambda2)_y + (Lambda1 Lambda2)_x computed with spectral
// derivatives of the periodic constituents and exact handling of the
// coordinate factors -(x - k y) and z (no periodization artifacts).
double lambda2_residual(const HopfSolution& hopf, const BeltramiSolution& belt,
                        const ComplexField& xi1, bool dealias_products);

// Full pipeline at one k: Hopf solve must be supplied; returns Xi and Lambda2
// with residual diagnostics filled in.
LinearizedSolution solve_linearized(const HopfSolution& hopf,
                                    const BeltramiSolution& belt,
                                    const SolverConfig& cfg);

// Truncated large-k series of Lambda2:
//   -(x - k y) + y u / k - (x u + dx^{-1}(2 y u_y + u)) / k^2
//   + (x dx^{-1}u_y + dx^{-1}(x u_y) + 3/2 y u^2 + 3 dx^{-2}(y u_y)_y) / k^3
ComplexField asymptotic_lambda2(const ComplexField& u, const SpectralParam& k,
                                int order);

}  // namespace dkp
