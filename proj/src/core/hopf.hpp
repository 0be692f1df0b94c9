#pragma once

#include <vector>

#include "field.hpp"
#include "solver_config.hpp"
#include "spectral.hpp"

namespace dkp {

// Output of the contraction solve of the forced complex Hopf equation,
// Lambda1 = k + phi with phi the decaying correction.
struct HopfSolution {
  SpectralParam k;
  ComplexField phi;
  ComplexField lambda1;     // k + phi
  int iterations = 0;
  double residual = 0.0;    // sup | dzbar phi + phi phi_x + u_x |
  double h4_norm = 0.0;     // H^l norm of phi (l from config)
  double contraction_ratio = 0.0;  // last-step delta ratio
  double fixed_point_delta = 0.0;  // last relative H^l change

  double u_norm = 0.0;             // H^l norm of u
  double ball_radius = 0.0;        // 2 ||u|| / |Im k|
  double max_iterate_norm = 0.0;   // max_j ||phi_j||_{H^l}
  std::vector<double> iterate_norms;
};

// Solve phi = -(Pi-1)(phi^2)/(2(kbar-k)) - (Pi-1)(u)/(kbar-k) by fixed-point
// iteration from phi_0 = 0. Throws Error(non_convergence) when the iteration
// exhausts max_iter or stops contracting (|Im k| too small for this u).
HopfSolution solve_phi(const ComplexField& u, const SpectralParam& k,
                       const SolverConfig& cfg);

// Differential residual sup | dzbar phi + phi phi_x + u_x | of a candidate phi.
double hopf_residual(const ComplexField& u, const ComplexField& phi,
                     const SpectralParam& k);

// Truncated large-k series of Lambda1:
//   k - u/k + dy dx^{-1} u / k^2 - (dy^2 dx^{-2} u + u^2/2) / k^3
// 'order' in 0..3 selects how many corrections are kept.
ComplexField asymptotic_lambda1(const ComplexField& u, const SpectralParam& k,
                                int order);

// Contraction diagnostics: the a-priori ratio 2 alpha ||u|| / (Im k)^2 and
// empirical Lipschitz ratios of the quadratic map G sampled on random pairs
// inside the ball B1.
struct ContractionReport {
  double c_bound = 0.0;       // 2 alpha ||u|| / (Im k)^2, must be < 1
  double ball_radius = 0.0;   // 2 ||u|| / |Im k|
  std::vector<double> empirical_ratio;  // ||G(p1)-G(p2)|| / ||p1-p2||
  std::vector<double> stated_bound;     // alpha (||p1||+||p2||) / |Im k|
  double max_ratio_over_bound = 0.0;
};

ContractionReport contraction_diagnostic(const ComplexField& u,
                                         const SpectralParam& k,
                                         const SolverConfig& cfg,
                                         unsigned long long seed = 0,
                                         int samples = 6);

}  // namespace dkp
