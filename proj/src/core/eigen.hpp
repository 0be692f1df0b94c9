#pragma once

#include <span>
#include <utility>
#include <vector>

#include "pipeline.hpp"

namespace dkp {

// One evaluation of the eigenfunctions at a grid point: the solution k of
// Lambda1(x, y, k) = lambda, with Psi1 = k and Psi2 = -(k - kbar) w(x, y, k).
struct EigenSample {
  int ix = 0, iy = 0;
  double x = 0.0, y = 0.0;
  Complex lambda;
  Complex k;
  Complex psi1;
  Complex psi2;
  int iterations = 0;
  double roundtrip = 0.0;        // |Lambda1(x,y,k) - lambda|
  double max_step_ratio = 0.0;   // measured |dk_{n+1}| / |dk_n|
  bool covering_certified = true;   // Im lambda above the covering bound
  bool semiplane_certified = true;  // Im k stayed above the bound of eq. for D
};

// Fixed-point inversion k_{n+1} = lambda - phi(x, y, k_n) from k_0 = lambda,
// each step solving (or fetching) the Hopf problem at k_n. With
// cfg.newton_acceleration the update divides by Xi(x, y, k_n) instead.
// Throws Error(outside_certified_region) only when
// cfg.enforce_covering_bound is set and Im lambda is below the bound;
// otherwise the sample is flagged and the iteration proceeds.
EigenSample invert_k(const KPipeline& pipe, Complex lambda, int ix, int iy);

// Truncated large-lambda series of Psi1:
//   lambda + u/lambda - dx^{-1}u_y / lambda^2 + (dx^{-2}u_yy - u^2/2)/lambda^3
ComplexField asymptotic_psi1(const ComplexField& u, Complex lambda, int order);

// Truncated large-lambda series of Psi2:
//   x - lambda y - y u/lambda + dx^{-1}(y u)_y / lambda^2
//   + (y u^2/2 - dx^{-2}(y u)_yy) / lambda^3
ComplexField asymptotic_psi2(const ComplexField& u, Complex lambda, int order);

// Finite-difference residual of L1 Psi = Psi_y + lambda Psi_x - u_x Psi_lambda
// over the sampled grid points, with 4th-order stencils in x and y (grid
// spacing) and in lambda (step delta_lambda).
struct VectorFieldResidual {
  double max_psi1 = 0.0;
  double max_psi2 = 0.0;
  int samples = 0;
};

VectorFieldResidual vector_field_residual(
    const KPipeline& pipe, Complex lambda,
    std::span<const std::pair<int, int>> points, double delta_lambda = 0.02);

}  // namespace dkp
