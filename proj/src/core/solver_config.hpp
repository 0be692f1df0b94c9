#pragma once

namespace dkp {

// Tolerances and knobs shared by the fixed-point and Neumann-series solvers.
struct SolverConfig {
  double tol_fixed_point = 1e-12;  // relative H^l change between iterates
  double tol_residual = 1e-8;      // sup norm of the differential residual
  int max_iter = 200;
  double alpha_l = 1.0;            // Banach-algebra constant (advisory)
  int sobolev_order = 4;
  bool dealias = true;

  int max_series_terms = 500;      // Neumann series cap (Beltrami, Xi1)

  // k-inversion
  double tol_k = 1e-12;            // |k_{n+1} - k_n| stop, relative to max(1,|lambda|)
  int max_k_iter = 100;
  double covering_c = 0.45;        // C in the covering bound, must be < 1/2
  bool enforce_covering_bound = false;
  bool newton_acceleration = false;
  double cache_quantum = 1e-12;    // k-cache quantization

  void validate() const;
};

}  // namespace dkp
