#include "hopf.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "random_field.hpp"

namespace dkp {

void SolverConfig::validate() const {
  if (tol_fixed_point <= 0.0 || tol_residual <= 0.0 || tol_k <= 0.0)
    fail(ErrorCode::invalid_argument, "solver tolerances must be positive");
  if (max_iter < 1 || max_k_iter < 1 || max_series_terms < 1)
    fail(ErrorCode::invalid_argument, "iteration limits must be >= 1");
  if (sobolev_order < 0)
    fail(ErrorCode::invalid_argument, "sobolev order must be >= 0");
  if (covering_c <= 0.0 || covering_c >= 0.5)
    fail(ErrorCode::invalid_argument, "covering constant must lie in (0, 1/2)");
}

double hopf_residual(const ComplexField& u, const ComplexField& phi,
                     const SpectralParam& k) {
  ComplexField r = derivative(phi, Deriv::zbar, k);
  r += phi * derivative(phi, Deriv::x);
  r += derivative(u, Deriv::x);
  return sup_norm(r);
}

HopfSolution solve_phi(const ComplexField& u, const SpectralParam& k,
                       const SolverConfig& cfg) {
  cfg.validate();
  const int l = cfg.sobolev_order;
  const Complex kbar_minus_k = k.kbar_minus_k();

  const double u_norm = sobolev_norm(u, l);
  const double ball_radius = 2.0 * u_norm / k.abs_im_k();
  const ComplexField forcing =
      (-1.0 / kbar_minus_k) * pi_minus_one(u, k);

  ComplexField phi = ComplexField::zeros(u.grid_ptr());
  double prev_delta = -1.0;
  double ratio = 0.0;
  int worsening = 0;

  HopfSolution sol{k, phi, phi};
  sol.u_norm = u_norm;
  sol.ball_radius = ball_radius;

  for (int it = 1; it <= cfg.max_iter; ++it) {
    ComplexField next = forcing;
    if (it > 1) {  // phi_0 = 0, so the quadratic term first appears at step 2
      ComplexField sq = multiply(phi, phi, cfg.dealias);
      next += (-0.5 / kbar_minus_k) * pi_minus_one(sq, k);
    }

    const double delta = sobolev_norm(next - phi, l);
    const double norm_next = sobolev_norm(next, l);
    if (prev_delta > 0.0) {
      ratio = delta / prev_delta;
      worsening = (ratio >= 1.0) ? worsening + 1 : 0;
    }
    phi = next;
    sol.iterations = it;
    sol.iterate_norms.push_back(norm_next);
    sol.max_iterate_norm = std::max(sol.max_iterate_norm, norm_next);
    sol.fixed_point_delta = delta / std::max(norm_next, 1e-300);

    const double scale = std::max(norm_next, u_norm);
    if (delta <= cfg.tol_fixed_point * std::max(scale, 1e-300)) {
      const double res = hopf_residual(u, phi, k);
      if (res <= cfg.tol_residual) {
        sol.phi = phi;
        sol.lambda1 = phi;
        for (auto& v : sol.lambda1.values()) v += k.k();
        sol.residual = res;
        sol.h4_norm = norm_next;
        sol.contraction_ratio = ratio;
        if (!all_finite(sol.phi))
          fail(ErrorCode::non_convergence, "hopf solve produced non-finite values");
        return sol;
      }
      if (delta <= 1e-3 * cfg.tol_fixed_point * std::max(scale, 1e-300)) {
        std::ostringstream msg;
        msg << "hopf residual stagnated at " << res << " (tol "
            << cfg.tol_residual << ") after " << it << " iterations";
        fail(ErrorCode::non_convergence, msg.str());
      }
    }
    if (worsening >= 3) {
      std::ostringstream msg;
      msg << "hopf iteration stopped contracting (ratio " << ratio
          << "); a-priori bound 2 alpha ||u|| / (Im k)^2 = "
          << k.contraction_constant(u_norm, cfg.alpha_l)
          << " -- |Im k| too small for this potential";
      fail(ErrorCode::non_convergence, msg.str());
    }
    prev_delta = delta;
  }

  std::ostringstream msg;
  msg << "hopf iteration exhausted " << cfg.max_iter
      << " iterations; a-priori bound 2 alpha ||u|| / (Im k)^2 = "
      << k.contraction_constant(u_norm, cfg.alpha_l);
  fail(ErrorCode::non_convergence, msg.str());
}

ComplexField asymptotic_lambda1(const ComplexField& u, const SpectralParam& k,
                                int order) {
  if (order < 0 || order > 3)
    fail(ErrorCode::invalid_argument, "asymptotic order must be in 0..3");
  ComplexField out = ComplexField::zeros(u.grid_ptr());
  for (auto& v : out.values()) v = k.k();
  const Complex kk = k.k();
  if (order >= 1) out += (-1.0 / kk) * u;
  if (order >= 2) out += (1.0 / (kk * kk)) * derivative(dx_inv(u), Deriv::y);
  if (order >= 3) {
    ComplexField third = derivative(derivative(dx_inv(u, 2), Deriv::y), Deriv::y);
    third += 0.5 * (u * u);
    out += (-1.0 / (kk * kk * kk)) * third;
  }
  return out;
}

ContractionReport contraction_diagnostic(const ComplexField& u,
                                         const SpectralParam& k,
                                         const SolverConfig& cfg,
                                         unsigned long long seed, int samples) {
  const int l = cfg.sobolev_order;
  ContractionReport rep;
  rep.c_bound = k.contraction_constant(sobolev_norm(u, l), cfg.alpha_l);
  rep.ball_radius = 2.0 * sobolev_norm(u, l) / k.abs_im_k();

  const Complex kbar_minus_k = k.kbar_minus_k();
  auto G = [&](const ComplexField& p) {
    return (0.5 / kbar_minus_k) * pi_minus_one(multiply(p, p, cfg.dealias), k);
  };

  const double radius = rep.ball_radius > 0.0 ? rep.ball_radius : 1.0;
  for (int s = 0; s < samples; ++s) {
    ComplexField p1 = random_field(u.grid_ptr(), seed + 2 * s);
    ComplexField p2 = random_field(u.grid_ptr(), seed + 2 * s + 1);
    const double n1 = sobolev_norm(p1, l);
    const double n2 = sobolev_norm(p2, l);
    if (n1 == 0.0 || n2 == 0.0) continue;
    // scale both inside the ball B1
    p1 = (0.8 * radius / n1) * p1;
    p2 = (0.4 * radius / n2) * p2;
    const double dn = sobolev_norm(p1 - p2, l);
    if (dn == 0.0) continue;
    const double num = sobolev_norm(G(p1) - G(p2), l);
    const double bound = cfg.alpha_l *
                         (sobolev_norm(p1, l) + sobolev_norm(p2, l)) /
                         k.abs_im_k();
    rep.empirical_ratio.push_back(num / dn);
    rep.stated_bound.push_back(bound);
    if (bound > 0.0)
      rep.max_ratio_over_bound =
          std::max(rep.max_ratio_over_bound, (num / dn) / bound);
  }
  return rep;
}

}  // namespace dkp
