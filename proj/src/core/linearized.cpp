#include "linearized.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dkp {

ComplexField solve_xi1(const ComplexField& phi, const SpectralParam& k,
                       const SolverConfig& cfg, int* terms_out,
                       double* ratio_out) {
  cfg.validate();
  const Complex kbar_minus_k = k.kbar_minus_k();
  auto T = [&](const ComplexField& g) {
    return (-1.0 / kbar_minus_k) *
           pi_minus_one(multiply(phi, g, cfg.dealias), k);
  };

  ComplexField term = (-1.0 / kbar_minus_k) * pi_minus_one(phi, k);
  ComplexField xi1 = term;
  double prev_norm = l2_norm(term);
  const double t0_norm = prev_norm;
  int terms = 1;
  int worsening = 0;
  double ratio = 0.0;
  while (prev_norm > 0.0 && terms < cfg.max_series_terms) {
    term = T(term);
    const double tn = l2_norm(term);
    ratio = tn / prev_norm;
    worsening = (ratio >= 1.0) ? worsening + 1 : 0;
    if (worsening >= 3) {
      std::ostringstream msg;
      msg << "Xi1 Neumann series stopped contracting (term ratio " << ratio
          << ") -- |Im k| too small for this phi";
      fail(ErrorCode::series_divergence, msg.str());
    }
    xi1 += term;
    ++terms;
    prev_norm = tn;
    if (tn <= cfg.tol_fixed_point * std::max(l2_norm(xi1), t0_norm)) break;
  }
  if (terms >= cfg.max_series_terms)
    fail(ErrorCode::series_divergence,
         "Xi1 Neumann series failed to settle within the term cap");
  if (terms_out) *terms_out = terms;
  if (ratio_out) *ratio_out = ratio;
  return xi1;
}

ComplexField assemble_lambda2(const ComplexField& xi,
                              const ComplexField& w_minus_z,
                              const SpectralParam& k) {
  require_same_grid(xi, w_minus_z);
  const Grid2D& g = xi.grid();
  const Complex pref = k.k_minus_kbar();
  ComplexField out(xi.grid_ptr());
  for (int ix = 0; ix < g.n(); ++ix) {
    const double x = g.coord(ix);
    for (int iy = 0; iy < g.n(); ++iy) {
      const double y = g.coord(iy);
      out(ix, iy) = pref * xi(ix, iy) * (k.z(x, y) + w_minus_z(ix, iy));
    }
  }
  return out;
}

double xi1_equation_residual(const ComplexField& phi, const ComplexField& xi1,
                             const SpectralParam& k, bool dealias_products) {
  const Complex kbar_minus_k = k.kbar_minus_k();
  ComplexField lhs = xi1 + (1.0 / kbar_minus_k) *
                               pi_minus_one(multiply(phi, xi1, dealias_products), k);
  ComplexField rhs = (-1.0 / kbar_minus_k) * pi_minus_one(phi, k);
  return sup_norm(lhs - rhs);
}

double lambda2_residual(const HopfSolution& hopf, const BeltramiSolution& belt,
                        const ComplexField& xi1, bool /*dealias_products*/) {
  const SpectralParam& k = hopf.k;
  const ComplexField& phi = hopf.phi;
  const ComplexField& v = belt.w_minus_z;
  const Grid2D& g = phi.grid();
  const Complex pref = k.k_minus_kbar();

  // Lambda2 = s + z P + Q with s = -(x - k y), P = (k-kbar) Xi1,
  // Q = (k-kbar)(1 + Xi1) v; then
  //   R = s phi_x - phi + phi P / (kbar-k)
  //       + z [ dzbar P + (phi P)_x ] + dzbar Q + (phi Q)_x
  ComplexField P = pref * xi1;
  ComplexField Q = pref * (v + xi1 * v);

  ComplexField phi_x = derivative(phi, Deriv::x);
  ComplexField zbracket =
      derivative(P, Deriv::zbar, k) + derivative(phi * P, Deriv::x);
  ComplexField qpart =
      derivative(Q, Deriv::zbar, k) + derivative(phi * Q, Deriv::x);

  const Complex inv_kmk = 1.0 / k.kbar_minus_k();
  double worst = 0.0;
  for (int ix = 0; ix < g.n(); ++ix) {
    const double x = g.coord(ix);
    for (int iy = 0; iy < g.n(); ++iy) {
      const double y = g.coord(iy);
      const Complex s = -(Complex(x, 0.0) - k.k() * y);
      const Complex r = s * phi_x(ix, iy) - phi(ix, iy) +
                        phi(ix, iy) * P(ix, iy) * inv_kmk +
                        k.z(x, y) * zbracket(ix, iy) + qpart(ix, iy);
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst;
}

LinearizedSolution solve_linearized(const HopfSolution& hopf,
                                    const BeltramiSolution& belt,
                                    const SolverConfig& cfg) {
  LinearizedSolution sol{hopf.k, ComplexField(), ComplexField(), ComplexField()};
  sol.xi1 = solve_xi1(hopf.phi, hopf.k, cfg, &sol.terms, &sol.last_term_ratio);
  sol.xi = sol.xi1;
  for (auto& vv : sol.xi.values()) vv += 1.0;
  sol.lambda2 = assemble_lambda2(sol.xi, belt.w_minus_z, hopf.k);
  sol.sup_xi1 = sup_norm(sol.xi1);
  sol.xi_equation_residual =
      xi1_equation_residual(hopf.phi, sol.xi1, hopf.k, cfg.dealias);
  sol.residual = lambda2_residual(hopf, belt, sol.xi1, cfg.dealias);
  if (!all_finite(sol.lambda2))
    fail(ErrorCode::series_divergence, "Lambda2 assembly produced non-finite values");
  return sol;
}

ComplexField asymptotic_lambda2(const ComplexField& u, const SpectralParam& k,
                                int order) {
  if (order < 0 || order > 3)
    fail(ErrorCode::invalid_argument, "asymptotic order must be in 0..3");
  const Grid2D& g = u.grid();
  const Complex kk = k.k();

  auto coord_x = ComplexField::from_function(
      u.grid_ptr(), [](double x, double) { return x; });
  auto coord_y = ComplexField::from_function(
      u.grid_ptr(), [](double, double y) { return y; });

  ComplexField out(u.grid_ptr());
  for (int ix = 0; ix < g.n(); ++ix)
    for (int iy = 0; iy < g.n(); ++iy)
      out(ix, iy) = -(Complex(g.coord(ix), 0.0) - kk * g.coord(iy));

  if (order >= 1) out += (1.0 / kk) * (coord_y * u);
  if (order >= 2) {
    ComplexField uy = derivative(u, Deriv::y);
    ComplexField t = coord_x * u + dx_inv(2.0 * (coord_y * uy) + u);
    out += (-1.0 / (kk * kk)) * t;
  }
  if (order >= 3) {
    ComplexField uy = derivative(u, Deriv::y);
    ComplexField t = coord_x * dx_inv(uy) + dx_inv(coord_x * uy) +
                     1.5 * (coord_y * (u * u)) +
                     3.0 * dx_inv(derivative(coord_y * uy, Deriv::y), 2);
    out += (1.0 / (kk * kk * kk)) * t;
  }
  return out;
}

}  // namespace dkp
