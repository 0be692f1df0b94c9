#include "beltrami.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace dkp {

ComplexField compute_q(const ComplexField& phi, const SpectralParam& k,
                       double margin) {
  const Complex k_minus_kbar = k.k_minus_kbar();
  double sup_a = 0.0;
  for (const auto& v : phi.values())
    sup_a = std::max(sup_a, std::abs(v / k_minus_kbar));
  if (sup_a >= 1.0 - margin) {
    std::ostringstream msg;
    msg << "Beltrami coefficient degenerate: sup |phi| / (2 |Im k|) = " << sup_a
        << " >= " << 1.0 - margin;
    fail(ErrorCode::degenerate_coefficient, msg.str());
  }
  ComplexField q = phi;
  for (auto& v : q.values()) {
    const Complex a = v / k_minus_kbar;
    v = a / (1.0 + a);
  }
  return q;
}

BeltramiSolution solve_w(const ComplexField& q, const SpectralParam& k,
                         const SolverConfig& cfg) {
  cfg.validate();
  BeltramiSolution sol{k, q, q, ComplexField::zeros(q.grid_ptr()),
                       ComplexField::zeros(q.grid_ptr())};
  sol.sup_q = sup_norm(q);
  if (sol.sup_q >= 1.0)
    fail(ErrorCode::degenerate_coefficient, "sup |q| >= 1, series cannot converge");

  // f = q + (q Pi) q + (q Pi)^2 q + ...
  ComplexField f = q;
  ComplexField term = q;
  double prev_norm = l2_norm(term);
  const double f0_norm = prev_norm;
  int terms = 1;
  int worsening = 0;
  double ratio = 0.0;
  while (prev_norm > 0.0 && terms < cfg.max_series_terms) {
    term = q * pi_op(term, k);
    if (cfg.dealias) term = dealias(term);
    const double tn = l2_norm(term);
    ratio = prev_norm > 0.0 ? tn / prev_norm : 0.0;
    worsening = (ratio >= 1.0) ? worsening + 1 : 0;
    if (worsening >= 3) {
      std::ostringstream msg;
      msg << "Beltrami Neumann series stopped contracting (term ratio " << ratio
          << ", sup|q| = " << sol.sup_q << ")";
      fail(ErrorCode::series_divergence, msg.str());
    }
    f += term;
    ++terms;
    prev_norm = tn;
    if (tn <= cfg.tol_fixed_point * std::max(l2_norm(f), f0_norm)) break;
  }
  if (terms >= cfg.max_series_terms)
    fail(ErrorCode::series_divergence,
         "Beltrami Neumann series failed to settle within the term cap");

  sol.f = f;
  sol.terms = terms;
  sol.last_term_ratio = ratio;
  sol.w_minus_z = dzbar_inv(f, k);
  sol.pi_f = pi_op(f, k);

  // torus compatibility constant: mean (q dz w) = mean(q + q Pi f)
  sol.mean_defect = std::abs(mean(q + q * sol.pi_f));

  // residual, all spectral: dzbar(w - z) - q (1 + dz(w - z))
  {
    ComplexField r = derivative(sol.w_minus_z, Deriv::zbar, k);
    ComplexField dzw = derivative(sol.w_minus_z, Deriv::z, k);
    for (std::size_t i = 0; i < r.size(); ++i)
      r.values()[i] -= q.values()[i] * (1.0 + dzw.values()[i]);
    sol.residual = sup_norm(r);
  }

  sol.jacobian_min = jacobian_diagnostic(sol);
  if (!(sol.jacobian_min > 0.0))
    fail(ErrorCode::series_divergence,
         "Beltrami Jacobian lost positivity: min = " +
             std::to_string(sol.jacobian_min));
  if (!all_finite(sol.w_minus_z))
    fail(ErrorCode::series_divergence, "Beltrami solve produced non-finite values");
  return sol;
}

double jacobian_diagnostic(const BeltramiSolution& sol) {
  double jmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sol.q.size(); ++i) {
    const Complex dzw = 1.0 + sol.pi_f.values()[i];
    const double qq = std::norm(sol.q.values()[i]);
    jmin = std::min(jmin, std::norm(dzw) * (1.0 - qq));
  }
  return jmin;
}

}  // namespace dkp
