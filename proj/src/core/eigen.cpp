#include "eigen.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dkp {

EigenSample invert_k(const KPipeline& pipe, Complex lambda, int ix, int iy) {
  const SolverConfig& cfg = pipe.config();
  const Grid2D& g = pipe.u().grid();
  if (ix < 0 || ix >= g.n() || iy < 0 || iy >= g.n())
    fail(ErrorCode::invalid_argument, "invert_k: point index outside the grid");
  if (lambda.imag() == 0.0)
    fail(ErrorCode::invalid_argument, "invert_k requires Im lambda != 0");

  EigenSample sample;
  sample.ix = ix;
  sample.iy = iy;
  sample.x = g.coord(ix);
  sample.y = g.coord(iy);
  sample.lambda = lambda;

  const double covering =
      SpectralParam::covering_bound(pipe.u_norm(), cfg.alpha_l, cfg.covering_c);
  if (std::abs(lambda.imag()) < covering) {
    sample.covering_certified = false;
    if (cfg.enforce_covering_bound) {
      std::ostringstream msg;
      msg << "Im lambda = " << lambda.imag()
          << " below the certified covering bound " << covering;
      fail(ErrorCode::outside_certified_region, msg.str());
    }
  }
  const double semiplane =
      SpectralParam::semiplane_bound(pipe.u_norm(), cfg.alpha_l, cfg.covering_c);

  Complex k = lambda;
  double prev_step = -1.0;
  for (int it = 1; it <= cfg.max_k_iter; ++it) {
    auto hs = pipe.hopf(k);
    const Complex phi_at = hs->phi(ix, iy);
    Complex next;
    if (cfg.newton_acceleration) {
      auto ls = pipe.linearized(k);
      next = k - (k + phi_at - lambda) / ls->xi(ix, iy);
    } else {
      next = lambda - phi_at;
    }
    const double step = std::abs(next - k);
    if (prev_step > 0.0 && prev_step > 1e-300)
      sample.max_step_ratio = std::max(sample.max_step_ratio, step / prev_step);
    prev_step = step;
    k = next;
    sample.iterations = it;
    if (std::abs(k.imag()) < semiplane) sample.semiplane_certified = false;
    if (step <= cfg.tol_k * std::max(1.0, std::abs(lambda))) break;
    if (it == cfg.max_k_iter)
      fail(ErrorCode::non_convergence,
           "k-inversion did not converge within max_k_iter steps");
  }

  auto hs = pipe.hopf(k);
  sample.k = k;
  sample.psi1 = k;
  sample.roundtrip = std::abs(k + hs->phi(ix, iy) - lambda);

  auto bs = pipe.beltrami(k);
  sample.psi2 = -hs->k.k_minus_kbar() *
                (hs->k.z(sample.x, sample.y) + bs->w_minus_z(ix, iy));
  return sample;
}

ComplexField asymptotic_psi1(const ComplexField& u, Complex lambda, int order) {
  if (order < 0 || order > 3)
    fail(ErrorCode::invalid_argument, "asymptotic order must be in 0..3");
  ComplexField out = ComplexField::zeros(u.grid_ptr());
  for (auto& v : out.values()) v = lambda;
  if (order >= 1) out += (1.0 / lambda) * u;
  if (order >= 2)
    out += (-1.0 / (lambda * lambda)) * dx_inv(derivative(u, Deriv::y));
  if (order >= 3) {
    ComplexField t = dx_inv(derivative(derivative(u, Deriv::y), Deriv::y), 2);
    t -= 0.5 * (u * u);
    out += (1.0 / (lambda * lambda * lambda)) * t;
  }
  return out;
}

ComplexField asymptotic_psi2(const ComplexField& u, Complex lambda, int order) {
  if (order < 0 || order > 3)
    fail(ErrorCode::invalid_argument, "asymptotic order must be in 0..3");
  const Grid2D& g = u.grid();
  auto coord_y = ComplexField::from_function(
      u.grid_ptr(), [](double, double y) { return y; });

  ComplexField out(u.grid_ptr());
  for (int ix = 0; ix < g.n(); ++ix)
    for (int iy = 0; iy < g.n(); ++iy)
      out(ix, iy) = Complex(g.coord(ix), 0.0) - lambda * g.coord(iy);

  const ComplexField yu = coord_y * u;
  if (order >= 1) out += (-1.0 / lambda) * yu;
  if (order >= 2)
    out += (1.0 / (lambda * lambda)) * dx_inv(derivative(yu, Deriv::y));
  if (order >= 3) {
    ComplexField t = 0.5 * (coord_y * (u * u));
    t -= dx_inv(derivative(derivative(yu, Deriv::y), Deriv::y), 2);
    out += (1.0 / (lambda * lambda * lambda)) * t;
  }
  return out;
}

VectorFieldResidual vector_field_residual(
    const KPipeline& pipe, Complex lambda,
    std::span<const std::pair<int, int>> points, double delta_lambda) {
  const Grid2D& g = pipe.u().grid();
  const double dx = g.dx();
  const ComplexField ux = derivative(pipe.u(), Deriv::x);

  VectorFieldResidual rep;
  auto psi_pair = [&](Complex lam, int ix, int iy) {
    EigenSample s = invert_k(pipe, lam, ix, iy);
    return std::pair<Complex, Complex>(s.psi1, s.psi2);
  };

  auto wrap = [&](int i) {
    int n = g.n();
    return ((i % n) + n) % n;
  };

  for (const auto& [ix, iy] : points) {
    // 4th order central differences; x/y use the grid spacing
    std::pair<Complex, Complex> xp1 = psi_pair(lambda, wrap(ix + 1), iy);
    std::pair<Complex, Complex> xm1 = psi_pair(lambda, wrap(ix - 1), iy);
    std::pair<Complex, Complex> xp2 = psi_pair(lambda, wrap(ix + 2), iy);
    std::pair<Complex, Complex> xm2 = psi_pair(lambda, wrap(ix - 2), iy);
    std::pair<Complex, Complex> yp1 = psi_pair(lambda, ix, wrap(iy + 1));
    std::pair<Complex, Complex> ym1 = psi_pair(lambda, ix, wrap(iy - 1));
    std::pair<Complex, Complex> yp2 = psi_pair(lambda, ix, wrap(iy + 2));
    std::pair<Complex, Complex> ym2 = psi_pair(lambda, ix, wrap(iy - 2));
    const double h = delta_lambda;
    std::pair<Complex, Complex> lp1 = psi_pair(lambda + h, ix, iy);
    std::pair<Complex, Complex> lm1 = psi_pair(lambda - h, ix, iy);
    std::pair<Complex, Complex> lp2 = psi_pair(lambda + 2 * h, ix, iy);
    std::pair<Complex, Complex> lm2 = psi_pair(lambda - 2 * h, ix, iy);

    auto d4 = [](Complex p1, Complex m1, Complex p2, Complex m2, double step) {
      return (8.0 * (p1 - m1) - (p2 - m2)) / (12.0 * step);
    };

    const Complex uxv = ux(ix, iy);
    {
      const Complex py = d4(yp1.first, ym1.first, yp2.first, ym2.first, dx);
      const Complex px = d4(xp1.first, xm1.first, xp2.first, xm2.first, dx);
      const Complex pl = d4(lp1.first, lm1.first, lp2.first, lm2.first, h);
      rep.max_psi1 =
          std::max(rep.max_psi1, std::abs(py + lambda * px - uxv * pl));
    }
    {
      const Complex py = d4(yp1.second, ym1.second, yp2.second, ym2.second, dx);
      const Complex px = d4(xp1.second, xm1.second, xp2.second, xm2.second, dx);
      const Complex pl = d4(lp1.second, lm1.second, lp2.second, lm2.second, h);
      rep.max_psi2 =
          std::max(rep.max_psi2, std::abs(py + lambda * px - uxv * pl));
    }
    ++rep.samples;
  }
  return rep;
}

}  // namespace dkp
