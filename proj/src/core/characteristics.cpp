#include "characteristics.hpp"

#include <algorithm>
#include <cmath>

namespace dkp {

BicubicField::BicubicField(const ComplexField& u) : grid_(u.grid_ptr()) {
  const ComplexField ux = derivative(u, Deriv::x);
  const ComplexField uy = derivative(u, Deriv::y);
  const ComplexField uxy = derivative(ux, Deriv::y);
  const std::size_t n = u.size();
  f_.resize(n);
  fx_.resize(n);
  fy_.resize(n);
  fxy_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    f_[i] = u.values()[i].real();
    fx_[i] = ux.values()[i].real();
    fy_[i] = uy.values()[i].real();
    fxy_[i] = uxy.values()[i].real();
  }
}

namespace {
inline void hermite(double t, double h[4]) {
  const double t2 = t * t;
  const double t3 = t2 * t;
  h[0] = 2 * t3 - 3 * t2 + 1;
  h[1] = t3 - 2 * t2 + t;
  h[2] = -2 * t3 + 3 * t2;
  h[3] = t3 - t2;
}
inline void hermite_d(double t, double h[4]) {
  const double t2 = t * t;
  h[0] = 6 * t2 - 6 * t;
  h[1] = 3 * t2 - 4 * t + 1;
  h[2] = -6 * t2 + 6 * t;
  h[3] = 3 * t2 - 2 * t;
}
}  // namespace

void BicubicField::gather(double x, double y, double m[4][4], double& tx,
                          double& ty) const {
  const Grid2D& g = *grid_;
  const int n = g.n();
  const double L = g.half_width();
  const double dx = g.dx();
  // periodic wrap into [-L, L)
  const double sx = (x + L) / dx;
  const double sy = (y + L) / dx;
  const double fx = std::floor(sx);
  const double fy = std::floor(sy);
  tx = sx - fx;
  ty = sy - fy;
  const int i0 = ((static_cast<int>(fx) % n) + n) % n;
  const int j0 = ((static_cast<int>(fy) % n) + n) % n;
  const int i1 = (i0 + 1) % n;
  const int j1 = (j0 + 1) % n;

  auto at = [&](const std::vector<double>& a, int i, int j) {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  const double d = dx;
  // rows: value/x-derivative data at the two x-nodes, columns likewise in y;
  // node derivatives are rescaled to the unit cell
  const int ii[2] = {i0, i1};
  const int jj[2] = {j0, j1};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      m[2 * a][2 * b] = at(f_, ii[a], jj[b]);
      m[2 * a + 1][2 * b] = at(fx_, ii[a], jj[b]) * d;
      m[2 * a][2 * b + 1] = at(fy_, ii[a], jj[b]) * d;
      m[2 * a + 1][2 * b + 1] = at(fxy_, ii[a], jj[b]) * d * d;
    }
}

double BicubicField::value(double x, double y) const {
  double m[4][4], tx, ty;
  gather(x, y, m, tx, ty);
  double hx[4], hy[4];
  hermite(tx, hx);
  hermite(ty, hy);
  // basis order: (h0, h1) for node 0 value/slope, (h2, h3) for node 1
  const double bx[4] = {hx[0], hx[1], hx[2], hx[3]};
  const double by[4] = {hy[0], hy[1], hy[2], hy[3]};
  const int rx[4] = {0, 1, 2, 3};  // m rows: f0, fx0, f1, fx1
  double acc = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) acc += bx[a] * m[rx[a]][b] * by[b];
  return acc;
}

double BicubicField::ddx(double x, double y) const {
  double m[4][4], tx, ty;
  gather(x, y, m, tx, ty);
  double hx[4], hy[4];
  hermite_d(tx, hx);
  hermite(ty, hy);
  double acc = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) acc += hx[a] * m[a][b] * hy[b];
  return acc / grid_->dx();
}

namespace {

struct State {
  double x;
  double lambda;
};

inline State rk4_step(const BicubicField& u, double y, const State& s, double h) {
  auto f = [&u](double yy, const State& st) {
    return State{st.lambda, -u.ddx(st.x, yy)};
  };
  const State k1 = f(y, s);
  const State k2 = f(y + h / 2, {s.x + h / 2 * k1.x, s.lambda + h / 2 * k1.lambda});
  const State k3 = f(y + h / 2, {s.x + h / 2 * k2.x, s.lambda + h / 2 * k2.lambda});
  const State k4 = f(y + h, {s.x + h * k3.x, s.lambda + h * k3.lambda});
  return State{s.x + h / 6 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x),
               s.lambda + h / 6 * (k1.lambda + 2 * k2.lambda + 2 * k3.lambda +
                                   k4.lambda)};
}

Trajectory run(const BicubicField& u, double x0, double lambda0, double y0,
               double y_end, double h_mag, int record_stride) {
  Trajectory traj;
  const double L = u.grid().half_width();
  const double span = y_end - y0;
  const double h = span >= 0 ? h_mag : -h_mag;
  const long long steps =
      span == 0.0 ? 0 : static_cast<long long>(std::ceil(std::abs(span) / h_mag));

  State s{x0, lambda0};
  double y = y0;
  traj.samples.push_back({y, s.x, s.lambda});
  const double h0 = 0.5 * s.lambda * s.lambda + u.value(s.x, y0);
  double drift = 0.0;

  for (long long i = 0; i < steps; ++i) {
    double hs = h;
    if ((h > 0 && y + h > y_end) || (h < 0 && y + h < y_end)) hs = y_end - y;
    s = rk4_step(u, y, s, hs);
    y = (i + 1 == steps) ? y_end : y + hs;
    if (std::abs(s.x) > L) {
      traj.escaped = true;
      traj.samples.push_back({y, s.x, s.lambda});
      break;
    }
    if (record_stride <= 1 || (i % record_stride) == 0 || i + 1 == steps)
      traj.samples.push_back({y, s.x, s.lambda});
    drift = std::max(drift,
                     std::abs(0.5 * s.lambda * s.lambda + u.value(s.x, y) - h0));
  }
  traj.hamiltonian_drift = drift;
  return traj;
}

}  // namespace

Trajectory integrate(const BicubicField& u, double x0, double lambda0,
                     double y0, double y_end, const StepConfig& cfg) {
  const double default_h = 1e-3 * 2.0 * u.grid().half_width();
  const double h_mag = cfg.step > 0.0 ? cfg.step : default_h;
  Trajectory traj =
      run(u, x0, lambda0, y0, y_end, h_mag, std::max(1, cfg.record_stride));
  if (cfg.estimate_error && !traj.escaped) {
    Trajectory half =
        run(u, x0, lambda0, y0, y_end, h_mag / 2, std::max(1, cfg.record_stride));
    traj.error_estimate = std::abs(traj.back().x - half.back().x) +
                          std::abs(traj.back().lambda - half.back().lambda);
  }
  return traj;
}

Trajectory integrate(const ComplexField& u, double x0, double lambda0,
                     double y0, double y_end, const StepConfig& cfg) {
  return integrate(BicubicField(u), x0, lambda0, y0, y_end, cfg);
}

JostData jost(const BicubicField& u, double x0, double lambda0, double y0,
              double big_y, const StepConfig& cfg) {
  JostData data;
  data.trajectory = integrate(u, x0, lambda0, y0, -big_y, cfg);
  if (data.trajectory.escaped)
    fail(ErrorCode::trajectory_escaped,
         "characteristic left the box before reaching y = -Y0");
  const TrajectoryPoint& end = data.trajectory.back();
  data.phi1 = end.lambda;
  // x = x_- + y lambda_- at y = -Y0  =>  x_- = x(-Y0) + Y0 lambda(-Y0)
  data.phi2 = end.x + big_y * end.lambda;
  return data;
}

JostData jost(const ComplexField& u, double x0, double lambda0, double y0,
              double big_y, const StepConfig& cfg) {
  return jost(BicubicField(u), x0, lambda0, y0, big_y, cfg);
}

}  // namespace dkp
