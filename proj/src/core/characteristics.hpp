#pragma once

#include <vector>

#include "field.hpp"
#include "spectral.hpp"

namespace dkp {

// C^1 periodic Hermite bicubic interpolant of a real field. Node data are
// the field and its spectrally differentiated x-, y- and xy-derivatives, so
// the force -d/dx of the interpolant is the exact gradient of the sampled
// surface and the interpolated Hamiltonian is conserved by the exact flow.
class BicubicField {
 public:
  explicit BicubicField(const ComplexField& u);

  double value(double x, double y) const;
  double ddx(double x, double y) const;

  const Grid2D& grid() const { return *grid_; }

 private:
  void gather(double x, double y, double m[4][4], double& tx, double& ty) const;

  GridPtr grid_;
  std::vector<double> f_, fx_, fy_, fxy_;
};

struct TrajectoryPoint {
  double y = 0.0;
  double x = 0.0;
  double lambda = 0.0;
};

// One characteristic curve of dx/dy = lambda, dlambda/dy = -u_x.
struct Trajectory {
  std::vector<TrajectoryPoint> samples;
  bool escaped = false;            // left |x| <= L where u is resolved
  double hamiltonian_drift = 0.0;  // max |H - H(y0)| along the recorded samples
  double error_estimate = 0.0;     // endpoint deviation under step halving

  const TrajectoryPoint& front() const { return samples.front(); }
  const TrajectoryPoint& back() const { return samples.back(); }
};

struct StepConfig {
  double step = 0.0;          // 0 -> default 1e-3 * (2L)
  bool estimate_error = false;
  int record_stride = 1;
};

// Classic fixed-step RK4 along y from y0 to y_end (either direction).
// The trajectory is clipped (escaped = true) if |x| exceeds the box.
Trajectory integrate(const BicubicField& u, double x0, double lambda0,
                     double y0, double y_end, const StepConfig& cfg = {});

Trajectory integrate(const ComplexField& u, double x0, double lambda0,
                     double y0, double y_end, const StepConfig& cfg = {});

// Jost data extracted from the free-particle asymptotics at y = -Y0:
// phi1 = lambda(-Y0), phi2 = x(-Y0) + Y0 lambda(-Y0).
struct JostData {
  double phi1 = 0.0;
  double phi2 = 0.0;
  Trajectory trajectory;
};

// Requires u effectively zero for |y| >= big_y along the trajectory.
// Throws Error(trajectory_escaped) if the curve leaves the box first.
JostData jost(const BicubicField& u, double x0, double lambda0, double y0,
              double big_y, const StepConfig& cfg = {});

JostData jost(const ComplexField& u, double x0, double lambda0, double y0,
              double big_y, const StepConfig& cfg = {});

}  // namespace dkp
