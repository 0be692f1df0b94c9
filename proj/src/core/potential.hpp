#pragma once

#include <string>
#include <vector>

#include "field.hpp"

namespace dkp {

// Description of the potential u(x, y): a sum of gaussian bumps
// A exp(-((x-x0)^2 + (y-y0)^2) / sigma^2), or a field loaded from file.
struct PotentialSpec {
  struct Gaussian {
    double amplitude = 0.0;
    double sigma = 1.0;
    double x0 = 0.0;
    double y0 = 0.0;
  };

  std::vector<Gaussian> gaussians;
  std::string file;  // when non-empty, load this binary field instead

  // max tolerated |u| on the box edge before a wrap warning is issued
  double boundary_threshold = 1e-10;

  static PotentialSpec gaussian(double amplitude, double sigma, double x0 = 0.0,
                                double y0 = 0.0) {
    PotentialSpec s;
    s.gaussians.push_back({amplitude, sigma, x0, y0});
    return s;
  }

  // antisymmetric pair: A g(x - a, y) - A g(x + a, y); zero mass and zero
  // x-mean on every line y = const
  static PotentialSpec dipole(double amplitude, double sigma, double offset) {
    PotentialSpec s;
    s.gaussians.push_back({amplitude, sigma, offset, 0.0});
    s.gaussians.push_back({-amplitude, sigma, -offset, 0.0});
    return s;
  }
};

struct PotentialSample {
  ComplexField field;
  double boundary_max = 0.0;   // max |u| over the outermost cell ring
  bool boundary_warning = false;
};

// Sample the potential on the grid. The result is real valued (machine-zero
// imaginary part). boundary_warning flags periodic-wrap contamination.
PotentialSample sample_potential(const PotentialSpec& spec, const GridPtr& grid);

}  // namespace dkp
