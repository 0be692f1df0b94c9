#pragma once

#include <string>
#include <vector>

#include "potential.hpp"
#include "solver_config.hpp"

namespace dkp {

// Run-level configuration: flat `key = value` text file plus overrides.
// Unknown keys are rejected with a diagnostic naming the key. Parsing is
// deterministic; later assignments win.
struct RunConfig {
  int n = 256;
  double l = 12.0;

  // potential selection
  std::string potential = "gaussian";  // gaussian | gaussians | dipole | file | zero
  double amplitude = 0.1;
  double sigma = 1.0;
  double center_x = 0.0;
  double center_y = 0.0;
  double dipole_offset = 1.5;
  std::string potential_file;
  std::string gaussians;  // "A,sigma,x0,y0; A,sigma,x0,y0; ..."
  double boundary_threshold = 1e-10;

  SolverConfig solver;

  std::vector<Complex> k_list{Complex(0.0, 4.0)};
  std::vector<Complex> lambda_list{Complex(0.0, 6.0)};
  int order = 3;

  std::string out_dir = "out";
  unsigned long long seed = 0;
  int eigen_points = 100;

  // characteristics
  double x0 = 0.4;
  double lambda0 = 0.7;
  double y0 = 0.0;
  double big_y = 8.0;
  double ode_step = 0.0;  // 0 -> 1e-3 * (2L)
  int record_stride = 1;

  std::string criteria;  // selftest filter, e.g. "1,3,7"; empty = all

  // Assign one key. Throws Error(config_error) for unknown keys or
  // unparseable values.
  void set(const std::string& key, const std::string& value);

  static RunConfig from_file(const std::string& path);

  PotentialSpec potential_spec() const;
  GridPtr make_grid() const;
};

Complex parse_complex(const std::string& text);
std::vector<Complex> parse_complex_list(const std::string& text);

}  // namespace dkp
