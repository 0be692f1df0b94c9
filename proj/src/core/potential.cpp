#include "potential.hpp"

#include <cmath>

#include "io.hpp"

namespace dkp {

PotentialSample sample_potential(const PotentialSpec& spec, const GridPtr& grid) {
  PotentialSample out;
  if (!spec.file.empty()) {
    out.field = load_field_binary(spec.file, grid).field;
  } else {
    out.field = ComplexField::from_function(grid, [&spec](double x, double y) {
      double v = 0.0;
      for (const auto& g : spec.gaussians) {
        const double dx = x - g.x0;
        const double dy = y - g.y0;
        v += g.amplitude * std::exp(-(dx * dx + dy * dy) / (g.sigma * g.sigma));
      }
      return v;
    });
  }
  out.boundary_max = boundary_ring_max(out.field);
  out.boundary_warning = out.boundary_max > spec.boundary_threshold;
  return out;
}

}  // namespace dkp
