#include "grid.hpp"

#include <cmath>
#include <mutex>

namespace dkp {

namespace {
// FFTW's planner is not thread-safe; executing plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Grid2D::Grid2D(int n, double half_width)
    : n_(n), half_width_(half_width), dx_(2.0 * half_width / n) {
  if (n < 8 || n % 2 != 0)
    fail(ErrorCode::invalid_argument,
         "grid size must be even and at least 8, got " + std::to_string(n));
  if (!(half_width > 0.0))
    fail(ErrorCode::invalid_argument, "grid half-width must be positive");

  wavenumbers_.resize(n_);
  const double dp = M_PI / half_width_;
  for (int j = 0; j < n_; ++j) wavenumbers_[j] = dp * mode_number(j);

  plan_buffer_.resize(size());
  auto* buf = reinterpret_cast<fftw_complex*>(plan_buffer_.data());
  std::lock_guard<std::mutex> lock(planner_mutex());
  forward_ = fftw_plan_dft_2d(n_, n_, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  backward_ = fftw_plan_dft_2d(n_, n_, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  if (!forward_ || !backward_)
    fail(ErrorCode::invalid_argument, "FFTW plan creation failed");
}

Grid2D::~Grid2D() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (forward_) fftw_destroy_plan(forward_);
  if (backward_) fftw_destroy_plan(backward_);
}

std::shared_ptr<const Grid2D> Grid2D::create(int n, double half_width) {
  return std::shared_ptr<const Grid2D>(new Grid2D(n, half_width));
}

void Grid2D::forward_inplace(Complex* data) const {
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(forward_, p, p);
}

void Grid2D::backward_inplace(Complex* data) const {
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(backward_, p, p);
}

}  // namespace dkp
