#pragma once

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include "errors.hpp"

namespace dkp {

using Complex = std::complex<double>;

// Allocator backed by fftw_malloc so field storage carries the SIMD
// alignment the cached FFTW plans were created with.
template <class T>
struct FftwAllocator {
  using value_type = T;
  FftwAllocator() = default;
  template <class U>
  FftwAllocator(const FftwAllocator<U>&) {}
  T* allocate(std::size_t n) {
    void* p = fftw_malloc(n * sizeof(T));
    if (!p) throw std::bad_alloc();
    return static_cast<T*>(p);
  }
  void deallocate(T* p, std::size_t) { fftw_free(p); }
  template <class U>
  bool operator==(const FftwAllocator<U>&) const {
    return true;
  }
};

using CVector = std::vector<Complex, FftwAllocator<Complex>>;

// Periodic truncation of the plane: the square [-L, L)^2 sampled on an
// N x N lattice, with spectral wavenumbers p_j = (pi/L) * j for
// j in {-N/2, ..., N/2 - 1} on each axis. Values are stored row-major
// over (x, y): index = ix * N + iy.
//
// The grid owns a pair of in-place complex-to-complex FFTW plans; they
// are executed on caller-provided fftw-aligned buffers, so concurrent
// transforms over independent fields are safe (only planning is locked).
class Grid2D {
 public:
  static std::shared_ptr<const Grid2D> create(int n, double half_width);
  ~Grid2D();

  Grid2D(const Grid2D&) = delete;
  Grid2D& operator=(const Grid2D&) = delete;

  int n() const { return n_; }
  double half_width() const { return half_width_; }
  double dx() const { return dx_; }
  double box_area() const { return 4.0 * half_width_ * half_width_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_; }

  // coordinate of sample i on either axis: -L + i*dx
  double coord(int i) const { return -half_width_ + dx_ * i; }

  // wavenumber of mode index j (0-based, FFT layout): (pi/L) * wrap(j)
  double wavenumber(int j) const { return wavenumbers_[j]; }
  // signed integer mode number wrap(j) in [-N/2, N/2)
  int mode_number(int j) const { return j < n_ / 2 ? j : j - n_; }

  // unnormalized in-place transforms, sign conventions e^{-ip.x} / e^{+ip.x}
  void forward_inplace(Complex* data) const;
  void backward_inplace(Complex* data) const;

 private:
  Grid2D(int n, double half_width);

  int n_;
  double half_width_;
  double dx_;
  std::vector<double> wavenumbers_;
  CVector plan_buffer_;
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

using GridPtr = std::shared_ptr<const Grid2D>;

inline bool same_grid(const Grid2D& a, const Grid2D& b) {
  return a.n() == b.n() && a.half_width() == b.half_width();
}

}  // namespace dkp
