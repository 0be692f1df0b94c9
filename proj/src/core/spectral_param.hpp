#pragma once

#include <cmath>
#include <complex>

#include "errors.hpp"

namespace dkp {

// The complex spectral point k together with the derived quantities every
// multiplier operator needs. Im k != 0 is required: the denominators
// p_y + k p_x of the z-bar calculus vanish only at p = 0 then.
class SpectralParam {
 public:
  explicit SpectralParam(std::complex<double> k) : k_(k) {
    if (k.imag() == 0.0)
      fail(ErrorCode::invalid_argument,
           "spectral parameter requires Im k != 0");
  }

  std::complex<double> k() const { return k_; }
  std::complex<double> kbar() const { return std::conj(k_); }
  double im_k() const { return k_.imag(); }
  double abs_im_k() const { return std::abs(k_.imag()); }
  // kbar - k = -2i Im k
  std::complex<double> kbar_minus_k() const {
    return std::complex<double>(0.0, -2.0 * k_.imag());
  }
  std::complex<double> k_minus_kbar() const {
    return std::complex<double>(0.0, 2.0 * k_.imag());
  }

  // z = (x - k y) / (kbar - k) and zbar = conj(z) on the real slice
  std::complex<double> z(double x, double y) const {
    return (std::complex<double>(x, 0.0) - k_ * y) / kbar_minus_k();
  }
  std::complex<double> zbar(double x, double y) const {
    return std::conj(z(x, y));
  }

  // contraction constant C of the fixed-point bound: 2 alpha ||u|| / (Im k)^2
  double contraction_constant(double u_norm, double alpha) const {
    return 2.0 * alpha * u_norm / (k_.imag() * k_.imag());
  }

  // least Im k for which the contraction bound holds at the given C
  static double semiplane_bound(double u_norm, double alpha, double c) {
    return std::sqrt(2.0 * alpha * u_norm / c);
  }

  // least Im lambda certified to be covered by the k -> Lambda1 map
  static double covering_bound(double u_norm, double alpha, double c) {
    return semiplane_bound(u_norm, alpha, c) * (1.0 + c);
  }

 private:
  std::complex<double> k_;
};

}  // namespace dkp
