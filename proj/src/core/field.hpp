#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

#include "grid.hpp"

namespace dkp {

// Complex-valued function sampled on a Grid2D, row-major over (x, y).
// Fields are value types; operations on them are pure and return new
// fields, so independent fields may be used from concurrent threads.
class ComplexField {
 public:
  ComplexField() = default;
  explicit ComplexField(GridPtr grid)
      : grid_(std::move(grid)), values_(grid_->size(), Complex(0.0, 0.0)) {}
  ComplexField(GridPtr grid, CVector values)
      : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_->size())
      fail(ErrorCode::invalid_argument, "field size does not match grid");
  }

  static ComplexField zeros(GridPtr grid) { return ComplexField(std::move(grid)); }

  template <class Fn>
  static ComplexField from_function(GridPtr grid, Fn&& fn) {
    ComplexField f(std::move(grid));
    const Grid2D& g = f.grid();
    for (int ix = 0; ix < g.n(); ++ix) {
      const double x = g.coord(ix);
      for (int iy = 0; iy < g.n(); ++iy)
        f(ix, iy) = Complex(fn(x, g.coord(iy)));
    }
    return f;
  }

  const Grid2D& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  std::size_t size() const { return values_.size(); }

  Complex& operator()(int ix, int iy) { return values_[idx(ix, iy)]; }
  const Complex& operator()(int ix, int iy) const { return values_[idx(ix, iy)]; }

  Complex* data() { return values_.data(); }
  const Complex* data() const { return values_.data(); }
  CVector& values() { return values_; }
  const CVector& values() const { return values_; }

  bool empty() const { return values_.empty(); }

 private:
  std::size_t idx(int ix, int iy) const {
    return static_cast<std::size_t>(ix) * grid_->n() + iy;
  }

  GridPtr grid_;
  CVector values_;
};

// Spectral coefficients c_p of a field in the basis e^{i p.x}, i.e.
// f(x, y) = sum_p c_p exp(i(p_x x + p_y y)) with x, y the physical box
// coordinates. Stored in FFT index layout.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(GridPtr grid)
      : grid_(std::move(grid)), coeffs_(grid_->size(), Complex(0.0, 0.0)) {}
  Spectrum(GridPtr grid, CVector coeffs)
      : grid_(std::move(grid)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != grid_->size())
      fail(ErrorCode::invalid_argument, "spectrum size does not match grid");
  }

  const Grid2D& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }

  // signed mode numbers, wrapped into the FFT layout
  Complex coeff(int jx, int jy) const {
    return coeffs_[idx(wrap(jx), wrap(jy))];
  }
  Complex& at(int jx, int jy) { return coeffs_[idx(wrap(jx), wrap(jy))]; }

  Complex* data() { return coeffs_.data(); }
  const Complex* data() const { return coeffs_.data(); }
  CVector& values() { return coeffs_; }
  const CVector& values() const { return coeffs_; }

 private:
  int wrap(int j) const {
    const int n = grid_->n();
    int w = j % n;
    if (w < 0) w += n;
    return w;
  }
  std::size_t idx(int jx, int jy) const {
    return static_cast<std::size_t>(jx) * grid_->n() + jy;
  }

  GridPtr grid_;
  CVector coeffs_;
};

inline void require_same_grid(const ComplexField& a, const ComplexField& b) {
  if (!same_grid(a.grid(), b.grid()))
    fail(ErrorCode::invalid_argument, "fields live on different grids");
}

// pointwise arithmetic

inline ComplexField operator+(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a, b);
  ComplexField r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.values()[i] += b.values()[i];
  return r;
}

inline ComplexField operator-(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a, b);
  ComplexField r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.values()[i] -= b.values()[i];
  return r;
}

inline ComplexField operator*(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a, b);
  ComplexField r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.values()[i] *= b.values()[i];
  return r;
}

inline ComplexField operator*(Complex s, const ComplexField& a) {
  ComplexField r = a;
  for (auto& v : r.values()) v *= s;
  return r;
}

inline ComplexField operator*(const ComplexField& a, Complex s) { return s * a; }
inline ComplexField operator*(double s, const ComplexField& a) {
  return Complex(s, 0.0) * a;
}

inline ComplexField& operator+=(ComplexField& a, const ComplexField& b) {
  require_same_grid(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a.values()[i] += b.values()[i];
  return a;
}

inline ComplexField& operator-=(ComplexField& a, const ComplexField& b) {
  require_same_grid(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a.values()[i] -= b.values()[i];
  return a;
}

inline double sup_norm(const ComplexField& f) {
  double m = 0.0;
  for (const auto& v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

inline Complex mean(const ComplexField& f) {
  Complex s(0.0, 0.0);
  for (const auto& v : f.values()) s += v;
  return s / static_cast<double>(f.size());
}

inline bool all_finite(const ComplexField& f) {
  for (const auto& v : f.values())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

// max |f| over the outermost `band` cells of the box edge
inline double boundary_ring_max(const ComplexField& f, int band = 1) {
  const int n = f.grid().n();
  double m = 0.0;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy) {
      const bool edge = ix < band || ix >= n - band || iy < band || iy >= n - band;
      if (edge) m = std::max(m, std::abs(f(ix, iy)));
    }
  return m;
}

}  // namespace dkp
