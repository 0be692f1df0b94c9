#include "spectral.hpp"

#include <cmath>

namespace dkp {

namespace {

// Apply a spectral multiplier m(p_x, p_y): FFT, multiply (with the 1/N^2
// normalization folded in), inverse FFT. The phase factors tied to the
// box origin cancel between the two transforms.
template <class Fn>
ComplexField apply_multiplier(const ComplexField& f, Fn&& m) {
  const Grid2D& g = f.grid();
  ComplexField out(f.grid_ptr(), f.values());
  g.forward_inplace(out.data());
  const double scale = 1.0 / static_cast<double>(g.size());
  const int n = g.n();
  Complex* c = out.data();
  for (int jx = 0; jx < n; ++jx) {
    const double px = g.wavenumber(jx);
    for (int jy = 0; jy < n; ++jy) {
      c[static_cast<std::size_t>(jx) * n + jy] *=
          m(px, g.wavenumber(jy)) * scale;
    }
  }
  g.backward_inplace(out.data());
  return out;
}

}  // namespace

Spectrum dft_forward(const ComplexField& f) {
  const Grid2D& g = f.grid();
  Spectrum s(f.grid_ptr(), f.values());
  g.forward_inplace(s.data());
  // 1/N^2 plus the alternating sign that refers coefficients to the
  // physical coordinates x = -L + i dx (e^{i p_j L} = (-1)^j since p_j L = pi j)
  const double scale = 1.0 / static_cast<double>(g.size());
  const int n = g.n();
  Complex* c = s.data();
  for (int jx = 0; jx < n; ++jx)
    for (int jy = 0; jy < n; ++jy) {
      const double sign = ((jx + jy) % 2 == 0) ? 1.0 : -1.0;
      c[static_cast<std::size_t>(jx) * n + jy] *= sign * scale;
    }
  return s;
}

ComplexField dft_inverse(const Spectrum& s) {
  const Grid2D& g = s.grid();
  ComplexField f(s.grid_ptr(), s.values());
  const int n = g.n();
  Complex* c = f.data();
  for (int jx = 0; jx < n; ++jx)
    for (int jy = 0; jy < n; ++jy) {
      const double sign = ((jx + jy) % 2 == 0) ? 1.0 : -1.0;
      c[static_cast<std::size_t>(jx) * n + jy] *= sign;
    }
  g.backward_inplace(f.data());
  return f;
}

ComplexField derivative(const ComplexField& f, Deriv which,
                        std::optional<SpectralParam> k) {
  switch (which) {
    case Deriv::x:
      return apply_multiplier(f, [](double px, double) {
        return Complex(0.0, px);
      });
    case Deriv::y:
      return apply_multiplier(f, [](double, double py) {
        return Complex(0.0, py);
      });
    case Deriv::z: {
      if (!k)
        fail(ErrorCode::invalid_argument, "dz derivative needs a spectral parameter");
      const Complex kbar = k->kbar();
      return apply_multiplier(f, [kbar](double px, double py) {
        return Complex(0.0, 1.0) * (py + kbar * px);
      });
    }
    case Deriv::zbar: {
      if (!k)
        fail(ErrorCode::invalid_argument, "dzbar derivative needs a spectral parameter");
      const Complex kk = k->k();
      return apply_multiplier(f, [kk](double px, double py) {
        return Complex(0.0, 1.0) * (py + kk * px);
      });
    }
  }
  fail(ErrorCode::invalid_argument, "unknown derivative axis");
}

ComplexField dzbar_inv(const ComplexField& f, const SpectralParam& k) {
  const Complex kk = k.k();
  return apply_multiplier(f, [kk](double px, double py) {
    if (px == 0.0 && py == 0.0) return Complex(0.0, 0.0);
    return 1.0 / (Complex(0.0, 1.0) * (py + kk * px));
  });
}

ComplexField pi_op(const ComplexField& f, const SpectralParam& k) {
  const Complex kk = k.k();
  const Complex kbar = k.kbar();
  return apply_multiplier(f, [kk, kbar](double px, double py) {
    if (px == 0.0 && py == 0.0) return Complex(0.0, 0.0);
    return (py + kbar * px) / (py + kk * px);
  });
}

ComplexField pi_minus_one(const ComplexField& f, const SpectralParam& k) {
  const Complex kk = k.k();
  const Complex num = k.kbar_minus_k();
  // (p_y + kbar p_x)/(p_y + k p_x) - 1 = (kbar - k) p_x / (p_y + k p_x)
  return apply_multiplier(f, [kk, num](double px, double py) {
    if (px == 0.0 && py == 0.0) return Complex(0.0, 0.0);
    return num * px / (py + kk * px);
  });
}

ComplexField dx_inv(const ComplexField& f, int order) {
  if (order < 1) fail(ErrorCode::invalid_argument, "dx_inv order must be >= 1");
  return apply_multiplier(f, [order](double px, double) {
    if (px == 0.0) return Complex(0.0, 0.0);
    Complex m(1.0, 0.0);
    for (int i = 0; i < order; ++i) m /= Complex(0.0, px);
    return m;
  });
}

ComplexField dealias(const ComplexField& f) {
  const Grid2D& g = f.grid();
  const int cut = g.n() / 3;
  ComplexField out(f.grid_ptr(), f.values());
  g.forward_inplace(out.data());
  const double scale = 1.0 / static_cast<double>(g.size());
  const int n = g.n();
  Complex* c = out.data();
  for (int jx = 0; jx < n; ++jx) {
    const bool keep_x = std::abs(g.mode_number(jx)) <= cut;
    for (int jy = 0; jy < n; ++jy) {
      const bool keep = keep_x && std::abs(g.mode_number(jy)) <= cut;
      c[static_cast<std::size_t>(jx) * n + jy] *= keep ? scale : 0.0;
    }
  }
  g.backward_inplace(out.data());
  return out;
}

ComplexField multiply(const ComplexField& a, const ComplexField& b,
                      bool dealias_product) {
  ComplexField p = a * b;
  return dealias_product ? dealias(p) : p;
}

double sobolev_norm(const ComplexField& f, int l) {
  if (l < 0) fail(ErrorCode::invalid_argument, "sobolev order must be >= 0");
  const Grid2D& g = f.grid();
  CVector buf = f.values();
  g.forward_inplace(buf.data());
  const int n = g.n();
  const double coeff_scale = 1.0 / static_cast<double>(g.size());
  long double acc = 0.0L;
  for (int jx = 0; jx < n; ++jx) {
    const double px = g.wavenumber(jx);
    for (int jy = 0; jy < n; ++jy) {
      const double py = g.wavenumber(jy);
      const double w = std::pow(1.0 + px * px + py * py, l);
      const Complex c = buf[static_cast<std::size_t>(jx) * n + jy] * coeff_scale;
      acc += w * (c.real() * c.real() + c.imag() * c.imag());
    }
  }
  return std::sqrt(static_cast<double>(acc) * g.box_area());
}

double pi_multiplier_unit_defect(const Grid2D& grid, const SpectralParam& k) {
  const Complex kk = k.k();
  const Complex kbar = k.kbar();
  double worst = 0.0;
  for (int jx = 0; jx < grid.n(); ++jx) {
    const double px = grid.wavenumber(jx);
    for (int jy = 0; jy < grid.n(); ++jy) {
      const double py = grid.wavenumber(jy);
      if (px == 0.0 && py == 0.0) continue;
      const double m = std::abs((py + kbar * px) / (py + kk * px));
      worst = std::max(worst, std::abs(m - 1.0));
    }
  }
  return worst;
}

}  // namespace dkp
