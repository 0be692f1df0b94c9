#pragma once

#include <optional>

#include "field.hpp"
#include "spectral_param.hpp"

namespace dkp {

enum class Deriv { x, y, z, zbar };

// Forward/inverse discrete Fourier transform between physical samples and
// coefficients in the e^{i p.x} basis (see Spectrum). Round trip is the
// identity up to rounding.
Spectrum dft_forward(const ComplexField& f);
ComplexField dft_inverse(const Spectrum& s);

// Spectral derivative. The z / zbar variants need the spectral parameter:
//   dz     <-> i (p_y + kbar p_x)
//   dzbar  <-> i (p_y + k p_x)
ComplexField derivative(const ComplexField& f, Deriv which,
                        std::optional<SpectralParam> k = std::nullopt);

// Inverse of dzbar: multiplier 1 / (i (p_y + k p_x)) away from p = 0,
// zero mode annihilated, so the result has zero mean.
ComplexField dzbar_inv(const ComplexField& f, const SpectralParam& k);

// Pi = dz dzbar^{-1}: unit-modulus multiplier (p_y + kbar p_x)/(p_y + k p_x),
// zero mode annihilated. Preserves the L2 norm of mean-zero fields.
ComplexField pi_op(const ComplexField& f, const SpectralParam& k);

// The combination dzbar^{-1}(dz - dzbar) = Pi - 1 acting on decaying
// fields; on the grid the zero mode maps to zero (constants are killed by
// dz - dzbar before the inversion).
ComplexField pi_minus_one(const ComplexField& f, const SpectralParam& k);

// Antiderivative in x repeated `order` times; every mode with p_x = 0 is
// annihilated (the mean-zero convention of the formal series).
ComplexField dx_inv(const ComplexField& f, int order = 1);

// 2/3-rule spectral truncation: modes with |j| > N/3 on either axis are
// zeroed. Used on quadratic products to suppress aliasing.
ComplexField dealias(const ComplexField& f);

// Pointwise product, optionally dealiased with the 2/3 rule.
ComplexField multiply(const ComplexField& a, const ComplexField& b,
                      bool dealias_product);

// Discrete Sobolev H^l norm: sqrt( (2L)^2 sum_p |c_p|^2 (1+|p|^2)^l ).
// l = 0 gives the box L2 norm sqrt(int |f|^2 dx dy).
double sobolev_norm(const ComplexField& f, int l);

inline double l2_norm(const ComplexField& f) { return sobolev_norm(f, 0); }

// max_p |multiplier of Pi| deviation from 1 over nonzero modes (diagnostic)
double pi_multiplier_unit_defect(const Grid2D& grid, const SpectralParam& k);

}  // namespace dkp
