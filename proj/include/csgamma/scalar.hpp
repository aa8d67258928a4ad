#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace csgamma {

using Complex = std::complex<double>;

enum class Field { real, complex };

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Principal argument in [0, 2*pi).  arg_principal(0) == 0.
inline double arg_principal(Complex z) {
  if (z.real() == 0.0 && z.imag() == 0.0) return 0.0;
  double a = std::atan2(z.imag(), z.real());
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  if (a >= 2.0 * std::numbers::pi) a = 0.0;  // guard against rounding to 2*pi
  return a;
}

/// Sign of a real number with sign(0) := 1.
inline double sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

}  // namespace csgamma
