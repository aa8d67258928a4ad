#pragma once

#include "csgamma/space.hpp"

namespace csgamma {

/// One evaluated identity or bound.  defect_uv = ||u - v||^2 and
/// defect_uiv = ||u - i v||^2 for the unit directions u, v of the pair
/// (u rotated by e^{i alpha} for the variational form).
struct IdentityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // |lhs - rhs|
  double defect_uv = 0.0;
  double defect_uiv = 0.0;
};

/// Re(x,y) = ||x|| ||y|| (1 - ||u - v||^2 / 2).  Throws std::domain_error
/// when either vector is zero.
IdentityReport real_cs_identity(const Vector& x, const Vector& y);

/// Im(x,y) = ||x|| ||y|| (1 - ||u - i v||^2 / 2).
IdentityReport imag_cs_identity(const Vector& x, const Vector& y);

/// |(x,y)| = ||x|| ||y|| sqrt((1 - ||u-v||^2/2)^2 + (1 - ||u-iv||^2/2)^2).
IdentityReport modulus_cs_identity(const Vector& x, const Vector& y);

/// lhs = ||x|| ||y|| (1 - ||e^{i alpha} u - v||^2 / 2) against rhs = |(x,y)|.
/// lhs <= rhs for every alpha, with equality at optimal_alpha(x, y).
IdentityReport variational_bound(const Vector& x, const Vector& y, double alpha);

/// The maximizing rotation -Arg(x,y) reduced into [0, 2*pi); 0 when (x,y) = 0.
double optimal_alpha(const Vector& x, const Vector& y);

/// True iff |(x,y)| >= (1 - tol) ||x|| ||y|| or either vector is zero,
/// i.e. the pair is linearly dependent up to tol.
bool cs_equality_case(const Vector& x, const Vector& y, double tol = 1e-8);

}  // namespace csgamma
