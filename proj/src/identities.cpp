#include "csgamma/identities.hpp"

#include <cmath>

namespace csgamma {

namespace {

// Squared gram distance of raw coordinate arrays.  Works in the
// complexification of a real space, so rotated and i-multiplied directions
// stay representable even when the Vector type would reject them.
double gram_dist_sq(const Space& s, const std::vector<Complex>& a,
                    const std::vector<Complex>& b) {
  const int n = s.dim();
  std::vector<Complex> d(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) d[i] = a[i] - b[i];
  if (s.identity_gram()) {
    double acc = 0.0;
    for (const Complex& z : d) acc += std::norm(z);
    return acc;
  }
  const Mat& g = s.gram();
  Complex acc = 0.0;
  for (int i = 0; i < n; ++i) {
    Complex gi = 0.0;
    for (int j = 0; j < n; ++j) gi += g(i, j) * d[j];
    acc += std::conj(d[i]) * gi;
  }
  return std::max(0.0, acc.real());
}

struct UnitPair {
  std::vector<Complex> u, v;
  double nx, ny;
  Complex xy;
  const Space* space;
};

UnitPair unit_directions(const Vector& x, const Vector& y) {
  double nx = norm(x), ny = norm(y);
  if (nx < 1e-14 || ny < 1e-14)
    throw std::domain_error("identity: zero vector has no unit direction");
  UnitPair p{x.coords(), y.coords(), nx, ny, inner(x, y), &x.space()};
  for (Complex& z : p.u) z /= nx;
  for (Complex& z : p.v) z /= ny;
  return p;
}

std::vector<Complex> scaled(const std::vector<Complex>& a, Complex c) {
  std::vector<Complex> out(a);
  for (Complex& z : out) z *= c;
  return out;
}

IdentityReport defects_of(const UnitPair& p, Complex u_phase) {
  IdentityReport r;
  std::vector<Complex> ru = u_phase == Complex(1.0) ? p.u : scaled(p.u, u_phase);
  r.defect_uv = gram_dist_sq(*p.space, ru, p.v);
  r.defect_uiv = gram_dist_sq(*p.space, ru, scaled(p.v, Complex(0.0, 1.0)));
  return r;
}

}  // namespace

IdentityReport real_cs_identity(const Vector& x, const Vector& y) {
  UnitPair p = unit_directions(x, y);
  IdentityReport r = defects_of(p, 1.0);
  r.lhs = p.xy.real();
  r.rhs = p.nx * p.ny * (1.0 - 0.5 * r.defect_uv);
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

IdentityReport imag_cs_identity(const Vector& x, const Vector& y) {
  UnitPair p = unit_directions(x, y);
  IdentityReport r = defects_of(p, 1.0);
  r.lhs = p.xy.imag();
  r.rhs = p.nx * p.ny * (1.0 - 0.5 * r.defect_uiv);
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

IdentityReport modulus_cs_identity(const Vector& x, const Vector& y) {
  UnitPair p = unit_directions(x, y);
  IdentityReport r = defects_of(p, 1.0);
  double re_term = 1.0 - 0.5 * r.defect_uv;
  double im_term = 1.0 - 0.5 * r.defect_uiv;
  r.lhs = std::abs(p.xy);
  r.rhs = p.nx * p.ny * std::sqrt(re_term * re_term + im_term * im_term);
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

IdentityReport variational_bound(const Vector& x, const Vector& y, double alpha) {
  UnitPair p = unit_directions(x, y);
  IdentityReport r = defects_of(p, std::polar(1.0, alpha));
  r.lhs = p.nx * p.ny * (1.0 - 0.5 * r.defect_uv);
  r.rhs = std::abs(p.xy);
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

double optimal_alpha(const Vector& x, const Vector& y) {
  Complex xy = inner(x, y);
  if (xy == Complex(0.0)) return 0.0;
  double a = -arg_principal(xy);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  if (a >= 2.0 * std::numbers::pi || a == 0.0) a = 0.0;  // also drops -0.0
  return a;
}

bool cs_equality_case(const Vector& x, const Vector& y, double tol) {
  double nx = norm(x), ny = norm(y);
  if (nx < 1e-14 || ny < 1e-14) return true;
  return std::abs(inner(x, y)) >= (1.0 - tol) * nx * ny;
}

}  // namespace csgamma
