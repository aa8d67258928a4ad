#include "csgamma/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace csgamma {

namespace {

constexpr double kZeroTol = 1e-14;

const ConvexCone& pick_part(const UnionCone& c, Rng& rng) {
  std::vector<const ConvexCone*> nonempty;
  for (const ConvexCone& p : c.parts())
    if (p.generator_count() > 0) nonempty.push_back(&p);
  if (nonempty.empty())
    throw std::domain_error("sample_unit_in_cone: cone without generators");
  size_t idx = static_cast<size_t>(rng.next_double() * static_cast<double>(nonempty.size()));
  if (idx >= nonempty.size()) idx = nonempty.size() - 1;
  return *nonempty[idx];
}

}  // namespace

Vector sample_unit_in_cone(const UnionCone& c, Rng& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    const ConvexCone& part = pick_part(c, rng);
    Vector acc = Vector::zero(c.space());
    for (int j = 0; j < part.generator_count(); ++j)
      acc = acc + rng.next_double() * part.unit_generator(j);
    if (norm(acc) >= kZeroTol) return normalize(acc);
  }
  throw std::runtime_error("sample_unit_in_cone: 100 zero draws in a row");
}

namespace {

// Standard normal draw (Box-Muller), so normalized coefficient vectors are
// rotation invariant within the subspace.
double next_normal(Rng& rng) {
  double u1 = 1.0 - rng.next_double();
  double u2 = rng.next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

Vector sample_unit_in_subspace(const Subspace& s, Rng& rng) {
  if (s.k() == 0)
    throw std::domain_error("sample_unit_in_subspace: zero subspace");
  const bool cplx = s.space().field() == Field::complex;
  for (int attempt = 0; attempt < 100; ++attempt) {
    Vector acc = Vector::zero(s.space());
    for (int j = 0; j < s.k(); ++j) {
      double re = next_normal(rng);
      double im = cplx ? next_normal(rng) : 0.0;
      acc = acc + Complex(re, im) * s.basis_vector(j);
    }
    if (norm(acc) >= kZeroTol) return normalize(acc);
  }
  throw std::runtime_error("sample_unit_in_subspace: 100 zero draws in a row");
}

double brute_force_gamma(const UnionCone& c1, const UnionCone& c2, long samples,
                         Rng& rng) {
  double best = 0.0;
  for (long s = 0; s < samples; ++s) {
    Vector v = sample_unit_in_cone(c1, rng);
    Vector w = sample_unit_in_cone(c2, rng);
    best = std::max(best, std::abs(inner(v, w)));
  }
  return best;
}

double brute_force_gamma_subspaces(const Subspace& s1, const Subspace& s2,
                                   long samples, Rng& rng) {
  if (s1.k() == 0 || s2.k() == 0) return 0.0;
  double best = 0.0;
  for (long s = 0; s < samples; ++s) {
    Vector v = sample_unit_in_subspace(s1, rng);
    Vector pw = Vector::zero(s2.space());
    for (int j = 0; j < s2.k(); ++j) {
      Vector b = s2.basis_vector(j);
      pw = pw + inner(v, b) * b;
    }
    if (norm(pw) < kZeroTol) continue;
    best = std::max(best, std::abs(inner(v, normalize(pw))));
  }
  return best;
}

namespace {

// Directions of a 2-D cone part as angles.  All member rays lie in the
// minimal arc containing the generator directions when that arc spans at
// most pi; otherwise candidates cover the full circle.  Sampled directions
// are kept only if they are actual members, so the result is exact for rays
// and never overshoots the cone.
std::vector<double> part_ray_angles(const ConvexCone& part, int resolution) {
  std::vector<double> gen_angles;
  for (int j = 0; j < part.generator_count(); ++j) {
    Vector g = part.unit_generator(j);
    gen_angles.push_back(std::atan2(g[1].real(), g[0].real()));
  }
  if (gen_angles.empty()) return {};

  // minimal arc containing all generator directions: complement of the
  // largest circular gap between consecutive directions
  std::vector<double> sorted = gen_angles;
  std::sort(sorted.begin(), sorted.end());
  const double two_pi = 2.0 * std::numbers::pi;
  double max_gap = two_pi - (sorted.back() - sorted.front());
  double arc_start = sorted.front();
  for (size_t i = 1; i < sorted.size(); ++i) {
    double gap = sorted[i] - sorted[i - 1];
    if (gap > max_gap) {
      max_gap = gap;
      arc_start = sorted[i];  // the arc begins where the gap ends
    }
  }
  double arc_len = two_pi - max_gap;

  std::vector<double> candidates;
  if (arc_len <= std::numbers::pi + 1e-12) {
    if (arc_len < 1e-15) {
      candidates.push_back(arc_start);
    } else {
      for (int t = 0; t < resolution; ++t)
        candidates.push_back(arc_start + arc_len * t / (resolution - 1));
    }
  } else {
    for (int t = 0; t < resolution; ++t) candidates.push_back(two_pi * t / resolution);
  }

  std::vector<double> members;
  for (double a : candidates) {
    Vector u = Vector::real_valued(part.space(), {std::cos(a), std::sin(a)});
    if (member(u, part, 1e-9)) members.push_back(a);
  }
  return members;
}

// Angle of the ray after mapping to standard coordinates (z = L^H u), where
// |(u1, u2)| = |cos(angle difference)|.
double std_angle(const ConvexCone& anypart, double a) {
  const Mat& l = anypart.space().cholesky_lower();
  double x = std::cos(a), y = std::sin(a);
  double zx = l(0, 0).real() * x + l(1, 0).real() * y;
  double zy = l(0, 1).real() * x + l(1, 1).real() * y;
  return std::atan2(zy, zx);
}

}  // namespace

double grid_gamma_2d(const UnionCone& c1, const UnionCone& c2, int resolution) {
  if (c1.space().dim() != 2)
    throw std::invalid_argument("grid_gamma_2d: requires a 2-dimensional space");
  if (!c1.space().compatible_with(c2.space()))
    throw std::invalid_argument("grid_gamma_2d: cones from different spaces");
  if (resolution < 8)
    throw std::invalid_argument("grid_gamma_2d: resolution must be at least 8");

  const double pi = std::numbers::pi;
  auto fold = [&](double a) {  // direction modulo pi, |cos| has period pi
    double m = std::fmod(a, pi);
    if (m < 0.0) m += pi;
    return m;
  };

  std::vector<double> a1, a2;
  for (const ConvexCone& p : c1.parts())
    for (double a : part_ray_angles(p, resolution)) a1.push_back(fold(std_angle(p, a)));
  for (const ConvexCone& p : c2.parts())
    for (double a : part_ray_angles(p, resolution)) a2.push_back(fold(std_angle(p, a)));
  if (a1.empty() || a2.empty())
    throw std::domain_error("grid_gamma_2d: cone without generators");

  std::sort(a2.begin(), a2.end());
  auto circ = [&](double x, double y) {  // distance of directions modulo pi
    double d = std::abs(x - y);
    return std::min(d, pi - d);
  };
  double dmin = pi / 2.0;
  for (double a : a1) {
    auto it = std::lower_bound(a2.begin(), a2.end(), a);
    if (it != a2.end()) dmin = std::min(dmin, circ(a, *it));
    if (it != a2.begin()) dmin = std::min(dmin, circ(a, *(it - 1)));
    dmin = std::min(dmin, circ(a, a2.front()));  // neighbors across the seam
    dmin = std::min(dmin, circ(a, a2.back()));
  }
  return std::cos(dmin);
}

}  // namespace csgamma
