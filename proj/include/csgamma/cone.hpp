#pragma once

#include <cstdint>
#include <vector>

#include "csgamma/gamma_report.hpp"
#include "csgamma/mat.hpp"
#include "csgamma/space.hpp"

namespace csgamma {

/// Finitely generated convex cone in a real space.  Generators are stored as
/// given (dim x m columns, each with norm >= 1e-12) plus a unit-normalized
/// copy used by all computations, which makes every result invariant under
/// positive rescaling of the generators.
class ConvexCone {
 public:
  ConvexCone(Space space, Mat generators);

  const Space& space() const { return space_; }
  const Mat& generators() const { return generators_; }
  int generator_count() const { return generators_.cols(); }

  /// Generator scaled to unit norm.
  Vector unit_generator(int j) const;

  /// Transformed unit generator columns L^H g_j, in which the gram inner
  /// product becomes the standard one (used by the projection solver).
  const std::vector<std::vector<double>>& std_columns() const { return std_cols_; }

 private:
  Space space_;
  Mat generators_;
  Mat unit_generators_;
  std::vector<std::vector<double>> std_cols_;
};

/// Finite union of convex cones over one space.  A single ConvexCone
/// converts implicitly to a one-part union.
class UnionCone {
 public:
  UnionCone(ConvexCone part);  // NOLINT: implicit by design
  explicit UnionCone(std::vector<ConvexCone> parts);

  const Space& space() const { return parts_.front().space(); }
  const std::vector<ConvexCone>& parts() const { return parts_; }

  /// The union closed under negation: parts of C followed by parts of -C.
  UnionCone symmetrized() const;

 private:
  std::vector<ConvexCone> parts_;
};

struct ConeOptimOptions {
  int restarts = 16;     // random multistarts per part pair, on top of generator seeds
  int max_iter = 500;    // alternating steps per start
  double tol = 1e-10;    // objective stall tolerance
  uint64_t seed = 0xC5C5;
};

/// Metric projection onto the cone: nonnegative least squares over the
/// generator coefficients.  Post-condition: KKT residual < 1e-10.
Vector project_cone(const Vector& x, const ConvexCone& c);

/// ||x - P(x)|| <= tol * max(1, ||x||) for the cone (or some part of the union).
bool member(const Vector& x, const ConvexCone& c, double tol = 1e-10);
bool member(const Vector& x, const UnionCone& c, double tol = 1e-10);

/// Angular distance kappa(C1, C2) = inf ||v - w|| over unit members, by
/// alternating best-response projection with deterministic multistart.  The
/// result is an upper bound on the true infimum; heuristic unless both
/// unions are single rays.  gamma = 1 - kappa^2/2 (may be negative when the
/// cones point away from each other).
GammaReport kappa_cones(const UnionCone& c1, const UnionCone& c2,
                        const ConeOptimOptions& opts = {});

/// Strengthened Cauchy-Schwarz constant gamma_abs = sup |(v, w)| over unit
/// members, computed as 1 - kappa(C1 u -C1, C2)^2 / 2.  The report also
/// carries the unsymmetrized gamma_re / kappa_re pair, and flags
/// gamma >= 1 - 1e-10 as a nontrivial intersection.
GammaReport gamma_cones(const UnionCone& c1, const UnionCone& c2,
                        const ConeOptimOptions& opts = {});

/// Sampled lower bound on gamma_abs: max |(v, w)| over seeded random unit
/// members of each cone.
double oracle_gamma(const UnionCone& c1, const UnionCone& c2, long samples,
                    uint64_t seed);

}  // namespace csgamma
