#pragma once

#include "csgamma/gamma_report.hpp"
#include "csgamma/mat.hpp"
#include "csgamma/space.hpp"

namespace csgamma {

/// Linear subspace held as a gram-orthonormal basis (dim x k columns).
/// k = 0 encodes the zero subspace.
class Subspace {
 public:
  /// Wraps an already orthonormal basis; off-orthonormality beyond 1e-10
  /// is rejected.
  static Subspace from_orthonormal(const Space& space, const Mat& basis);

  const Space& space() const { return space_; }
  const Mat& basis() const { return basis_; }
  int k() const { return basis_.cols(); }

  /// Basis column as a Vector.
  Vector basis_vector(int j) const;

 private:
  Subspace(Space space, Mat basis) : space_(std::move(space)), basis_(std::move(basis)) {}
  friend Subspace orthonormalize(const Space& space, const Mat& generators);

  Space space_;
  Mat basis_;
};

/// Modified Gram-Schmidt with one reorthogonalization pass in the space's
/// inner product.  Columns whose post-projection norm falls below
/// 1e-10 * (largest input column norm) are dropped, so rank-deficient input
/// yields a smaller k.
Subspace orthonormalize(const Space& space, const Mat& generators);

/// Largest principal cosine between two subspaces: the top singular value of
/// the cross-inner-product matrix, clamped to [0, 1], with unit certificate
/// vectors attaining |(v, w)| = gamma.  Either k = 0 gives gamma = 0 and no
/// certificates.
GammaReport gamma_subspaces(const Subspace& v, const Subspace& w);

/// Angular distance kappa = sqrt(2 - 2 gamma).  Throws std::domain_error for
/// a zero subspace (the infimum runs over an empty set).
double kappa_subspaces(const Subspace& v, const Subspace& w);

}  // namespace csgamma
