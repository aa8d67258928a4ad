#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "csgamma/mat.hpp"
#include "csgamma/scalar.hpp"

namespace csgamma {

/// Finite-dimensional real or complex inner product space.  An optional
/// Hermitian positive definite gram matrix G defines (x, y) = y^H G x;
/// without one the standard dot product is used.  The Cholesky factor of G
/// is computed once at construction and shared by all copies.
class Space {
 public:
  Space(int dim, Field field);
  Space(int dim, Field field, const Mat& gram);

  int dim() const { return impl_->dim; }
  Field field() const { return impl_->field; }
  bool identity_gram() const { return impl_->identity; }
  const Mat& gram() const { return impl_->gram; }
  /// Lower Cholesky factor L with gram = L * L^H.
  const Mat& cholesky_lower() const { return impl_->chol; }

  /// Same underlying space, or structurally identical (dim, field, gram).
  bool compatible_with(const Space& other) const;

 private:
  struct Impl {
    int dim;
    Field field;
    bool identity;
    Mat gram;
    Mat chol;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Immutable coordinate vector bound to a Space.  Real-field spaces reject
/// entries with a nonzero imaginary part.
class Vector {
 public:
  Vector(Space space, std::vector<Complex> coords);
  static Vector real_valued(Space space, const std::vector<double>& coords);
  static Vector zero(Space space);
  static Vector basis(Space space, int index);

  const Space& space() const { return space_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<Complex>& coords() const { return coords_; }
  Complex operator[](int i) const { return coords_[static_cast<size_t>(i)]; }

 private:
  Space space_;
  std::vector<Complex> coords_;
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(Complex c, const Vector& x);
inline Vector operator*(double c, const Vector& x) { return Complex(c) * x; }

/// Inner product, linear in the first argument and conjugate-linear in the
/// second.  Throws std::invalid_argument when the spaces differ.
Complex inner(const Vector& x, const Vector& y);

double norm(const Vector& x);

/// x scaled by the positive real 1/||x||.  Throws std::domain_error below
/// norm 1e-14 ("cannot normalize zero vector").
Vector normalize(const Vector& x);

}  // namespace csgamma
