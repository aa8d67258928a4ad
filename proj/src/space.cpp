#include "csgamma/space.hpp"

#include <cmath>

#include "csgamma/linalg.hpp"

namespace csgamma {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kEigRatioFloor = 1e-12;
constexpr double kZeroNormTol = 1e-14;

void validate_gram(const Mat& g, int dim, Field field) {
  if (g.rows() != dim || g.cols() != dim)
    throw std::invalid_argument("space: gram matrix shape does not match dimension");
  if (!g.all_finite())
    throw std::invalid_argument("space: gram matrix has non-finite entries");
  if (field == Field::real && !g.all_real())
    throw std::invalid_argument("space: real space requires a real gram matrix");
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (std::abs(g(i, j) - std::conj(g(j, i))) > kHermitianTol)
        throw std::invalid_argument("space: gram matrix is not Hermitian");
  auto [lo, hi] = linalg::eig_range_hermitian(g);
  if (!(lo > kEigRatioFloor * hi))
    throw std::invalid_argument("space: gram matrix is not positive definite");
}

}  // namespace

Space::Space(int dim, Field field) {
  if (dim <= 0) throw std::invalid_argument("space: dimension must be positive");
  auto impl = std::make_shared<Impl>();
  impl->dim = dim;
  impl->field = field;
  impl->identity = true;
  impl->gram = Mat::identity(dim);
  impl->chol = Mat::identity(dim);
  impl_ = std::move(impl);
}

Space::Space(int dim, Field field, const Mat& gram) {
  if (dim <= 0) throw std::invalid_argument("space: dimension must be positive");
  validate_gram(gram, dim, field);
  auto impl = std::make_shared<Impl>();
  impl->dim = dim;
  impl->field = field;
  impl->identity = gram == Mat::identity(dim);
  impl->gram = gram;
  impl->chol = linalg::cholesky_lower(gram);
  impl_ = std::move(impl);
}

bool Space::compatible_with(const Space& other) const {
  if (impl_ == other.impl_) return true;
  return impl_->dim == other.impl_->dim && impl_->field == other.impl_->field &&
         impl_->gram == other.impl_->gram;
}

Vector::Vector(Space space, std::vector<Complex> coords)
    : space_(std::move(space)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != space_.dim())
    throw std::invalid_argument("vector: coordinate count does not match space dimension");
  for (const Complex& z : coords_) {
    if (!is_finite(z))
      throw std::invalid_argument("vector: non-finite coordinate");
    if (space_.field() == Field::real && z.imag() != 0.0)
      throw std::invalid_argument("vector: complex coordinate in a real space");
  }
}

Vector Vector::real_valued(Space space, const std::vector<double>& coords) {
  std::vector<Complex> c(coords.begin(), coords.end());
  return Vector(std::move(space), std::move(c));
}

Vector Vector::zero(Space space) {
  std::vector<Complex> c(static_cast<size_t>(space.dim()), Complex(0.0));
  return Vector(std::move(space), std::move(c));
}

Vector Vector::basis(Space space, int index) {
  if (index < 0 || index >= space.dim())
    throw std::invalid_argument("vector: basis index out of range");
  std::vector<Complex> c(static_cast<size_t>(space.dim()), Complex(0.0));
  c[static_cast<size_t>(index)] = 1.0;
  return Vector(std::move(space), std::move(c));
}

namespace {

void check_same_space(const Vector& a, const Vector& b, const char* op) {
  if (!a.space().compatible_with(b.space()))
    throw std::invalid_argument(std::string(op) + ": vectors from different spaces");
}

}  // namespace

Vector operator+(const Vector& a, const Vector& b) {
  check_same_space(a, b, "add");
  std::vector<Complex> c(a.coords());
  for (int i = 0; i < b.dim(); ++i) c[static_cast<size_t>(i)] += b[i];
  return Vector(a.space(), std::move(c));
}

Vector operator-(const Vector& a, const Vector& b) {
  check_same_space(a, b, "subtract");
  std::vector<Complex> c(a.coords());
  for (int i = 0; i < b.dim(); ++i) c[static_cast<size_t>(i)] -= b[i];
  return Vector(a.space(), std::move(c));
}

Vector operator*(Complex c, const Vector& x) {
  if (x.space().field() == Field::real && c.imag() != 0.0)
    throw std::invalid_argument("scale: complex scalar in a real space");
  std::vector<Complex> v(x.coords());
  for (Complex& z : v) z *= c;
  return Vector(x.space(), std::move(v));
}

Complex inner(const Vector& x, const Vector& y) {
  check_same_space(x, y, "inner");
  const int n = x.dim();
  if (x.space().identity_gram()) {
    Complex s = 0.0;
    for (int i = 0; i < n; ++i) s += x[i] * std::conj(y[i]);
    return s;
  }
  const Mat& g = x.space().gram();
  Complex s = 0.0;
  for (int i = 0; i < n; ++i) {
    Complex gi = 0.0;
    for (int j = 0; j < n; ++j) gi += g(i, j) * x[j];
    s += std::conj(y[i]) * gi;
  }
  return s;
}

double norm(const Vector& x) {
  double sq = inner(x, x).real();
  return std::sqrt(std::max(0.0, sq));
}

Vector normalize(const Vector& x) {
  double n = norm(x);
  if (n < kZeroNormTol) throw std::domain_error("cannot normalize zero vector");
  return (1.0 / n) * x;
}

}  // namespace csgamma
