#include "csgamma/subspace.hpp"

#include <cmath>

#include "csgamma/linalg.hpp"

namespace csgamma {

namespace {

constexpr double kDropTol = 1e-10;
constexpr double kOrthoTol = 1e-10;
constexpr double kIntersectTol = 1e-10;

Vector column_vector(const Space& s, const Mat& m, int j) {
  return Vector(s, m.col(j));
}

}  // namespace

Subspace Subspace::from_orthonormal(const Space& space, const Mat& basis) {
  if (basis.rows() != space.dim() && basis.cols() != 0)
    throw std::invalid_argument("subspace: basis rows do not match space dimension");
  if (!basis.all_finite())
    throw std::invalid_argument("subspace: non-finite basis entry");
  const int k = basis.cols();
  for (int a = 0; a < k; ++a) {
    Vector va = column_vector(space, basis, a);
    for (int b = a; b < k; ++b) {
      Complex ip = inner(va, column_vector(space, basis, b));
      Complex expect = a == b ? Complex(1.0) : Complex(0.0);
      if (std::abs(ip - expect) > kOrthoTol)
        throw std::invalid_argument("subspace: basis is not orthonormal");
    }
  }
  return Subspace(space, basis);
}

Vector Subspace::basis_vector(int j) const {
  if (j < 0 || j >= k()) throw std::invalid_argument("subspace: basis index out of range");
  return column_vector(space_, basis_, j);
}

Subspace orthonormalize(const Space& space, const Mat& generators) {
  if (generators.cols() > 0 && generators.rows() != space.dim())
    throw std::invalid_argument("orthonormalize: generator rows do not match space dimension");
  if (!generators.all_finite())
    throw std::invalid_argument("orthonormalize: non-finite generator entry");

  const int m = generators.cols();
  double maxnorm = 0.0;
  for (int j = 0; j < m; ++j)
    maxnorm = std::max(maxnorm, norm(column_vector(space, generators, j)));

  std::vector<Vector> basis;
  if (maxnorm > 0.0) {
    for (int j = 0; j < m; ++j) {
      Vector v = column_vector(space, generators, j);
      for (int pass = 0; pass < 2; ++pass)
        for (const Vector& b : basis) v = v - inner(v, b) * b;
      if (norm(v) >= kDropTol * maxnorm) basis.push_back(normalize(v));
    }
  }

  Mat b(space.dim(), static_cast<int>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j) b.set_col(static_cast<int>(j), basis[j].coords());
  return Subspace(space, b);
}

GammaReport gamma_subspaces(const Subspace& v, const Subspace& w) {
  if (!v.space().compatible_with(w.space()))
    throw std::invalid_argument("gamma_subspaces: subspaces from different spaces");

  GammaReport rep;
  rep.method = GammaMethod::exact_subspace;
  rep.m_exponent = 2.0;

  const int kv = v.k(), kw = w.k();
  if (kv == 0 || kw == 0) {
    rep.gamma = 0.0;
    rep.kappa = std::sqrt(2.0);
    rep.gamma_re = rep.gamma;
    rep.kappa_re = rep.kappa;
    return rep;
  }

  // cross inner-product matrix M[a][b] = (v_a, w_b)
  Mat m(kv, kw);
  std::vector<Vector> vcols, wcols;
  vcols.reserve(static_cast<size_t>(kv));
  wcols.reserve(static_cast<size_t>(kw));
  for (int a = 0; a < kv; ++a) vcols.push_back(v.basis_vector(a));
  for (int b = 0; b < kw; ++b) wcols.push_back(w.basis_vector(b));
  for (int a = 0; a < kv; ++a)
    for (int b = 0; b < kw; ++b) m(a, b) = inner(vcols[a], wcols[b]);

  // top singular pair of M through the smaller Hermitian product
  const bool use_left = kv <= kw;
  Mat prod = use_left ? matmul(m, m.conj_transpose()) : matmul(m.conj_transpose(), m);
  auto [lam, evec] = linalg::top_eig_hermitian(prod);
  double sigma = std::sqrt(std::max(0.0, lam));
  double gamma = std::min(1.0, std::max(0.0, sigma));

  rep.gamma = gamma;
  rep.kappa = std::sqrt(std::max(0.0, 2.0 - 2.0 * gamma));
  rep.gamma_re = rep.gamma;
  rep.kappa_re = rep.kappa;
  rep.intersects_nontrivially = gamma >= 1.0 - kIntersectTol;

  // certificates: left singular vector combines v's basis, right the w's
  std::vector<Complex> left(static_cast<size_t>(kv)), right(static_cast<size_t>(kw));
  if (use_left) {
    left = evec;
    // right = M^H left / sigma when sigma > 0
    for (int b = 0; b < kw; ++b) {
      Complex s = 0.0;
      for (int a = 0; a < kv; ++a) s += std::conj(m(a, b)) * left[static_cast<size_t>(a)];
      right[static_cast<size_t>(b)] = s;
    }
  } else {
    right = evec;
    for (int a = 0; a < kv; ++a) {
      Complex s = 0.0;
      for (int b = 0; b < kw; ++b) s += m(a, b) * right[static_cast<size_t>(b)];
      left[static_cast<size_t>(a)] = s;
    }
  }

  auto combine = [](const std::vector<Vector>& basis, const std::vector<Complex>& coef) {
    Vector acc = Vector::zero(basis[0].space());
    for (size_t j = 0; j < basis.size(); ++j) acc = acc + std::conj(coef[j]) * basis[j];
    return acc;
  };
  Vector cv = combine(vcols, left);
  Vector cw = combine(wcols, right);
  if (norm(cv) >= 1e-14) cv = normalize(cv);
  if (norm(cw) >= 1e-14)
    cw = normalize(cw);
  else
    cw = wcols[0];  // gamma = 0: any unit pair attains it
  rep.certificate_v = cv;
  rep.certificate_w = cw;
  return rep;
}

double kappa_subspaces(const Subspace& v, const Subspace& w) {
  if (v.k() == 0 || w.k() == 0)
    throw std::domain_error("kappa_subspaces: zero subspace has no unit vectors");
  return gamma_subspaces(v, w).kappa;
}

}  // namespace csgamma
