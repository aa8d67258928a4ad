#include "csgamma/cone.hpp"

#include <cmath>
#include <stdexcept>

#include "csgamma/linalg.hpp"
#include "csgamma/oracle.hpp"
#include "csgamma/rng.hpp"

namespace csgamma {

namespace {

constexpr double kGeneratorNormFloor = 1e-12;
constexpr double kZeroTol = 1e-14;
constexpr double kKktContract = 1e-10;
constexpr double kIntersectTol = 1e-10;
constexpr double kCertMemberTol = 1e-8;

double clamp(double x, double lo, double hi) { return std::min(hi, std::max(lo, x)); }

}  // namespace

ConvexCone::ConvexCone(Space space, Mat generators)
    : space_(std::move(space)), generators_(std::move(generators)) {
  if (space_.field() != Field::real)
    throw std::invalid_argument("cone: cones require a real scalar field");
  if (generators_.cols() > 0 && generators_.rows() != space_.dim())
    throw std::invalid_argument("cone: generator rows do not match space dimension");
  if (!generators_.all_finite())
    throw std::invalid_argument("cone: non-finite generator entry");
  if (!generators_.all_real())
    throw std::invalid_argument("cone: complex generator entry in a real space");

  const int m = generators_.cols();
  unit_generators_ = Mat(space_.dim(), m);
  std_cols_.resize(static_cast<size_t>(m));
  const Mat& l = space_.cholesky_lower();
  for (int j = 0; j < m; ++j) {
    Vector g(space_, generators_.col(j));
    double n = norm(g);
    if (n < kGeneratorNormFloor)
      throw std::invalid_argument("cone: generator with near-zero norm");
    Vector u = (1.0 / n) * g;
    unit_generators_.set_col(j, u.coords());
    // z = L^H u maps the gram inner product to the standard one
    std::vector<double> z(static_cast<size_t>(space_.dim()));
    for (int i = 0; i < space_.dim(); ++i) {
      double acc = 0.0;
      for (int r = 0; r < space_.dim(); ++r) acc += l(r, i).real() * u[r].real();
      z[static_cast<size_t>(i)] = acc;
    }
    std_cols_[static_cast<size_t>(j)] = std::move(z);
  }
}

Vector ConvexCone::unit_generator(int j) const {
  if (j < 0 || j >= generator_count())
    throw std::invalid_argument("cone: generator index out of range");
  return Vector(space_, unit_generators_.col(j));
}

UnionCone::UnionCone(ConvexCone part) { parts_.push_back(std::move(part)); }

UnionCone::UnionCone(std::vector<ConvexCone> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("union cone: needs at least one part");
  for (const ConvexCone& p : parts_)
    if (!p.space().compatible_with(parts_.front().space()))
      throw std::invalid_argument("union cone: parts from different spaces");
}

UnionCone UnionCone::symmetrized() const {
  std::vector<ConvexCone> out = parts_;
  for (const ConvexCone& p : parts_) {
    Mat neg = p.generators();
    for (int i = 0; i < neg.rows(); ++i)
      for (int j = 0; j < neg.cols(); ++j) neg(i, j) = -neg(i, j);
    out.emplace_back(p.space(), neg);
  }
  return UnionCone(out);
}

Vector project_cone(const Vector& x, const ConvexCone& c) {
  if (!x.space().compatible_with(c.space()))
    throw std::invalid_argument("project_cone: vector and cone from different spaces");
  const int dim = c.space().dim();
  if (c.generator_count() == 0) return Vector::zero(c.space());

  const Mat& l = c.space().cholesky_lower();
  std::vector<double> z(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    double acc = 0.0;
    for (int r = 0; r < dim; ++r) acc += l(r, i).real() * x[r].real();
    z[static_cast<size_t>(i)] = acc;
  }

  linalg::NnlsResult sol = linalg::nnls(c.std_columns(), z);
  if (!sol.converged || sol.kkt_residual >= kKktContract)
    throw std::runtime_error("project_cone: projection failed the optimality check");

  Vector p = Vector::zero(c.space());
  for (int j = 0; j < c.generator_count(); ++j)
    if (sol.coeff[static_cast<size_t>(j)] != 0.0)
      p = p + sol.coeff[static_cast<size_t>(j)] * c.unit_generator(j);
  return p;
}

bool member(const Vector& x, const ConvexCone& c, double tol) {
  Vector p = project_cone(x, c);
  return norm(x - p) <= tol * std::max(1.0, norm(x));
}

bool member(const Vector& x, const UnionCone& c, double tol) {
  for (const ConvexCone& part : c.parts())
    if (member(x, part, tol)) return true;
  return false;
}

namespace {

struct AltResult {
  double t = -2.0;  // inner(v, w)
  std::optional<Vector> v, w;
  bool converged = false;
};

// Alternating best response: the unit member of a convex cone closest to a
// fixed unit vector is the normalized cone projection (when nonzero), so each
// half-step maximizes inner(v, w) exactly and the objective is nondecreasing.
AltResult alternate(const ConvexCone& p1, const ConvexCone& p2, Vector v, Vector w,
                    const ConeOptimOptions& opts) {
  AltResult res;
  double t = inner(v, w).real();
  for (int it = 0; it < opts.max_iter; ++it) {
    Vector pw = project_cone(v, p2);
    if (norm(pw) < kZeroTol) {
      res.converged = true;  // no improving response in this part
      break;
    }
    w = normalize(pw);
    Vector pv = project_cone(w, p1);
    if (norm(pv) < kZeroTol) {
      res.converged = true;
      break;
    }
    v = normalize(pv);
    double tn = inner(v, w).real();
    if (std::abs(tn - t) < opts.tol) {
      t = tn;
      res.converged = true;
      break;
    }
    t = tn;
  }
  res.t = t;
  res.v = v;
  res.w = w;
  return res;
}

std::optional<Vector> random_cone_unit(const ConvexCone& part, Rng& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Vector acc = Vector::zero(part.space());
    for (int j = 0; j < part.generator_count(); ++j)
      acc = acc + rng.next_double() * part.unit_generator(j);
    if (norm(acc) >= kZeroTol) return normalize(acc);
  }
  return std::nullopt;
}

bool single_ray(const UnionCone& c) {
  return c.parts().size() == 1 && c.parts().front().generator_count() == 1;
}

}  // namespace

GammaReport kappa_cones(const UnionCone& c1, const UnionCone& c2,
                        const ConeOptimOptions& opts) {
  if (!c1.space().compatible_with(c2.space()))
    throw std::invalid_argument("kappa_cones: cones from different spaces");
  auto has_generators = [](const UnionCone& c) {
    for (const ConvexCone& p : c.parts())
      if (p.generator_count() > 0) return true;
    return false;
  };
  if (!has_generators(c1) || !has_generators(c2))
    throw std::domain_error("kappa_cones: cone without generators has no unit vectors");

  AltResult best;
  int used = 0;
  const auto& parts1 = c1.parts();
  const auto& parts2 = c2.parts();
  for (size_t i = 0; i < parts1.size(); ++i) {
    if (parts1[i].generator_count() == 0) continue;
    for (size_t j = 0; j < parts2.size(); ++j) {
      if (parts2[j].generator_count() == 0) continue;
      const ConvexCone& p1 = parts1[i];
      const ConvexCone& p2 = parts2[j];

      std::vector<std::pair<Vector, Vector>> starts;
      for (int a = 0; a < p1.generator_count(); ++a)
        for (int b = 0; b < p2.generator_count(); ++b)
          starts.emplace_back(p1.unit_generator(a), p2.unit_generator(b));

      Rng rng = Rng::substream(opts.seed, i * parts2.size() + j);
      for (int r = 0; r < opts.restarts; ++r) {
        auto v0 = random_cone_unit(p1, rng);
        auto w0 = random_cone_unit(p2, rng);
        if (v0 && w0) starts.emplace_back(*v0, *w0);
      }

      for (auto& [v0, w0] : starts) {
        AltResult cand = alternate(p1, p2, v0, w0, opts);
        ++used;
        if (cand.t > best.t) best = cand;  // strict: ties keep the earliest start
      }
    }
  }

  GammaReport rep;
  rep.method = GammaMethod::alternating_multistart;
  rep.restarts_used = used;
  rep.converged = best.converged;
  rep.heuristic = !(single_ray(c1) && single_ray(c2));
  double t = clamp(best.t, -1.0, 1.0);
  rep.gamma = t;
  rep.kappa = std::sqrt(std::max(0.0, 2.0 - 2.0 * t));
  rep.gamma_re = rep.gamma;
  rep.kappa_re = rep.kappa;
  rep.m_exponent = 2.0;
  rep.certificate_v = best.v;
  rep.certificate_w = best.w;
  rep.intersects_nontrivially = rep.gamma >= 1.0 - kIntersectTol;
  return rep;
}

GammaReport gamma_cones(const UnionCone& c1, const UnionCone& c2,
                        const ConeOptimOptions& opts) {
  GammaReport sym = kappa_cones(c1.symmetrized(), c2, opts);
  GammaReport raw = kappa_cones(c1, c2, opts);

  GammaReport rep = sym;
  rep.gamma = clamp(sym.gamma, 0.0, 1.0);
  rep.kappa = std::sqrt(std::max(0.0, 2.0 - 2.0 * rep.gamma));
  rep.gamma_re = raw.gamma;
  rep.kappa_re = raw.kappa;
  rep.heuristic = !(single_ray(c1) && single_ray(c2));
  rep.intersects_nontrivially = rep.gamma >= 1.0 - kIntersectTol;

  // report the certificate inside C1 rather than its mirrored copy
  if (rep.certificate_v && !member(*rep.certificate_v, c1, kCertMemberTol)) {
    Vector flipped = -1.0 * *rep.certificate_v;
    if (member(flipped, c1, kCertMemberTol)) rep.certificate_v = flipped;
  }
  return rep;
}

double oracle_gamma(const UnionCone& c1, const UnionCone& c2, long samples,
                    uint64_t seed) {
  Rng rng(seed);
  return brute_force_gamma(c1, c2, samples, rng);
}

}  // namespace csgamma
