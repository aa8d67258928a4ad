#include "csgamma/holder.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "csgamma/oracle.hpp"
#include "csgamma/rng.hpp"

namespace csgamma {

namespace {

constexpr double kZeroNormTol = 1e-14;
constexpr double kIntersectTol = 1e-10;

void check_exponent(double p, const char* who) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument(std::string(who) + ": exponent must lie in (1, infinity)");
}

void check_same_measure(const LpVector& f, const LpVector& g, const char* who) {
  if (!f.measure().compatible_with(g.measure()))
    throw std::invalid_argument(std::string(who) + ": vectors over different measures");
}

double conjugate(double p) { return p / (p - 1.0); }

double m_constant(double p, double q, MVariant v) {
  return v == MVariant::max_pq ? std::max(p, q) : p + q;
}

}  // namespace

MeasureSpace::MeasureSpace(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty())
    throw std::invalid_argument("measure: needs at least one point");
  for (double w : weights_)
    if (!(w > 0.0) || !std::isfinite(w))
      throw std::invalid_argument("measure: weights must be positive and finite");
}

LpVector::LpVector(MeasureSpace measure, std::vector<double> values)
    : measure_(std::move(measure)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != measure_.size())
    throw std::invalid_argument("lp vector: value count does not match measure size");
  for (double v : values_)
    if (!std::isfinite(v)) throw std::invalid_argument("lp vector: non-finite value");
}

double lp_norm(const LpVector& f, double p) {
  check_exponent(p, "lp_norm");
  double acc = 0.0;
  for (int i = 0; i < f.size(); ++i)
    acc += f.measure().weight(i) * std::pow(std::abs(f[i]), p);
  return std::pow(acc, 1.0 / p);
}

double pairing_l1(const LpVector& f, const LpVector& g) {
  check_same_measure(f, g, "pairing_l1");
  double acc = 0.0;
  for (int i = 0; i < f.size(); ++i)
    acc += f.measure().weight(i) * std::abs(f[i] * g[i]);
  return acc;
}

LpVector mazur_map(const LpVector& f, double r, double s) {
  check_exponent(r, "mazur_map");
  check_exponent(s, "mazur_map");
  double nf = lp_norm(f, r);
  std::vector<double> out(static_cast<size_t>(f.size()), 0.0);
  if (nf >= kZeroNormTol) {
    double scale = std::pow(nf, 1.0 - r / s);
    for (int i = 0; i < f.size(); ++i)
      out[static_cast<size_t>(i)] =
          scale * std::pow(std::abs(f[i]), r / s) * sign_of(f[i]);
  }
  return LpVector(f.measure(), std::move(out));
}

HolderReport holder_defect(const LpVector& f, const LpVector& g, double p,
                           MVariant variant) {
  check_exponent(p, "holder_defect");
  check_same_measure(f, g, "holder_defect");
  double q = conjugate(p);
  double nf = lp_norm(f, p), ng = lp_norm(g, q);
  if (nf < kZeroNormTol || ng < kZeroNormTol)
    throw std::domain_error("holder_defect: zero vector");

  HolderReport rep;
  rep.p = p;
  rep.q = q;
  rep.m = m_constant(p, q, variant);
  rep.pairing = pairing_l1(f, g);

  // squared L^2 distance of the normalized power densities
  double defect = 0.0;
  double fp = std::pow(nf, p / 2.0), gq = std::pow(ng, q / 2.0);
  for (int i = 0; i < f.size(); ++i) {
    double u = std::pow(std::abs(f[i]), p / 2.0) / fp;
    double v = std::pow(std::abs(g[i]), q / 2.0) / gq;
    defect += f.measure().weight(i) * (u - v) * (u - v);
  }
  rep.defect = defect;
  rep.bound = nf * ng * (1.0 - defect / rep.m);
  rep.slack = rep.bound - rep.pairing;
  return rep;
}

HolderKappaObjective::HolderKappaObjective(const ConvexCone& c1, const ConvexCone& c2,
                                           const MeasureSpace& mu, double p)
    : mu_(mu.weights()), p_(p), q_(conjugate(p)), n_(mu.size()),
      m1_(c1.generator_count()), m2_(c2.generator_count()) {
  check_exponent(p, "holder objective");
  if (c1.space().dim() != n_ || c2.space().dim() != n_)
    throw std::invalid_argument("holder objective: cone dimension does not match measure");
  auto unit_cols = [](const ConvexCone& c) {
    std::vector<std::vector<double>> cols(static_cast<size_t>(c.generator_count()));
    for (int j = 0; j < c.generator_count(); ++j) {
      Vector u = c.unit_generator(j);
      std::vector<double> col(static_cast<size_t>(u.dim()));
      for (int i = 0; i < u.dim(); ++i) col[static_cast<size_t>(i)] = u[i].real();
      cols[static_cast<size_t>(j)] = std::move(col);
    }
    return cols;
  };
  g1_ = unit_cols(c1);
  g2_ = unit_cols(c2);
}

namespace {

struct Density {
  std::vector<double> f;  // combined vector
  std::vector<double> u;  // |f|^(e/2) / N^(1/2)
  double n_e;             // sum_i mu_i |f_i|^e
  bool valid;
};

Density density_of(const std::vector<std::vector<double>>& cols,
                   const std::vector<double>& coeff, const std::vector<double>& mu,
                   double e) {
  const size_t n = mu.size();
  Density d;
  d.f.assign(n, 0.0);
  for (size_t j = 0; j < cols.size(); ++j)
    if (coeff[j] != 0.0)
      for (size_t i = 0; i < n; ++i) d.f[i] += coeff[j] * cols[j][i];
  d.n_e = 0.0;
  for (size_t i = 0; i < n; ++i) d.n_e += mu[i] * std::pow(std::abs(d.f[i]), e);
  d.valid = d.n_e > 1e-280;
  if (d.valid) {
    double root = std::sqrt(d.n_e);
    d.u.resize(n);
    for (size_t i = 0; i < n; ++i) d.u[i] = std::pow(std::abs(d.f[i]), e / 2.0) / root;
  }
  return d;
}

}  // namespace

double HolderKappaObjective::value(const std::vector<double>& lambda,
                                   const std::vector<double>& nu) const {
  if (static_cast<int>(lambda.size()) != m1_ || static_cast<int>(nu.size()) != m2_)
    throw std::invalid_argument("holder objective: coefficient size mismatch");
  Density a = density_of(g1_, lambda, mu_, p_);
  Density b = density_of(g2_, nu, mu_, q_);
  if (!a.valid || !b.valid)
    throw std::domain_error("holder objective: zero combination");
  double acc = 0.0;
  for (int i = 0; i < n_; ++i) {
    double d = a.u[static_cast<size_t>(i)] - b.u[static_cast<size_t>(i)];
    acc += mu_[static_cast<size_t>(i)] * d * d;
  }
  return acc;
}

double HolderKappaObjective::f_norm(const std::vector<double>& lambda) const {
  return std::pow(density_of(g1_, lambda, mu_, p_).n_e, 1.0 / p_);
}

double HolderKappaObjective::g_norm(const std::vector<double>& nu) const {
  return std::pow(density_of(g2_, nu, mu_, q_).n_e, 1.0 / q_);
}

std::vector<double> HolderKappaObjective::gradient(const std::vector<double>& lambda,
                                                   const std::vector<double>& nu) const {
  Density a = density_of(g1_, lambda, mu_, p_);
  Density b = density_of(g2_, nu, mu_, q_);
  if (!a.valid || !b.valid)
    throw std::domain_error("holder objective: zero combination");

  // dPhi/df_j = e mu_j sign(f_j) [ (u_j - v_j) |f_j|^(e/2-1) / sqrt(N)
  //                                - |f_j|^(e-1) N^(-3/2) A ]
  // with A = sum_i mu_i (u_i - v_i) |f_i|^(e/2); same for g with u, v swapped.
  auto side_grad = [&](const Density& self, const Density& other, double e,
                       const std::vector<std::vector<double>>& cols) {
    const size_t n = mu_.size();
    double root = std::sqrt(self.n_e);
    double acc_a = 0.0;
    for (size_t i = 0; i < n; ++i)
      acc_a += mu_[i] * (self.u[i] - other.u[i]) * std::pow(std::abs(self.f[i]), e / 2.0);
    std::vector<double> df(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
      if (self.f[i] == 0.0) continue;  // subgradient choice at the kink
      double afi = std::abs(self.f[i]);
      double term = (self.u[i] - other.u[i]) * std::pow(afi, e / 2.0 - 1.0) / root -
                    std::pow(afi, e - 1.0) * acc_a / (self.n_e * root);
      df[i] = e * mu_[i] * sign_of(self.f[i]) * term;
    }
    std::vector<double> grad(cols.size(), 0.0);
    for (size_t j = 0; j < cols.size(); ++j) {
      double g = 0.0;
      for (size_t i = 0; i < n; ++i) g += df[i] * cols[j][i];
      grad[j] = g;
    }
    return grad;
  };

  std::vector<double> grad = side_grad(a, b, p_, g1_);
  std::vector<double> gnu = side_grad(b, a, q_, g2_);
  grad.insert(grad.end(), gnu.begin(), gnu.end());
  return grad;
}

namespace {

struct PgdResult {
  double value = std::numeric_limits<double>::infinity();
  std::vector<double> lambda, nu;
  bool converged = false;
};

// Projected gradient descent on the nonnegative orthant with backtracking.
PgdResult pgd_minimize(const HolderKappaObjective& obj, std::vector<double> lambda,
                       std::vector<double> nu, int max_iter, double tol) {
  PgdResult res;
  auto try_value = [&](const std::vector<double>& l, const std::vector<double>& v,
                       double& out) {
    try {
      out = obj.value(l, v);
      return true;
    } catch (const std::domain_error&) {
      return false;
    }
  };

  double phi;
  if (!try_value(lambda, nu, phi)) return res;

  const int m1 = obj.m1();
  for (int it = 0; it < max_iter; ++it) {
    std::vector<double> grad = obj.gradient(lambda, nu);
    double gnorm2 = 0.0;
    for (double g : grad) gnorm2 += g * g;
    if (gnorm2 < 1e-300) {
      res.converged = true;
      break;
    }

    double step = 1.0;
    bool accepted = false;
    for (int bt = 0; bt < 40; ++bt, step *= 0.5) {
      std::vector<double> l2 = lambda, v2 = nu;
      double moved = 0.0;
      for (int j = 0; j < m1; ++j) {
        double next = std::max(0.0, l2[static_cast<size_t>(j)] - step * grad[static_cast<size_t>(j)]);
        moved += std::abs(next - l2[static_cast<size_t>(j)]);
        l2[static_cast<size_t>(j)] = next;
      }
      for (size_t j = 0; j < v2.size(); ++j) {
        double next = std::max(0.0, v2[j] - step * grad[static_cast<size_t>(m1) + j]);
        moved += std::abs(next - v2[j]);
        v2[j] = next;
      }
      if (moved == 0.0) break;
      double phi2;
      if (!try_value(l2, v2, phi2)) continue;
      if (phi2 <= phi - 1e-12) {
        // scale invariance: keep the combinations at unit norm
        double nf = obj.f_norm(l2), ng = obj.g_norm(v2);
        for (double& x : l2) x /= nf;
        for (double& x : v2) x /= ng;
        lambda = std::move(l2);
        nu = std::move(v2);
        double drop = phi - phi2;
        phi = phi2;
        accepted = true;
        if (drop < tol) res.converged = true;
        break;
      }
    }
    if (!accepted) {
      res.converged = true;  // no descent step left at this scale
      break;
    }
    if (res.converged) break;
  }

  res.value = phi;
  res.lambda = std::move(lambda);
  res.nu = std::move(nu);
  return res;
}

bool single_ray(const UnionCone& c) {
  return c.parts().size() == 1 && c.parts().front().generator_count() == 1;
}

Vector coefficient_vector(const ConvexCone& part, const std::vector<double>& coeff) {
  Vector acc = Vector::zero(part.space());
  for (int j = 0; j < part.generator_count(); ++j)
    if (coeff[static_cast<size_t>(j)] != 0.0)
      acc = acc + coeff[static_cast<size_t>(j)] * part.unit_generator(j);
  return acc;
}

LpVector as_lp(const MeasureSpace& mu, const Vector& v) {
  std::vector<double> vals(static_cast<size_t>(v.dim()));
  for (int i = 0; i < v.dim(); ++i) vals[static_cast<size_t>(i)] = v[i].real();
  return LpVector(mu, std::move(vals));
}

}  // namespace

GammaReport gamma_holder_bound(const UnionCone& c1, const UnionCone& c2,
                               const MeasureSpace& mu, double p,
                               const HolderGammaOptions& opts) {
  check_exponent(p, "gamma_holder_bound");
  const double q = conjugate(p);
  const double m_exp = m_constant(p, q, opts.m_variant);

  auto has_generators = [](const UnionCone& c) {
    for (const ConvexCone& part : c.parts())
      if (part.generator_count() > 0) return true;
    return false;
  };
  if (!has_generators(c1) || !has_generators(c2))
    throw std::domain_error("gamma_holder_bound: cone without generators");

  struct Best {
    double value = std::numeric_limits<double>::infinity();
    std::vector<double> lambda, nu;
    const ConvexCone* p1 = nullptr;
    const ConvexCone* p2 = nullptr;
    bool converged = false;
  } best;

  int used = 0;
  const auto& parts1 = c1.parts();
  const auto& parts2 = c2.parts();
  for (size_t i = 0; i < parts1.size(); ++i) {
    if (parts1[i].generator_count() == 0) continue;
    for (size_t j = 0; j < parts2.size(); ++j) {
      if (parts2[j].generator_count() == 0) continue;
      const ConvexCone& p1 = parts1[i];
      const ConvexCone& p2 = parts2[j];
      HolderKappaObjective obj(p1, p2, mu, p);
      const int m1 = p1.generator_count(), m2 = p2.generator_count();

      std::vector<std::pair<std::vector<double>, std::vector<double>>> starts;
      for (int a = 0; a < m1; ++a)
        for (int b = 0; b < m2; ++b) {
          std::vector<double> l(static_cast<size_t>(m1), 0.0), v(static_cast<size_t>(m2), 0.0);
          l[static_cast<size_t>(a)] = 1.0;
          v[static_cast<size_t>(b)] = 1.0;
          starts.emplace_back(std::move(l), std::move(v));
        }
      Rng rng = Rng::substream(opts.seed, i * parts2.size() + j);
      for (int r = 0; r < opts.restarts; ++r) {
        std::vector<double> l(static_cast<size_t>(m1)), v(static_cast<size_t>(m2));
        for (double& x : l) x = rng.next_double();
        for (double& x : v) x = rng.next_double();
        starts.emplace_back(std::move(l), std::move(v));
      }

      for (auto& [l0, v0] : starts) {
        PgdResult run = pgd_minimize(obj, l0, v0, opts.max_iter, opts.tol);
        ++used;
        if (run.value < best.value) {  // strict: ties keep the earliest start
          best.value = run.value;
          best.lambda = run.lambda;
          best.nu = run.nu;
          best.p1 = &p1;
          best.p2 = &p2;
          best.converged = run.converged;
        }
      }
    }
  }

  if (!best.p1)
    throw std::domain_error("gamma_holder_bound: no feasible starting point");

  GammaReport rep;
  rep.method = GammaMethod::alternating_multistart;
  rep.m_exponent = m_exp;
  rep.restarts_used = used;
  rep.converged = best.converged;
  rep.heuristic = !(single_ray(c1) && single_ray(c2));
  rep.kappa = std::sqrt(std::max(0.0, best.value));
  rep.gamma = std::min(1.0, std::max(0.0, 1.0 - best.value / m_exp));
  rep.kappa_re = rep.kappa;
  rep.gamma_re = rep.gamma;
  rep.intersects_nontrivially = rep.gamma >= 1.0 - kIntersectTol;

  // certificates normalized to unit p- and q-norm
  Vector fv = coefficient_vector(*best.p1, best.lambda);
  Vector gv = coefficient_vector(*best.p2, best.nu);
  LpVector f = as_lp(mu, fv), g = as_lp(mu, gv);
  double nf = lp_norm(f, p), ng = lp_norm(g, q);
  if (nf >= kZeroNormTol) rep.certificate_v = (1.0 / nf) * fv;
  if (ng >= kZeroNormTol) rep.certificate_w = (1.0 / ng) * gv;
  return rep;
}

double oracle_gamma_holder(const UnionCone& c1, const UnionCone& c2,
                           const MeasureSpace& mu, double p, long samples,
                           uint64_t seed) {
  check_exponent(p, "oracle_gamma_holder");
  const double q = conjugate(p);
  Rng rng(seed);
  double best = 0.0;
  for (long s = 0; s < samples; ++s) {
    Vector fv = sample_unit_in_cone(c1, rng);
    Vector gv = sample_unit_in_cone(c2, rng);
    LpVector f = as_lp(mu, fv), g = as_lp(mu, gv);
    double nf = lp_norm(f, p), ng = lp_norm(g, q);
    if (nf < kZeroNormTol || ng < kZeroNormTol) continue;
    best = std::max(best, pairing_l1(f, g) / (nf * ng));
  }
  return best;
}

}  // namespace csgamma
