#include "csgamma/verify.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <map>
#include <numbers>
#include <stdexcept>

#include "csgamma/cone.hpp"
#include "csgamma/holder.hpp"
#include "csgamma/identities.hpp"
#include "csgamma/oracle.hpp"
#include "csgamma/report.hpp"
#include "csgamma/rng.hpp"
#include "csgamma/subspace.hpp"

namespace csgamma {

namespace {

Mat random_spd_gram(int dim, Field field, Rng& rng) {
  Mat a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      a(i, j) = Complex(rng.next_in(-1.0, 1.0),
                        field == Field::complex ? rng.next_in(-1.0, 1.0) : 0.0);
  Mat g = matmul(a, a.conj_transpose());
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      g(i, j) /= static_cast<double>(dim);
      if (i == j) g(i, j) += 0.5;
    }
  return g;
}

// Pool of spaces reused across cases so gram validation is not redone per pair.
class SpacePool {
 public:
  explicit SpacePool(uint64_t seed) : seed_(seed) {}

  const Space& get(int dim, Field field, bool weighted) {
    auto key = std::make_tuple(dim, field == Field::complex, weighted);
    auto it = pool_.find(key);
    if (it != pool_.end()) return it->second;
    uint64_t idx = static_cast<uint64_t>(dim) * 4 + (field == Field::complex ? 2 : 0) +
                   (weighted ? 1 : 0);
    Rng rng = Rng::substream(seed_, 0x5000 + idx);
    Space s = weighted ? Space(dim, field, random_spd_gram(dim, field, rng))
                       : Space(dim, field);
    return pool_.emplace(key, std::move(s)).first->second;
  }

 private:
  uint64_t seed_;
  std::map<std::tuple<int, bool, bool>, Space> pool_;
};

Vector random_vector(const Space& s, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Complex> c(static_cast<size_t>(s.dim()));
    for (auto& ci : c)
      ci = Complex(rng.next_in(-1.0, 1.0),
                   s.field() == Field::complex ? rng.next_in(-1.0, 1.0) : 0.0);
    Vector x(s, std::move(c));
    if (norm(x) > 1e-8) return std::pow(10.0, rng.next_in(-1.0, 1.0)) * normalize(x);
  }
  throw std::runtime_error("random_vector: degenerate draw stream");
}

LpVector random_lp(const MeasureSpace& mu, Rng& rng, bool nonneg) {
  std::vector<double> v(static_cast<size_t>(mu.size()));
  for (auto& vi : v) vi = nonneg ? rng.next_double() : rng.next_in(-1.0, 1.0);
  double amax = 0.0;
  for (double vi : v) amax = std::max(amax, std::abs(vi));
  if (amax < 1e-3) v[0] = 1.0;
  return LpVector(mu, std::move(v));
}

struct Suite {
  std::vector<CheckResult>& out;
  // Buffered in a list so references handed out by open() stay valid.
  std::list<CheckResult> pending;

  explicit Suite(std::vector<CheckResult>& o) : out(o) {}
  ~Suite() {
    for (CheckResult& c : pending) out.push_back(std::move(c));
  }
  CheckResult& open(const std::string& name, double limit) {
    pending.push_back(CheckResult{name, 0, 0.0, limit, false});
    return pending.back();
  }
  static void record(CheckResult& c, double violation) {
    c.worst = std::max(c.worst, violation);
    ++c.cases;
  }
  static void close(CheckResult& c) { c.pass = c.worst <= c.limit; }
};

void check_identities(uint64_t seed, long trials, SpacePool& pool,
                      std::vector<CheckResult>& out) {
  Suite s{out};
  CheckResult& res = s.open("identity_residuals", 1e-10);
  CheckResult& dec = s.open("identity_decomposition", 1e-12);
  Rng rng = Rng::substream(seed, 1);
  for (long t = 0; t < trials; ++t) {
    int dim = 1 + static_cast<int>(t % 32);
    Field field = (t % 2 == 0) ? Field::complex : Field::real;
    const Space& sp = pool.get(dim, field, t % 3 == 0);
    Vector x = random_vector(sp, rng), y = random_vector(sp, rng);
    IdentityReport re = real_cs_identity(x, y);
    IdentityReport im = imag_cs_identity(x, y);
    IdentityReport mo = modulus_cs_identity(x, y);
    Suite::record(res, std::max({re.residual, im.residual, mo.residual}));
    Complex rebuilt(re.rhs, im.rhs);
    Suite::record(dec, std::abs(rebuilt - inner(x, y)));
  }
  Suite::close(res);
  Suite::close(dec);
}

void check_variational(uint64_t seed, long trials, SpacePool& pool,
                       std::vector<CheckResult>& out) {
  Suite s{out};
  CheckResult& bnd = s.open("variational_bound", 1e-12);
  CheckResult& eq = s.open("variational_equality", 1e-10);
  Rng rng = Rng::substream(seed, 2);
  long pairs = std::max<long>(1, trials / 10);
  for (long t = 0; t < pairs; ++t) {
    int dim = 1 + static_cast<int>(t % 8);
    const Space& sp = pool.get(dim, Field::complex, t % 3 == 1);
    Vector x = random_vector(sp, rng), y = random_vector(sp, rng);
    double target = std::abs(inner(x, y));
    double worst = -1.0;
    for (int k = 0; k < 64; ++k) {
      double alpha = 2.0 * std::numbers::pi * k / 64.0;
      worst = std::max(worst, variational_bound(x, y, alpha).lhs - target);
    }
    Suite::record(bnd, worst);
    IdentityReport at_opt = variational_bound(x, y, optimal_alpha(x, y));
    Suite::record(eq, std::abs(at_opt.lhs - target));
  }
  Suite::close(bnd);
  Suite::close(eq);
}

void check_mazur(uint64_t seed, long trials, std::vector<CheckResult>& out) {
  Suite s{out};
  CheckResult& nrm = s.open("mazur_norm", 1e-12);
  CheckResult& inv = s.open("mazur_inverse", 1e-10);
  CheckResult& hom = s.open("mazur_homogeneity", 1e-12);
  Rng rng = Rng::substream(seed, 3);
  const double exps[] = {1.5, 2.0, 3.0, 4.0};
  for (long t = 0; t < trials; ++t) {
    int n = 1 + static_cast<int>(t % 16);
    std::vector<double> w(static_cast<size_t>(n));
    for (auto& wi : w) wi = rng.next_in(0.1, 2.0);
    MeasureSpace mu(std::move(w));
    LpVector f = random_lp(mu, rng, false);
    double r = exps[t % 4], sx = exps[(t + 1 + t / 4) % 4];
    LpVector psi = mazur_map(f, r, sx);
    Suite::record(nrm, std::abs(lp_norm(psi, sx) - lp_norm(f, r)));
    LpVector back = mazur_map(psi, sx, r);
    double dinv = 0.0;
    for (int i = 0; i < n; ++i) dinv = std::max(dinv, std::abs(back[i] - f[i]));
    Suite::record(inv, dinv);
    double c = std::pow(10.0, rng.next_in(-1.0, 1.0));
    std::vector<double> cf(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cf[static_cast<size_t>(i)] = c * f[i];
    LpVector psic = mazur_map(LpVector(mu, std::move(cf)), r, sx);
    double dhom = 0.0;
    for (int i = 0; i < n; ++i)
      dhom = std::max(dhom, std::abs(psic[i] - c * psi[i]) / std::max(1.0, c));
    Suite::record(hom, dhom);
  }
  Suite::close(nrm);
  Suite::close(inv);
  Suite::close(hom);
}

void check_holder(uint64_t seed, long trials, std::vector<CheckResult>& out) {
  Suite s{out};
  CheckResult& slack = s.open("holder_slack", 1e-10);
  CheckResult& equal = s.open("holder_equality", 1e-10);
  CheckResult& p2 = s.open("holder_p2_identity", 1e-12);
  Rng rng = Rng::substream(seed, 4);
  const double exps[] = {1.5, 2.0, 3.0, 4.0};
  for (long t = 0; t < trials; ++t) {
    int n = 1 + static_cast<int>(t % 12);
    std::vector<double> w(static_cast<size_t>(n));
    for (auto& wi : w) wi = rng.next_in(0.1, 2.0);
    MeasureSpace mu(std::move(w));
    double p = exps[t % 4];
    LpVector f = random_lp(mu, rng, false);
    LpVector g = random_lp(mu, rng, false);
    MVariant variant = (t % 5 == 0) ? MVariant::sum_pq : MVariant::max_pq;
    HolderReport hr = holder_defect(f, g, p, variant);
    Suite::record(slack, -hr.slack);

    std::vector<double> ga(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ga[static_cast<size_t>(i)] = std::pow(std::abs(f[i]), p - 1.0);
    HolderReport he = holder_defect(f, LpVector(mu, std::move(ga)), p);
    Suite::record(equal, std::max(he.defect, std::abs(he.slack)));

    // p = 2 against the exact real-part identity in the weighted inner
    // product space, on unit-norm nonnegative pairs.
    LpVector fp = random_lp(mu, rng, true);
    LpVector gp = random_lp(mu, rng, true);
    double fn = lp_norm(fp, 2.0), gn = lp_norm(gp, 2.0);
    std::vector<double> fu(static_cast<size_t>(n)), gu(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      fu[static_cast<size_t>(i)] = fp[i] / fn;
      gu[static_cast<size_t>(i)] = gp[i] / gn;
    }
    LpVector f2(mu, fu), g2(mu, gu);
    HolderReport h2 = holder_defect(f2, g2, 2.0);
    Mat gram(n, n);
    for (int i = 0; i < n; ++i) gram(i, i) = mu.weight(i);
    Space l2(n, Field::real, gram);
    std::vector<Complex> xc(static_cast<size_t>(n)), yc(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      xc[static_cast<size_t>(i)] = f2[i];
      yc[static_cast<size_t>(i)] = g2[i];
    }
    IdentityReport re = real_cs_identity(Vector(l2, xc), Vector(l2, yc));
    Suite::record(p2, std::max(std::abs(h2.bound - re.rhs), std::abs(h2.pairing - re.lhs)));
  }
  Suite::close(slack);
  Suite::close(equal);
  Suite::close(p2);
}

void check_cone_reference(uint64_t seed, std::vector<CheckResult>& out) {
  Suite s{out};
  CheckResult& ref = s.open("cone_reference_values", 1e-6);
  CheckResult& grid = s.open("cone_grid_agreement", 1e-3);
  CheckResult& sandwich = s.open("cone_oracle_sandwich", 1e-9);

  Space plane(2, Field::real);
  Mat line(2, 2);
  line(0, 0) = 1.0;
  line(1, 0) = -1.0;
  line(0, 1) = -1.0;
  line(1, 1) = 1.0;
  Mat q1(2, 2), q3(2, 2);
  q1(0, 0) = 1.0;
  q1(1, 1) = 1.0;
  q3(0, 0) = -1.0;
  q3(1, 1) = -1.0;
  UnionCone c1{std::vector<ConvexCone>{ConvexCone(plane, line)}};
  UnionCone c2{std::vector<ConvexCone>{ConvexCone(plane, q1), ConvexCone(plane, q3)}};

  ConeOptimOptions opts;
  opts.seed = seed;
  GammaReport rep = gamma_cones(c1, c2, opts);
  const double root_half = 0.7071067811865475244;
  const double kappa_ref = 0.7653668647301795434;  // sqrt(2 - sqrt(2))
  Suite::record(ref, std::abs(rep.gamma - root_half));
  Suite::record(ref, std::abs(rep.kappa - kappa_ref));

  Suite::record(grid, std::abs(rep.gamma - grid_gamma_2d(c1, c2, 10000)));

  double sampled = oracle_gamma(c1, c2, 20000, seed);
  Suite::record(sandwich, sampled - rep.gamma);

  Suite::close(ref);
  Suite::close(grid);
  Suite::close(sandwich);
}

void check_subspace_oracle(uint64_t seed, long trials, SpacePool& pool,
                           std::vector<CheckResult>& out) {
  Suite s{out};
  CheckResult& upper = s.open("subspace_oracle_upper", 1e-9);
  CheckResult& gap = s.open("subspace_oracle_gap", 5e-3);
  Rng rng = Rng::substream(seed, 6);
  long instances = std::clamp<long>(trials / 100, 2, 12);
  for (long t = 0; t < instances; ++t) {
    int dim = 2 + static_cast<int>(t % 5);
    Field field = (t % 2 == 0) ? Field::complex : Field::real;
    const Space& sp = pool.get(dim, field, t % 3 == 2);
    int k1 = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(std::min(3, dim))));
    int k2 = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(std::min(3, dim))));
    Mat g1(dim, k1), g2(dim, k2);
    for (int j = 0; j < k1; ++j) {
      Vector v = random_vector(sp, rng);
      for (int i = 0; i < dim; ++i) g1(i, j) = v[i];
    }
    for (int j = 0; j < k2; ++j) {
      Vector v = random_vector(sp, rng);
      for (int i = 0; i < dim; ++i) g2(i, j) = v[i];
    }
    Subspace s1 = orthonormalize(sp, g1), s2 = orthonormalize(sp, g2);
    GammaReport rep = gamma_subspaces(s1, s2);
    Rng orng = Rng::substream(seed, 7000 + static_cast<uint64_t>(t));
    double sampled = brute_force_gamma_subspaces(s1, s2, 100000, orng);
    Suite::record(upper, sampled - rep.gamma);
    Suite::record(gap, rep.gamma - sampled);
  }
  Suite::close(upper);
  Suite::close(gap);
}

}  // namespace

bool VerifySummary::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

VerifySummary run_verify(std::uint64_t seed, long trials) {
  if (trials <= 0) throw std::invalid_argument("verify: trials must be positive");
  VerifySummary out;
  out.seed = seed;
  out.trials = trials;
  SpacePool pool(seed);
  check_identities(seed, trials, pool, out.checks);
  check_variational(seed, trials, pool, out.checks);
  check_mazur(seed, trials, out.checks);
  check_holder(seed, trials, out.checks);
  check_cone_reference(seed, out.checks);
  check_subspace_oracle(seed, trials, pool, out.checks);
  return out;
}

nlohmann::json to_json(const VerifySummary& s) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : s.checks)
    checks.push_back({{"name", c.name},
                      {"cases", c.cases},
                      {"worst", c.worst},
                      {"limit", c.limit},
                      {"pass", c.pass}});
  return {{"seed", hex_u64(s.seed)},
          {"trials", s.trials},
          {"checks", checks},
          {"ok", s.ok()}};
}

}  // namespace csgamma
