#pragma once

#include <cstdint>
#include <vector>

#include "csgamma/cone.hpp"
#include "csgamma/gamma_report.hpp"

namespace csgamma {

/// Finite discrete measure: strictly positive weights mu_i on n points.
class MeasureSpace {
 public:
  explicit MeasureSpace(std::vector<double> weights);
  int size() const { return static_cast<int>(weights_.size()); }
  double weight(int i) const { return weights_[static_cast<size_t>(i)]; }
  const std::vector<double>& weights() const { return weights_; }
  bool compatible_with(const MeasureSpace& other) const { return weights_ == other.weights_; }

 private:
  std::vector<double> weights_;
};

/// Real-valued function on the measure's points.
class LpVector {
 public:
  LpVector(MeasureSpace measure, std::vector<double> values);
  const MeasureSpace& measure() const { return measure_; }
  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<double>& values() const { return values_; }
  double operator[](int i) const { return values_[static_cast<size_t>(i)]; }

 private:
  MeasureSpace measure_;
  std::vector<double> values_;
};

/// (sum_i mu_i |f_i|^p)^(1/p); requires 1 < p < infinity.
double lp_norm(const LpVector& f, double p);

/// ||f g||_1 = sum_i mu_i |f_i g_i|.
double pairing_l1(const LpVector& f, const LpVector& g);

/// Mazur map psi_{r,s}(f) = ||f||_r^(1 - r/s) |f|^(r/s) sign(f), with
/// sign(0) = 1 and psi(0) = 0.  Preserves the norm (||psi(f)||_s = ||f||_r),
/// is positively homogeneous, and inverts via psi_{s,r}.
LpVector mazur_map(const LpVector& f, double r, double s);

enum class MVariant { max_pq, sum_pq };

struct HolderReport {
  double p = 0.0, q = 0.0;
  double m = 0.0;        // max{p, q} (or p + q for the sum variant)
  double pairing = 0.0;  // ||f g||_1
  double defect = 0.0;   // || |f|^(p/2)/||f||_p^(p/2) - |g|^(q/2)/||g||_q^(q/2) ||_2^2
  double bound = 0.0;    // ||f||_p ||g||_q (1 - defect / m)
  double slack = 0.0;    // bound - pairing, >= 0 up to roundoff
};

/// Quantitative Holder bound for a conjugate pair (q = p / (p-1)).
/// Throws std::domain_error when either argument is the zero vector.
HolderReport holder_defect(const LpVector& f, const LpVector& g, double p,
                           MVariant variant = MVariant::max_pq);

/// kappa^2 objective for one convex part pair: with f = G1 lambda and
/// g = G2 nu, value = || psi_{p,2}(|f|/||f||_p) - psi_{q,2}(|g|/||g||_q) ||_2^2
/// in L^2(mu).  Exposed so the analytic gradient can be checked directly.
class HolderKappaObjective {
 public:
  HolderKappaObjective(const ConvexCone& c1, const ConvexCone& c2,
                       const MeasureSpace& mu, double p);

  int m1() const { return m1_; }
  int m2() const { return m2_; }
  double value(const std::vector<double>& lambda, const std::vector<double>& nu) const;
  /// Gradient with respect to (lambda, nu), concatenated in that order.
  std::vector<double> gradient(const std::vector<double>& lambda,
                               const std::vector<double>& nu) const;
  /// ||G1 lambda||_p and ||G2 nu||_q; the objective is invariant under
  /// positive scaling of either block, so coefficients can be renormalized.
  double f_norm(const std::vector<double>& lambda) const;
  double g_norm(const std::vector<double>& nu) const;

 private:
  std::vector<std::vector<double>> g1_, g2_;  // unit generator columns
  std::vector<double> mu_;
  double p_, q_;
  int n_, m1_, m2_;
};

struct HolderGammaOptions {
  int restarts = 16;
  int max_iter = 500;
  double tol = 1e-10;
  uint64_t seed = 0xC5C5;
  MVariant m_variant = MVariant::max_pq;
};

/// Pairing constant gamma = 1 - kappa^2 / M with kappa the minimized L^2
/// separation of the Mazur-mapped unit vectors of the two cones, so that
/// ||fg||_1 <= ||f||_p ||g||_q gamma for f in C1, g in C2.  Minimization is
/// projected gradient descent over nonnegative generator coefficients with
/// deterministic multistart; the found kappa is an upper bound on the true
/// infimum and the result is heuristic unless both unions are single rays.
GammaReport gamma_holder_bound(const UnionCone& c1, const UnionCone& c2,
                               const MeasureSpace& mu, double p,
                               const HolderGammaOptions& opts = {});

/// Sampled lower bound: max ||fg||_1 / (||f||_p ||g||_q) over random members.
double oracle_gamma_holder(const UnionCone& c1, const UnionCone& c2,
                           const MeasureSpace& mu, double p, long samples,
                           uint64_t seed);

}  // namespace csgamma
