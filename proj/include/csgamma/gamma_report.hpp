#pragma once

#include <optional>

#include "csgamma/space.hpp"

namespace csgamma {

enum class GammaMethod { exact_subspace, alternating_multistart, oracle };

const char* to_string(GammaMethod m);

/// Result of a gamma / kappa computation.  gamma and kappa are stored as a
/// consistent pair, gamma = 1 - kappa^2 / m_exponent (m_exponent is 2 except
/// for the L^p bounds, where it is the Holder constant M).  gamma_re / kappa_re
/// carry the unsymmetrized values for cone runs; for subspaces they coincide
/// with gamma / kappa.
struct GammaReport {
  double gamma = 0.0;
  double kappa = 0.0;
  double gamma_re = 0.0;
  double kappa_re = 0.0;
  double m_exponent = 2.0;
  std::optional<Vector> certificate_v;
  std::optional<Vector> certificate_w;
  GammaMethod method = GammaMethod::exact_subspace;
  int restarts_used = 0;
  bool converged = true;
  bool heuristic = false;
  bool intersects_nontrivially = false;
};

}  // namespace csgamma
