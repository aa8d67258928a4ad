#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace csgamma {

/// One invariant over a batch of seeded cases.  `worst` is the largest
/// violation observed (a residual, an overshoot, or minus a slack) and must
/// stay at or below `limit`.
struct CheckResult {
  std::string name;
  long cases = 0;
  double worst = 0.0;
  double limit = 0.0;
  bool pass = false;
};

struct VerifySummary {
  std::uint64_t seed = 0;
  long trials = 0;
  std::vector<CheckResult> checks;
  bool ok() const;
};

/// Seeded self-check suite over random instances: the exact identity family,
/// the variational bound, Mazur map properties, the quantitative Holder
/// bound, and sampling-oracle sandwiches for subspace and cone constants.
/// Deterministic for a fixed (seed, trials).  trials must be positive.
VerifySummary run_verify(std::uint64_t seed, long trials);

nlohmann::json to_json(const VerifySummary& s);

}  // namespace csgamma
