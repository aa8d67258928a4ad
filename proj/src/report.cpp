#include "csgamma/report.hpp"

#include <cstdio>

namespace csgamma {

const char* to_string(GammaMethod m) {
  switch (m) {
    case GammaMethod::exact_subspace: return "exact_subspace";
    case GammaMethod::alternating_multistart: return "alternating_multistart";
    case GammaMethod::oracle: return "oracle";
  }
  return "unknown";
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex_u64(std::uint64_t x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(x));
  return buf;
}

nlohmann::json coords_json(const Vector& x) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < x.dim(); ++i) {
    Complex c = x[i];
    if (x.space().field() == Field::real)
      out.push_back(c.real());
    else
      out.push_back(nlohmann::json::array({c.real(), c.imag()}));
  }
  return out;
}

nlohmann::json to_json(const IdentityReport& r) {
  return {{"lhs", r.lhs},
          {"rhs", r.rhs},
          {"residual", r.residual},
          {"defect_uv", r.defect_uv},
          {"defect_uiv", r.defect_uiv}};
}

nlohmann::json to_json(const GammaReport& r) {
  nlohmann::json out = {
      {"gamma", r.gamma},
      {"kappa", r.kappa},
      {"gamma_re", r.gamma_re},
      {"kappa_re", r.kappa_re},
      {"m_exponent", r.m_exponent},
      {"method", to_string(r.method)},
      {"restarts_used", r.restarts_used},
      {"converged", r.converged},
      {"heuristic", r.heuristic},
      {"intersects_nontrivially", r.intersects_nontrivially},
  };
  if (r.certificate_v) out["certificate_v"] = coords_json(*r.certificate_v);
  if (r.certificate_w) out["certificate_w"] = coords_json(*r.certificate_w);
  return out;
}

nlohmann::json to_json(const HolderReport& r) {
  return {{"p", r.p},     {"q", r.q},         {"m", r.m},       {"pairing", r.pairing},
          {"defect", r.defect}, {"bound", r.bound}, {"slack", r.slack}};
}

nlohmann::json run_report(const std::string& command, const std::string& input_digest,
                          std::uint64_t seed, nlohmann::json flags, nlohmann::json results) {
  return {{"command", command},
          {"input_digest", input_digest},
          {"seed", hex_u64(seed)},
          {"flags", std::move(flags)},
          {"results", std::move(results)}};
}

}  // namespace csgamma
