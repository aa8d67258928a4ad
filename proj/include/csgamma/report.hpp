#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "csgamma/gamma_report.hpp"
#include "csgamma/holder.hpp"
#include "csgamma/identities.hpp"

namespace csgamma {

/// FNV-1a 64-bit digest of a byte string.
std::uint64_t fnv1a64(std::string_view bytes);

/// Lowercase hex with a 0x prefix, no padding.
std::string hex_u64(std::uint64_t x);

nlohmann::json coords_json(const Vector& x);
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const GammaReport& r);
nlohmann::json to_json(const HolderReport& r);

/// Standard report envelope written to stdout by the command line tool.
/// Keys are emitted in sorted order, so equal content means equal bytes.
nlohmann::json run_report(const std::string& command, const std::string& input_digest,
                          std::uint64_t seed, nlohmann::json flags, nlohmann::json results);

}  // namespace csgamma
