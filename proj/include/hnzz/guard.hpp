#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace hnzz {

/// Limits on brute-force enumeration over finite fields. Exceeding any of
/// them raises GuardExceeded; nothing falls back silently.
struct OracleGuard {
  std::size_t max_subspace_dim = 6;
  std::uint32_t max_prime = 3;
  std::size_t max_total_dim_gf2 = 8;
  std::size_t max_total_dim_odd = 6;

  std::size_t max_total_dim(std::uint32_t p) const { return p == 2 ? max_total_dim_gf2 : max_total_dim_odd; }

  /// Defaults, raised by HNZZ_GUARD_OVERRIDE when set. The variable holds
  /// comma-separated key=value pairs with keys subspace_dim, prime,
  /// total_dim (both fields), total_dim_gf2 and total_dim_odd.
  static OracleGuard from_environment();
  static OracleGuard parse_override(const std::string& spec);
  static OracleGuard parse_override(const std::string& spec, OracleGuard base);
};

}  // namespace hnzz
