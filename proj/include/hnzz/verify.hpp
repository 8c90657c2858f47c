#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "hnzz/generate.hpp"
#include "hnzz/guard.hpp"
#include "hnzz/hn.hpp"

namespace hnzz {

/// Random equioriented module over GF(2) or GF(3) with n <= 5, sized for
/// the brute-force oracle. Deterministic in (seed, index).
GeneratedPersistence theorem_a_case(std::uint64_t seed, std::size_t index,
                                    const OracleGuard& guard = OracleGuard::from_environment());

/// Random nonzero affine mixture over GF(2) or GF(3) with n <= 6 and at
/// most three summands, sized for the brute-force oracle.
GeneratedAffine theorem_b_case(std::uint64_t seed, std::size_t index,
                               const OracleGuard& guard = OracleGuard::from_environment());

/// Number of Euler HN steps predicted by the barcode: one per interval
/// [0,j] plus one slope-0 step when some interval starts after 0.
std::size_t euler_hn_length(const Barcode& bar);

/// Fast path against oracle for one case: barcode against construction,
/// hn_from_barcode against hn_bruteforce, the step count, and truncation
/// recovery. nullopt on success, else a description of the first mismatch.
std::optional<std::string> check_theorem_a(const GeneratedPersistence& c,
                                           const OracleGuard& guard = OracleGuard::from_environment());

/// Lifted multiplicities against construction (also with the window grown
/// by n), eta_from_lift against hn_bruteforce, and N-multiplicity recovery
/// for every class of length below 3n with p != 1.
std::optional<std::string> check_theorem_b(const GeneratedAffine& c,
                                           const OracleGuard& guard = OracleGuard::from_environment());

struct VerifySummary {
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::optional<std::size_t> first_failure;
  std::string failure_reason;
  std::string failure_instance;  // instance JSON
};

VerifySummary verify_theorem_a(std::size_t cases, std::uint64_t seed,
                               const OracleGuard& guard = OracleGuard::from_environment());
VerifySummary verify_theorem_b(std::size_t cases, std::uint64_t seed,
                               const OracleGuard& guard = OracleGuard::from_environment());

}  // namespace hnzz
