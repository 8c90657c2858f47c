#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hnzz/guard.hpp"
#include "hnzz/quiver.hpp"
#include "hnzz/zigzag.hpp"

namespace hnzz {

struct HNStep {
  Rational slope;
  std::vector<std::size_t> quotient_dims;
  bool operator==(const HNStep&) const = default;
};

/// Successive quotients of a Harder-Narasimhan filtration, slopes strictly
/// decreasing. `witness`, when present, holds for each stage V^j one basis
/// matrix per vertex (reduced column echelon form).
struct HNReport {
  std::vector<HNStep> steps;
  std::vector<std::vector<Matrix>> witness;
};

/// Compares slopes and quotient dimensions only.
bool same_steps(const HNReport& a, const HNReport& b);

/// A subrepresentation given by one subspace basis per vertex.
struct Subrepresentation {
  std::vector<Matrix> basis;
  std::vector<std::size_t> dims;
};

/// Throws GuardExceeded unless v is over GF(p) and small enough for the
/// brute-force oracle.
void require_oracle_scale(const Representation& v, const OracleGuard& guard);

/// Every subrepresentation of v, including 0 and v. `reverse` flips the
/// per-vertex subspace order.
void for_each_subrepresentation(const Representation& v, const std::function<void(const Subrepresentation&)>& visit,
                                const OracleGuard& guard = OracleGuard::from_environment(), bool reverse = false);
std::vector<Subrepresentation> enumerate_subrepresentations(
    const Representation& v, const OracleGuard& guard = OracleGuard::from_environment(), bool reverse = false);

/// No nonzero subrepresentation has larger slope than v.
bool is_semistable(const Representation& v, const StabilityCondition& alpha,
                   const OracleGuard& guard = OracleGuard::from_environment());

struct BruteforceOptions {
  OracleGuard guard = OracleGuard::from_environment();
  bool reverse_enumeration = false;
};

/// HN filtration by iterated maximal destabilizers over all enumerated
/// subrepresentations. Each stage is the unique subrepresentation strictly
/// containing the previous one whose quotient has maximal slope and, among
/// those, maximal dimension; a tie raises InternalError.
HNReport hn_bruteforce(const Representation& v, const StabilityCondition& alpha, const BruteforceOptions& options = {});

/// True iff interval slopes are non-increasing in the lexicographic order
/// of intervals of the path 0..n-1.
bool is_antitone(const StabilityCondition& alpha);

/// HN quotients of an equioriented path module read off its barcode: one
/// step per distinct interval slope, collecting all intervals with that
/// slope. Requires an antitone alpha; the default is the Euler condition.
HNReport hn_from_barcode(const Barcode& bar, const Quiver& q);
HNReport hn_from_barcode(const Barcode& bar, const Quiver& q, const StabilityCondition& alpha);

/// Dimension vector of the stage selected by t: the sum of the quotients
/// whose slope is at least t.
std::vector<std::size_t> hn_r_filtration_eval(const HNReport& rep, const Rational& t, std::size_t vertex_count);

/// Euler HN report of an equioriented path module.
using EulerHN = std::function<HNReport(const Representation&)>;

/// Rebuilds the barcode of an equioriented module from the Euler HN reports
/// of its suffix restrictions to {k, ..., n-1}.
Barcode recover_barcode_via_truncations(const Representation& v, const EulerHN& hn = {});

/// HN report of a direct sum: quotients merged by slope.
HNReport hn_direct_sum_merge(const HNReport& a, const HNReport& b);

}  // namespace hnzz
