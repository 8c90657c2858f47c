#include "hnzz/verify.hpp"

#include <sstream>

#include "hnzz/affine.hpp"
#include "hnzz/error.hpp"
#include "hnzz/io.hpp"

namespace hnzz {

namespace {

Rng case_rng(std::uint64_t seed, std::size_t index) {
  return Rng(seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1)));
}

std::string describe(const HNReport& r) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < r.steps.size(); ++k) {
    if (k) os << ", ";
    os << to_string(r.steps[k].slope) << ":(";
    for (std::size_t x = 0; x < r.steps[k].quotient_dims.size(); ++x)
      os << (x ? "," : "") << r.steps[k].quotient_dims[x];
    os << ")";
  }
  os << "]";
  return os.str();
}

std::string describe(const Barcode& b) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [i, m] : b) {
    os << (first ? "" : ", ") << "[" << i.lo << "," << i.hi << "]:" << m;
    first = false;
  }
  os << "}";
  return os.str();
}

Field small_prime(Rng& rng) { return Field::prime(rng.chance(1, 2) ? 2 : 3); }

template <class Case, class Make, class Check, class Serialize>
VerifySummary run(std::size_t cases, Make make, Check check, Serialize serialize) {
  VerifySummary s;
  for (std::size_t i = 0; i < cases; ++i) {
    Case c = make(i);
    ++s.cases;
    std::optional<std::string> failure;
    try {
      failure = check(c);
    } catch (const GuardExceeded&) {
      throw;
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (!failure) {
      ++s.passed;
    } else if (!s.first_failure) {
      s.first_failure = i;
      s.failure_reason = *failure;
      s.failure_instance = serialize(c);
    }
  }
  return s;
}

}  // namespace

GeneratedPersistence theorem_a_case(std::uint64_t seed, std::size_t index, const OracleGuard& guard) {
  Rng rng = case_rng(seed, index);
  PersistenceParams params;
  params.n = rng.between(1, 5);
  params.field = small_prime(rng);
  params.max_summands = 5;
  params.max_total_dim = guard.max_total_dim(params.field.modulus());
  params.max_vertex_dim = guard.max_subspace_dim;
  return generate_persistence(params, rng);
}

GeneratedAffine theorem_b_case(std::uint64_t seed, std::size_t index, const OracleGuard& guard) {
  Rng rng = case_rng(seed, index);
  for (;;) {
    AffineParams params;
    params.n = rng.between(2, 6);
    params.field = small_prime(rng);
    params.max_summands = 3;
    params.max_total_dim = guard.max_total_dim(params.field.modulus());
    params.max_vertex_dim = guard.max_subspace_dim;
    GeneratedAffine c = generate_affine(params, rng);
    if (!c.rep.is_zero()) return c;
  }
}

std::size_t euler_hn_length(const Barcode& bar) {
  std::size_t j = 0;
  bool rest = false;
  for (const auto& [i, mult] : bar) {
    if (i.lo == 0)
      ++j;
    else
      rest = true;
  }
  return j + (rest ? 1 : 0);
}

std::optional<std::string> check_theorem_a(const GeneratedPersistence& c, const OracleGuard& guard) {
  const Representation& v = c.rep;
  Barcode bar = barcode(v);
  if (bar != c.truth) return "barcode " + describe(bar) + " differs from construction " + describe(c.truth);
  HNReport fast = hn_from_barcode(bar, v.quiver);
  HNReport oracle = hn_bruteforce(v, euler_stability(v.quiver), {guard, false});
  if (!same_steps(fast, oracle)) return "hn_from_barcode " + describe(fast) + " differs from oracle " + describe(oracle);
  if (oracle.steps.size() != euler_hn_length(bar))
    return "HN length " + std::to_string(oracle.steps.size()) + " differs from predicted " +
           std::to_string(euler_hn_length(bar));
  Barcode recovered = recover_barcode_via_truncations(v);
  if (recovered != bar) return "truncation recovery " + describe(recovered) + " differs from " + describe(bar);
  return std::nullopt;
}

std::optional<std::string> check_theorem_b(const GeneratedAffine& c, const OracleGuard& guard) {
  const AffineQuiver& aq = c.quiver;
  const Representation& v = c.rep;
  LiftedMultiplicities lifted = lifted_multiplicities(aq, v);
  if (lifted.classes != c.truth.classes || lifted.d_inf != c.truth.d_inf())
    return "lifted multiplicities differ from construction";
  LiftedMultiplicities wider = lifted_multiplicities(aq, v, LiftWindow{lifted.window.D + aq.n});
  if (wider.classes != lifted.classes || wider.d_inf != lifted.d_inf)
    return "lifted multiplicities change when the window grows by n";

  HNReport fast = eta_from_lifted(aq, lifted);
  HNReport oracle = hn_bruteforce(v, euler_stability(v.quiver), {guard, false});
  if (!same_steps(fast, oracle)) return "eta_from_lift " + describe(fast) + " differs from oracle " + describe(oracle);

  for (std::size_t u = 0; u < aq.n; ++u)
    for (std::size_t len = 0; len < 3 * aq.n; ++len) {
      if (p_value(aq, u, u + len) == 1) continue;
      auto it = c.truth.classes.find(NClass{u, len});
      std::size_t expected = it == c.truth.classes.end() ? 0 : it->second;
      std::size_t got = recover_N_multiplicities(aq, oracle, u, u + len);
      if (got != expected)
        return "recovered multiplicity " + std::to_string(got) + " of N[" + std::to_string(u) + "," +
               std::to_string(u + len) + "], expected " + std::to_string(expected);
    }
  return std::nullopt;
}

VerifySummary verify_theorem_a(std::size_t cases, std::uint64_t seed, const OracleGuard& guard) {
  return run<GeneratedPersistence>(
      cases, [&](std::size_t i) { return theorem_a_case(seed, i, guard); },
      [&](const GeneratedPersistence& c) { return check_theorem_a(c, guard); },
      [](const GeneratedPersistence& c) { return serialize_instance({c.rep, std::nullopt}); });
}

VerifySummary verify_theorem_b(std::size_t cases, std::uint64_t seed, const OracleGuard& guard) {
  return run<GeneratedAffine>(
      cases, [&](std::size_t i) { return theorem_b_case(seed, i, guard); },
      [&](const GeneratedAffine& c) { return check_theorem_b(c, guard); },
      [](const GeneratedAffine& c) { return serialize_instance({c.rep, c.quiver}); });
}

}  // namespace hnzz
