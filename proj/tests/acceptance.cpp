// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "hnzz/affine.hpp"
#include "hnzz/error.hpp"
#include "hnzz/generate.hpp"
#include "hnzz/io.hpp"
#include "hnzz/verify.hpp"
#include "hnzz/zigzag.hpp"
#include "oracles.hpp"

using namespace hnzz;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 20240601;

// Suites sized to total dimension 8 over both GF(2) and GF(3); the library
// default for odd primes is 6.
OracleGuard suite_guard() { return OracleGuard::parse_override("total_dim=8", OracleGuard::from_environment()); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

bool run_criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double t = seconds_since(t0);
  if (o.pass && t > budget_s) o.fail("over the " + std::to_string(budget_s) + " s budget");
  std::printf("criterion %d: %s  %s  (%.2f s)%s%s\n", id, o.pass ? "PASS" : "FAIL", title, t,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(HNZZ_GOLDEN_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing golden file " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AffineQuiver example_quiver() {
  using O = Orientation;
  return AffineQuiver(6, {O::cw, O::cw, O::cw, O::ccw, O::cw, O::cw});
}

std::vector<AffineQuiver> all_orientations(std::size_t n) {
  std::vector<AffineQuiver> out;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<Orientation> o;
    for (std::size_t i = 0; i < n; ++i) o.push_back(mask >> i & 1 ? Orientation::ccw : Orientation::cw);
    out.emplace_back(n, o);
  }
  return out;
}

Outcome example_golden() {
  Outcome o;
  const Field Q = Field::rational();
  AffineQuiver aq = example_quiver();
  Representation n19 = indec_N(aq, 1, 9, Q);
  Representation t23 = indec_T(aq, Scalar(Q, 2), 3);
  if (n19.dims != std::vector<std::size_t>{1, 2, 2, 2, 1, 1}) o.fail("N[1,9] dimension vector");
  if (t23.dims != std::vector<std::size_t>(6, 3)) o.fail("T[2;3] dimension vector");
  if (n19.mats[1] != Matrix::from_ints(Q, {{0}, {1}}) || n19.mats[4] != Matrix::from_ints(Q, {{1, 0}}))
    o.fail("N[1,9] exceptional matrices");
  if (t23.mats[0] != Matrix::from_ints(Q, {{2, 1, 0}, {0, 2, 1}, {0, 0, 2}})) o.fail("T[2;3] Jordan block");
  if (serialize_instance({n19, aq}) != read_golden("example_n19.json")) o.fail("N[1,9] golden instance bytes");
  if (serialize_instance({t23, aq}) != read_golden("example_t23.json")) o.fail("T[2;3] golden instance bytes");
  if (oracle::euler_slope(n19) != 0 || euler_slope_N(aq, 1, 9) != 0) o.fail("N[1,9] slope");
  if (oracle::euler_slope(t23) != 0) o.fail("T[2;3] slope");
  return o;
}

// Number of Euler HN steps predicted from the barcode: one per right end j
// of an interval starting at 0, plus one when some interval starts later.
std::size_t predicted_length(const Barcode& bar) {
  std::set<std::size_t> ends;
  bool later = false;
  for (const auto& [i, m] : bar) {
    if (i.lo == 0)
      ends.insert(i.hi);
    else
      later = true;
  }
  return ends.size() + (later ? 1 : 0);
}

Outcome theorem_a_suite() {
  Outcome o;
  const OracleGuard guard = suite_guard();
  for (std::size_t i = 0; i < 200 && o.pass; ++i) {
    GeneratedPersistence c = theorem_a_case(kSeed, i, guard);
    Barcode bar = barcode(c.rep);
    if (bar != c.truth) o.fail("case " + std::to_string(i) + ": barcode differs from construction");
    if (c.rep.is_zero()) continue;
    StabilityCondition eps = euler_stability(c.rep.quiver);
    HNReport fast = hn_from_barcode(bar, c.rep.quiver, eps);
    HNReport brute = hn_bruteforce(c.rep, eps, {guard, false});
    if (!same_steps(fast, brute)) o.fail("case " + std::to_string(i) + ": fast HN differs from oracle");
    if (brute.steps.size() != predicted_length(bar)) o.fail("case " + std::to_string(i) + ": length formula");
  }
  if (o.pass) o.detail = "200 cases";
  return o;
}

Outcome truncation_recovery() {
  Outcome o;
  const OracleGuard guard = suite_guard();
  for (std::size_t i = 0; i < 200 && o.pass; ++i) {
    GeneratedPersistence c = theorem_a_case(kSeed, i, guard);
    // Feed the recursion oracle HN reports so it never sees the barcode.
    EulerHN oracle_hn = [&](const Representation& w) { return hn_bruteforce(w, euler_stability(w.quiver), {guard, false}); };
    if (recover_barcode_via_truncations(c.rep, oracle_hn) != c.truth)
      o.fail("case " + std::to_string(i) + ": recovered barcode differs from construction");
    if (recover_barcode_via_truncations(c.rep) != c.truth)
      o.fail("case " + std::to_string(i) + ": recovery through the barcode route differs");
  }
  if (o.pass) o.detail = "200 cases";
  return o;
}

Outcome slope_formula() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& aq : all_orientations(n))
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t len = 0; len < 3 * n; ++len) {
          Representation v = indec_N(aq, u, u + len, Field::prime(2));
          Rational direct = oracle::euler_slope(v);
          int sign = direct > 0 ? 1 : (direct < 0 ? -1 : 0);
          if (euler_slope_N(aq, u, u + len) != direct || sign != 1 - p_value(aq, u, u + len))
            o.fail("N[" + std::to_string(u) + "," + std::to_string(u + len) + "] on n = " + std::to_string(n));
          ++checked;
        }
  if (o.pass) o.detail = std::to_string(checked) + " classes";
  return o;
}

Outcome lifted_suite() {
  Outcome o;
  Rng rng(kSeed);
  const Field fields[] = {Field::rational(), Field::prime(2), Field::prime(3)};
  for (std::size_t i = 0; i < 100 && o.pass; ++i) {
    AffineParams params;
    params.n = rng.between(2, 6);
    params.field = fields[i % 3];
    params.max_summands = 3;
    GeneratedAffine g = generate_affine(params, rng);
    LiftedMultiplicities m = lifted_multiplicities(g.quiver, g.rep);
    std::size_t tube_dim = 0;
    for (const auto& t : g.truth.tubes) tube_dim += t.w;
    if (m.classes != g.truth.classes || m.d_inf != tube_dim)
      o.fail("case " + std::to_string(i) + ": multiplicities differ from construction");
    LiftedMultiplicities wider = lifted_multiplicities(g.quiver, g.rep, LiftWindow{m.window.D + g.quiver.n});
    if (wider.classes != m.classes || wider.d_inf != m.d_inf)
      o.fail("case " + std::to_string(i) + ": window enlarged by n changes the result");
  }
  if (o.pass) o.detail = "100 cases";
  return o;
}

Outcome theorem_b_suite() {
  Outcome o;
  const OracleGuard guard = suite_guard();
  for (std::size_t i = 0; i < 100 && o.pass; ++i) {
    GeneratedAffine c = theorem_b_case(kSeed, i, guard);
    const AffineQuiver& aq = c.quiver;
    HNReport fast = eta_from_lift(aq, c.rep);
    if (!same_steps(fast, hn_bruteforce(c.rep, euler_stability(c.rep.quiver), {guard, false})))
      o.fail("case " + std::to_string(i) + ": eta_from_lift differs from oracle");
    for (std::size_t u = 0; u < aq.n; ++u)
      for (std::size_t len = 0; len < 3 * aq.n; ++len) {
        if (p_value(aq, u, u + len) == 1) continue;
        auto it = c.truth.classes.find(NClass{u, len});
        std::size_t expected = it == c.truth.classes.end() ? 0 : it->second;
        if (recover_N_multiplicities(aq, fast, u, u + len) != expected)
          o.fail("case " + std::to_string(i) + ": N multiplicity of class (" + std::to_string(u) + "," +
                 std::to_string(len) + ")");
      }
  }
  if (o.pass) o.detail = "100 cases";
  return o;
}

Outcome semistability() {
  Outcome o;
  const OracleGuard guard = OracleGuard::from_environment();
  std::size_t checked = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const Field f = Field::prime(p);
    const std::size_t cap = p == 2 ? guard.max_total_dim_gf2 : guard.max_total_dim_odd;
    for (std::size_t n = 2; n <= 4; ++n)
      for (const auto& aq : all_orientations(n)) {
        StabilityCondition eps = euler_stability(to_quiver(aq));
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t len = 0; len + 1 <= cap; ++len) {
            Representation v = indec_N(aq, u, u + len, f);
            if (v.total_dim() > cap) break;
            if (!is_semistable(v, eps)) o.fail("N[" + std::to_string(u) + "," + std::to_string(u + len) + "]");
            ++checked;
          }
        for (std::uint32_t lambda = 1; lambda < p; ++lambda)
          for (std::size_t w = 1; w * n <= cap; ++w) {
            Representation t = indec_T(aq, Scalar::from_residue(f, lambda), w);
            if (!is_semistable(t, eps)) o.fail("T[" + std::to_string(lambda) + ";" + std::to_string(w) + "]");
            ++checked;
          }
      }
  }
  if (o.pass) o.detail = std::to_string(checked) + " indecomposables";
  return o;
}

// Best-of-five wall time of barcode(lift) plus eta_from_lift, summed over
// a seeded batch of 20 instances.
double affine_batch_time(std::size_t n, std::size_t& delta, std::size_t& total_dim) {
  Rng rng(kSeed + n);
  std::vector<GeneratedAffine> batch;
  for (int k = 0; k < 20; ++k) {
    AffineParams params;
    params.n = n;
    params.field = Field::prime(3);
    params.max_summands = 10;
    params.max_vertex_dim = 6;
    batch.push_back(generate_affine(params, rng));
  }
  delta = 0;
  total_dim = 0;
  for (const auto& g : batch) {
    delta = std::max(delta, *std::max_element(g.rep.dims.begin(), g.rep.dims.end()));
    total_dim += g.rep.total_dim();
  }
  double total = 0;
  for (const auto& g : batch) {
    if (g.rep.is_zero()) continue;
    double best = 1e30;
    for (int rep = 0; rep < 5; ++rep) {
      auto t0 = Clock::now();
      Barcode b = barcode(lift_truncated(g.quiver, g.rep, default_window(g.quiver, g.rep)));
      HNReport h = eta_from_lift(g.quiver, g.rep);
      best = std::min(best, seconds_since(t0));
      if (b.empty() || h.steps.empty()) throw InternalError("empty result on a nonzero instance");
    }
    total += best;
  }
  return total;
}

Outcome scaling() {
  Outcome o;
  std::size_t d50 = 0, d100 = 0, s50 = 0, s100 = 0;
  double t50 = affine_batch_time(50, d50, s50);
  double t100 = affine_batch_time(100, d100, s100);
  double ratio = t100 / t50;
  char buf[200];
  std::snprintf(buf, sizeof buf, "n=50: %.4f s (max dim %zu, total %zu), n=100: %.4f s (max dim %zu, total %zu), ratio %.2f",
                t50, d50, s50, t100, d100, s100, ratio);
  o.detail = buf;
  if (d50 > 6 || d100 > 6) o.fail(std::string("vertex dimension above 6; ") + buf);
  if (ratio > 2.5) o.fail(std::string("ratio above 2.5; ") + buf);
  return o;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "six-cycle example modules and golden files", 1, example_golden);
  ok &= run_criterion(2, "fast HN equals oracle HN, length formula", 60, theorem_a_suite);
  ok &= run_criterion(3, "barcode recovery from truncations", 60, truncation_recovery);
  ok &= run_criterion(4, "wrapped-interval slope formula, all orientations n <= 5", 30, slope_formula);
  ok &= run_criterion(5, "lifted multiplicities equal construction, window robust", 120, lifted_suite);
  ok &= run_criterion(6, "eta_from_lift equals oracle HN, N multiplicities recovered", 600, theorem_b_suite);
  ok &= run_criterion(7, "indecomposables are Euler-semistable, n <= 4", 300, semistability);
  ok &= run_criterion(8, "lift + eta runtime scaling n = 50 -> 100", 300, scaling);
  return ok ? 0 : 1;
}
