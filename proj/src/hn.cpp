#include "hnzz/hn.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hnzz/error.hpp"
#include "hnzz/linalg.hpp"

namespace hnzz {

namespace {

std::size_t total(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
}

// m * sub lies in the span of target (both bases of full column rank).
bool maps_into(const Matrix& m, const Matrix& sub, const Matrix& target) {
  if (sub.cols() == 0 || target.cols() == target.rows()) return true;
  Matrix image = m * sub;
  if (image.is_zero()) return true;
  if (target.cols() == 0) return false;
  return rank(Matrix::hstack(target, image)) == target.cols();
}

bool contains(const Subrepresentation& outer, const Subrepresentation& inner) {
  for (std::size_t x = 0; x < outer.dims.size(); ++x) {
    if (inner.dims[x] > outer.dims[x]) return false;
    if (inner.dims[x] == 0 || outer.dims[x] == outer.basis[x].rows()) continue;
    if (!column_space_contains(outer.basis[x], inner.basis[x])) return false;
  }
  return true;
}

std::vector<std::size_t> difference(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[x] - b[x];
  return out;
}

}  // namespace

bool same_steps(const HNReport& a, const HNReport& b) { return a.steps == b.steps; }

void require_oracle_scale(const Representation& v, const OracleGuard& guard) {
  if (!v.field.is_prime()) throw GuardExceeded("the brute-force oracle needs a prime field, got " + v.field.name());
  const std::uint32_t p = v.field.modulus();
  if (p > guard.max_prime)
    throw GuardExceeded("the brute-force oracle allows p <= " + std::to_string(guard.max_prime) + ", got " +
                        std::to_string(p));
  const std::size_t limit = guard.max_total_dim(p);
  if (v.total_dim() > limit)
    throw GuardExceeded("total dimension " + std::to_string(v.total_dim()) + " exceeds the oracle limit " +
                        std::to_string(limit) + " for " + v.field.name());
  for (std::size_t x = 0; x < v.dims.size(); ++x)
    if (v.dims[x] > guard.max_subspace_dim)
      throw GuardExceeded("dimension " + std::to_string(v.dims[x]) + " at vertex " + std::to_string(x) +
                          " exceeds the subspace enumeration limit " + std::to_string(guard.max_subspace_dim));
}

void for_each_subrepresentation(const Representation& v, const std::function<void(const Subrepresentation&)>& visit,
                                const OracleGuard& guard, bool reverse) {
  require_valid(v);
  require_oracle_scale(v, guard);
  const std::size_t n = v.quiver.vertex_count();
  const std::uint32_t p = v.field.modulus();

  std::map<std::size_t, std::vector<Matrix>> by_dim;
  std::vector<const std::vector<Matrix>*> candidates(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, fresh] = by_dim.try_emplace(v.dims[x]);
    if (fresh) {
      it->second = enumerate_subspaces(v.dims[x], p, guard);
      if (reverse) std::reverse(it->second.begin(), it->second.end());
    }
    candidates[x] = &it->second;
  }
  // Edges checked once both endpoints are fixed, i.e. at the later one.
  std::vector<std::vector<std::size_t>> closing(n);
  for (std::size_t e = 0; e < v.quiver.edge_count(); ++e) {
    const Edge& edge = v.quiver.edge(e);
    closing[std::max(edge.src, edge.dst)].push_back(e);
  }

  Subrepresentation current{std::vector<Matrix>(n), std::vector<std::size_t>(n, 0)};
  std::function<void(std::size_t)> descend = [&](std::size_t x) {
    if (x == n) {
      visit(current);
      return;
    }
    for (const Matrix& u : *candidates[x]) {
      current.basis[x] = u;
      current.dims[x] = u.cols();
      bool ok = true;
      for (std::size_t e : closing[x]) {
        const Edge& edge = v.quiver.edge(e);
        if (!maps_into(v.mats[e], current.basis[edge.src], current.basis[edge.dst])) {
          ok = false;
          break;
        }
      }
      if (ok) descend(x + 1);
    }
  };
  descend(0);
}

std::vector<Subrepresentation> enumerate_subrepresentations(const Representation& v, const OracleGuard& guard,
                                                            bool reverse) {
  std::vector<Subrepresentation> out;
  for_each_subrepresentation(v, [&](const Subrepresentation& s) { out.push_back(s); }, guard, reverse);
  return out;
}

bool is_semistable(const Representation& v, const StabilityCondition& alpha, const OracleGuard& guard) {
  const Rational whole = slope(v, alpha);
  bool stable = true;
  for_each_subrepresentation(
      v,
      [&](const Subrepresentation& s) {
        if (stable && total(s.dims) > 0 && slope(s.dims, alpha) > whole) stable = false;
      },
      guard);
  return stable;
}

HNReport hn_bruteforce(const Representation& v, const StabilityCondition& alpha, const BruteforceOptions& options) {
  std::vector<Subrepresentation> subs = enumerate_subrepresentations(v, options.guard, options.reverse_enumeration);
  const std::size_t n = v.quiver.vertex_count();
  const std::size_t whole = v.total_dim();

  HNReport report;
  Subrepresentation prev{std::vector<Matrix>(n), std::vector<std::size_t>(n, 0)};
  for (std::size_t x = 0; x < n; ++x) prev.basis[x] = Matrix(v.field, v.dims[x], 0);

  while (total(prev.dims) < whole) {
    const Subrepresentation* best = nullptr;
    Rational best_slope;
    std::size_t best_dim = 0, ties = 0;
    for (const auto& s : subs) {
      std::size_t dim = total(s.dims);
      if (dim <= total(prev.dims) || !contains(s, prev)) continue;
      Rational q = slope(difference(s.dims, prev.dims), alpha);
      if (!best || q > best_slope || (q == best_slope && dim > best_dim)) {
        best = &s;
        best_slope = q;
        best_dim = dim;
        ties = 1;
      } else if (q == best_slope && dim == best_dim) {
        ++ties;
      }
    }
    if (!best) throw InternalError("no subrepresentation strictly contains the current HN stage");
    if (ties != 1)
      throw InternalError("maximal destabilizing subrepresentation is not unique (" + std::to_string(ties) +
                          " candidates)");
    if (!report.steps.empty() && !(best_slope < report.steps.back().slope))
      throw InternalError("HN slopes are not strictly decreasing");
    report.steps.push_back({best_slope, difference(best->dims, prev.dims)});
    report.witness.push_back(best->basis);
    prev = *best;
  }
  return report;
}

bool is_antitone(const StabilityCondition& alpha) {
  const std::size_t n = alpha.weights.size();
  std::optional<Rational> last;
  for (std::size_t u = 0; u < n; ++u) {
    Rational sum(0);
    for (std::size_t v = u; v < n; ++v) {
      sum += alpha.weights[v];
      Rational s = sum / static_cast<unsigned long>(v - u + 1);
      if (last && s > *last) return false;
      last = s;
    }
  }
  return true;
}

HNReport hn_from_barcode(const Barcode& bar, const Quiver& q) { return hn_from_barcode(bar, q, euler_stability(q)); }

HNReport hn_from_barcode(const Barcode& bar, const Quiver& q, const StabilityCondition& alpha) {
  if (!is_equioriented_path(q)) throw InvalidArgument("hn_from_barcode needs an equioriented path quiver");
  const std::size_t n = q.vertex_count();
  if (alpha.weights.size() != n) throw InvalidArgument("stability condition does not match the quiver");
  if (!is_antitone(alpha)) throw InvalidArgument("stability condition is not antitone on interval modules");

  std::map<Rational, std::vector<std::size_t>, std::greater<>> groups;
  for (const auto& [i, mult] : bar) {
    if (i.hi >= n) throw InvalidArgument("barcode interval exceeds the quiver");
    std::vector<std::size_t> dims(n, 0);
    for (std::size_t x = i.lo; x <= i.hi; ++x) dims[x] = 1;
    auto& acc = groups.try_emplace(slope(dims, alpha), n, 0).first->second;
    for (std::size_t x = i.lo; x <= i.hi; ++x) acc[x] += mult;
  }
  HNReport report;
  for (auto& [s, dims] : groups) report.steps.push_back({s, std::move(dims)});
  return report;
}

std::vector<std::size_t> hn_r_filtration_eval(const HNReport& rep, const Rational& t, std::size_t vertex_count) {
  std::vector<std::size_t> dims(vertex_count, 0);
  for (const auto& step : rep.steps) {
    if (step.slope < t) continue;
    if (step.quotient_dims.size() != vertex_count) throw InvalidArgument("HN report does not match vertex count");
    for (std::size_t x = 0; x < vertex_count; ++x) dims[x] += step.quotient_dims[x];
  }
  return dims;
}

Barcode recover_barcode_via_truncations(const Representation& v, const EulerHN& hn) {
  require_valid(v);
  if (!is_equioriented_path(v.quiver)) throw InvalidArgument("truncation recovery needs an equioriented path quiver");
  const EulerHN euler_hn = hn ? hn : [](const Representation& w) { return hn_from_barcode(barcode(w), w.quiver); };
  const std::size_t n = v.quiver.vertex_count();

  Barcode out;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> suffix(n - k);
    std::iota(suffix.begin(), suffix.end(), k);
    Representation w = restrict_to(v, suffix);
    if (w.is_zero()) continue;
    HNReport rep = euler_hn(w);
    for (std::size_t j = 0; k + j < n; ++j) {
      // The step of slope 1/(j+1) consists of copies of [0,j].
      const Rational target = make_rational(1, static_cast<long>(j + 1));
      long d = 0;
      for (const auto& step : rep.steps)
        if (step.slope == target) d = static_cast<long>(step.quotient_dims.at(0));
      for (const auto& [i, mult] : out)
        if (i.lo < k && i.hi == k + j) d -= static_cast<long>(mult);
      if (d < 0)
        throw InternalError("truncation recovery produced multiplicity " + std::to_string(d) + " for [" +
                            std::to_string(k) + "," + std::to_string(k + j) + "]");
      if (d > 0) out[Interval{k, k + j}] = static_cast<std::size_t>(d);
    }
  }
  return out;
}

HNReport hn_direct_sum_merge(const HNReport& a, const HNReport& b) {
  std::map<Rational, std::vector<std::size_t>, std::greater<>> groups;
  std::optional<std::size_t> n;
  for (const HNReport* r : {&a, &b})
    for (const auto& step : r->steps) {
      if (n && *n != step.quotient_dims.size()) throw InvalidArgument("HN reports live on different quivers");
      n = step.quotient_dims.size();
      auto& acc = groups.try_emplace(step.slope, *n, 0).first->second;
      for (std::size_t x = 0; x < *n; ++x) acc[x] += step.quotient_dims[x];
    }
  HNReport out;
  for (auto& [s, dims] : groups) out.steps.push_back({s, std::move(dims)});
  return out;
}

}  // namespace hnzz
