#include "hnzz/generate.hpp"

#include "hnzz/error.hpp"
#include "hnzz/linalg.hpp"

namespace hnzz {

namespace {

bool fits(const std::vector<std::size_t>& current, const std::vector<std::size_t>& extra, std::size_t max_total,
          std::size_t max_vertex) {
  std::size_t total = 0;
  for (std::size_t x = 0; x < current.size(); ++x) {
    std::size_t d = current[x] + extra[x];
    if (max_vertex && d > max_vertex) return false;
    total += d;
  }
  return !max_total || total <= max_total;
}

Representation conjugate_randomly(const Representation& v, Rng& rng) {
  std::vector<Matrix> basis;
  for (auto d : v.dims) basis.push_back(random_invertible(d, v.field, rng));
  return conjugate(v, basis);
}

Scalar random_nonzero(const Field& field, Rng& rng) {
  if (field.is_rational()) {
    long k = rng.between(1, 3);
    return Scalar(field, rng.chance(1, 2) ? k : -k);
  }
  return Scalar::from_residue(field, static_cast<std::uint32_t>(1 + rng.below(field.modulus() - 1)));
}

}  // namespace

GeneratedPersistence generate_persistence(const PersistenceParams& params, Rng& rng) {
  if (params.n == 0) throw InvalidArgument("persistence generator needs n >= 1");
  std::vector<PathDirection> directions;
  for (std::size_t i = 0; i + 1 < params.n; ++i)
    directions.push_back(params.zigzag && rng.chance(1, 2) ? PathDirection::backward : PathDirection::forward);
  const Quiver q = path_quiver(directions);

  GeneratedPersistence out{Representation::zero(q, params.field), {}};
  const std::size_t count = params.max_summands == 0 ? 0 : rng.between(1, static_cast<long>(params.max_summands));
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t lo = rng.below(params.n);
    std::size_t hi = lo + rng.below(params.n - lo);
    Representation summand = interval_module(q, {lo, hi}, params.field);
    if (!fits(out.rep.dims, summand.dims, params.max_total_dim, params.max_vertex_dim)) continue;
    out.rep = direct_sum(out.rep, summand);
    ++out.truth[Interval{lo, hi}];
  }
  out.rep = conjugate_randomly(out.rep, rng);
  return out;
}

std::size_t AffineTruth::d_inf() const {
  std::size_t d = 0;
  for (const auto& t : tubes) d += t.w;
  return d;
}

AffineQuiver random_affine_quiver(std::size_t n, Rng& rng) {
  if (n < 2) throw InvalidArgument("affine quiver needs n >= 2");
  for (;;) {
    std::vector<Orientation> o;
    for (std::size_t i = 0; i < n; ++i) o.push_back(rng.chance(1, 2) ? Orientation::ccw : Orientation::cw);
    bool cyclic = true;
    for (auto x : o) cyclic = cyclic && x == o.front();
    if (!cyclic) return AffineQuiver(n, std::move(o));
  }
}

GeneratedAffine generate_affine(const AffineParams& params, Rng& rng) {
  AffineQuiver aq = params.quiver ? *params.quiver : random_affine_quiver(params.n, rng);
  if (params.quiver && params.quiver->n != params.n) throw InvalidArgument("affine generator: n does not match quiver");
  const std::size_t n = aq.n;
  GeneratedAffine out{aq, Representation::zero(to_quiver(aq), params.field), {}};
  const std::size_t count = params.max_summands == 0 ? 0 : rng.between(1, static_cast<long>(params.max_summands));
  for (std::size_t k = 0; k < count; ++k) {
    if (rng.chance(2, 3)) {
      std::size_t u = rng.below(n);
      std::size_t len = rng.below(3 * n);
      Representation summand = indec_N(aq, u, u + len, params.field);
      if (!fits(out.rep.dims, summand.dims, params.max_total_dim, params.max_vertex_dim)) continue;
      out.rep = direct_sum(out.rep, summand);
      ++out.truth.classes[NClass{u, len}];
    } else {
      std::size_t w = rng.between(1, 2);
      Scalar lambda = random_nonzero(params.field, rng);
      Representation summand = indec_T(aq, lambda, w);
      if (!fits(out.rep.dims, summand.dims, params.max_total_dim, params.max_vertex_dim)) continue;
      out.rep = direct_sum(out.rep, summand);
      out.truth.tubes.push_back({lambda, w});
    }
  }
  out.rep = conjugate_randomly(out.rep, rng);
  return out;
}

}  // namespace hnzz
