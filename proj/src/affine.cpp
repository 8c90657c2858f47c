#include "hnzz/affine.hpp"

#include <algorithm>

#include "hnzz/error.hpp"

namespace hnzz {

namespace {

void require_start(const AffineQuiver& aq, std::size_t u, std::size_t v) {
  if (u >= aq.n) throw InvalidArgument("N[u,v] needs 0 <= u < n, got u = " + std::to_string(u));
  if (v < u) throw InvalidArgument("N[u,v] needs v >= u");
}

bool same_quiver(const AffineQuiver& aq, const Representation& v) {
  return v.quiver == to_quiver(aq);
}

// Shift pattern: rows x cols with ones at (k + row_offset, k + col_offset).
Matrix shifted_identity(const Field& field, std::size_t rows, std::size_t cols, std::size_t count,
                        std::size_t row_offset, std::size_t col_offset) {
  Matrix m(field, rows, cols);
  for (std::size_t k = 0; k < count; ++k) m.set(k + row_offset, k + col_offset, 1);
  return m;
}

}  // namespace

AffineQuiver::AffineQuiver(std::size_t n_, std::vector<Orientation> orientation_)
    : n(n_), orientation(std::move(orientation_)) {
  if (n < 2) throw InvalidArgument("affine quiver needs n >= 2");
  if (orientation.size() != n)
    throw InvalidArgument("orientation has " + std::to_string(orientation.size()) + " entries for n = " +
                          std::to_string(n));
  bool all_cw = std::all_of(orientation.begin(), orientation.end(), [](Orientation o) { return o == Orientation::cw; });
  bool all_ccw =
      std::all_of(orientation.begin(), orientation.end(), [](Orientation o) { return o == Orientation::ccw; });
  if (all_cw || all_ccw) throw InvalidArgument("affine orientation is a directed cycle");
}

Edge AffineQuiver::edge(std::size_t i) const {
  std::size_t a = (i + n - 1) % n, b = i % n;
  return orientation[i % n] == Orientation::cw ? Edge{a, b} : Edge{b, a};
}

Quiver to_quiver(const AffineQuiver& aq) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < aq.n; ++i) edges.push_back(aq.edge(i));
  return Quiver(aq.n, std::move(edges));
}

std::vector<std::size_t> dimvec_N(const AffineQuiver& aq, std::size_t u, std::size_t v) {
  require_start(aq, u, v);
  const std::size_t n = aq.n, l = (v - u) / n, r = (v - u) % n + 1;
  std::vector<std::size_t> dims(n);
  for (std::size_t x = 0; x < n; ++x) dims[x] = (x + n - u) % n < r ? l + 1 : l;
  return dims;
}

Representation indec_N(const AffineQuiver& aq, std::size_t u, std::size_t v, const Field& field) {
  const std::size_t n = aq.n, l = (v - u) / n, r = (v - u) % n + 1;
  Representation rep{to_quiver(aq), field, dimvec_N(aq, u, v), {}};
  const std::size_t end = (v + 1) % n;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t a = (j + n - 1) % n;
    // Matrix for the clockwise direction x_{j-1} -> x_j.
    Matrix cw;
    if (j == u && r == n)
      cw = shifted_identity(field, l + 1, l + 1, l, 1, 0);
    else if (j == u)
      cw = shifted_identity(field, l + 1, l, l, 1, 0);
    else if (j == end)
      cw = shifted_identity(field, l, l + 1, l, 0, 0);
    else
      cw = Matrix::identity(field, rep.dims[a]);
    rep.mats.push_back(aq.orientation[j] == Orientation::cw ? cw : cw.transpose());
  }
  return rep;
}

Representation indec_T(const AffineQuiver& aq, const Scalar& lambda, std::size_t w) {
  if (lambda.is_zero()) throw InvalidArgument("T[lambda;w] needs lambda != 0");
  if (w == 0) throw InvalidArgument("T[lambda;w] needs w >= 1");
  const Field& field = lambda.field();
  Representation rep{to_quiver(aq), field, std::vector<std::size_t>(aq.n, w), {}};
  Matrix jordan(field, w, w);
  for (std::size_t k = 0; k < w; ++k) {
    jordan.set(k, k, lambda);
    if (k + 1 < w) jordan.set(k, k + 1, 1);
  }
  rep.mats.push_back(jordan);
  for (std::size_t j = 1; j < aq.n; ++j) rep.mats.push_back(Matrix::identity(field, w));
  return rep;
}

int p_value(const AffineQuiver& aq, std::size_t u, std::size_t v) {
  const std::size_t n = aq.n;
  int p = 0;
  if (aq.orientation[u % n] == Orientation::cw) ++p;
  if (aq.orientation[(v + 1) % n] == Orientation::ccw) ++p;
  return p;
}

Rational euler_slope_N(const AffineQuiver& aq, std::size_t u, std::size_t v) {
  require_start(aq, u, v);
  return make_rational(1 - p_value(aq, u, v), static_cast<long>(v - u + 1));
}

void require_window(const AffineQuiver& aq, const LiftWindow& w) {
  if (w.D % aq.n != 0 || w.D < 2 * aq.n)
    throw InvalidArgument("lift window D = " + std::to_string(w.D) + " must be a multiple of n = " +
                          std::to_string(aq.n) + " and at least 2n");
}

LiftWindow default_window(const AffineQuiver& aq, const Representation& v) {
  if (v.dims.size() != aq.n) throw InvalidArgument("representation does not live on this affine quiver");
  return LiftWindow{(v.dims[0] + 2) * aq.n};
}

Representation lift_truncated(const AffineQuiver& aq, const Representation& v, const LiftWindow& w) {
  require_valid(v);
  if (!same_quiver(aq, v)) throw InvalidArgument("representation does not live on this affine quiver");
  require_window(aq, w);
  const std::size_t n = aq.n;
  std::vector<PathDirection> directions;
  for (std::size_t i = 1; i <= w.D; ++i)
    directions.push_back(aq.orientation[i % n] == Orientation::cw ? PathDirection::forward : PathDirection::backward);
  Representation lift{path_quiver(directions), v.field, {}, {}};
  for (std::size_t i = 0; i <= w.D; ++i) lift.dims.push_back(v.dims[i % n]);
  for (std::size_t i = 1; i <= w.D; ++i) lift.mats.push_back(v.mats[i % n]);
  return lift;
}

namespace {

LiftedMultiplicities read_lift(const AffineQuiver& aq, const Representation& v, const LiftWindow& w, bool user_window) {
  const std::size_t n = aq.n;
  LiftedMultiplicities out;
  out.window = w;
  out.barcode = barcode(lift_truncated(aq, v, w));
  for (const auto& [i, mult] : out.barcode) {
    if (i.lo == 0 && i.hi == w.D) {
      out.d_inf = mult;
      continue;
    }
    if (i.lo < 1 || i.lo > n) continue;
    if (i.hi == w.D) {
      const std::string msg = "bar [" + std::to_string(i.lo) + "," + std::to_string(i.hi) +
                              "] reaches the window end; D = " + std::to_string(w.D) +
                              " is too short for its wrapped interval";
      // The default window always fits; reaching its end means a bug.
      if (user_window) throw InvalidArgument(msg);
      throw InternalError(msg);
    }
    out.classes[NClass{i.lo % n, i.hi - i.lo}] += mult;
  }
  return out;
}

}  // namespace

LiftedMultiplicities lifted_multiplicities(const AffineQuiver& aq, const Representation& v) {
  return read_lift(aq, v, default_window(aq, v), false);
}

LiftedMultiplicities lifted_multiplicities(const AffineQuiver& aq, const Representation& v, const LiftWindow& w) {
  return read_lift(aq, v, w, true);
}

HNReport eta_from_lifted(const AffineQuiver& aq, const LiftedMultiplicities& m) {
  const std::size_t n = aq.n;
  std::map<Rational, std::vector<std::size_t>, std::greater<>> groups;
  for (const auto& [c, mult] : m.classes) {
    auto dims = dimvec_N(aq, c.u, c.u + c.len);
    auto& acc = groups.try_emplace(euler_slope_N(aq, c.u, c.u + c.len), n, 0).first->second;
    for (std::size_t x = 0; x < n; ++x) acc[x] += mult * dims[x];
  }
  if (m.d_inf > 0) {
    auto& acc = groups.try_emplace(Rational(0), n, 0).first->second;
    for (auto& d : acc) d += m.d_inf;
  }
  HNReport report;
  for (auto& [s, dims] : groups) report.steps.push_back({s, std::move(dims)});
  return report;
}

HNReport eta_from_lift(const AffineQuiver& aq, const Representation& v) {
  if (v.is_zero()) throw InvalidArgument("the HN filtration of the zero representation is empty");
  return eta_from_lifted(aq, lifted_multiplicities(aq, v));
}

std::size_t recover_N_multiplicities(const AffineQuiver& aq, const HNReport& rep, std::size_t u, std::size_t v) {
  require_start(aq, u, v);
  if (p_value(aq, u, v) == 1)
    throw InvalidArgument("N[" + std::to_string(u) + "," + std::to_string(v) +
                          "] has slope 0; its multiplicity cannot be read off the HN quotients");
  const Rational s = euler_slope_N(aq, u, v);
  const std::size_t n = aq.n;
  for (const auto& step : rep.steps) {
    if (step.slope != s) continue;
    if (step.quotient_dims.size() != n) throw InvalidArgument("HN report does not match the affine quiver");
    long d = static_cast<long>(step.quotient_dims[u]) - static_cast<long>(step.quotient_dims[(u + n - 1) % n]);
    if (d < 0) throw InternalError("negative recovered multiplicity for N[" + std::to_string(u) + "," +
                                   std::to_string(v) + "]");
    return static_cast<std::size_t>(d);
  }
  return 0;
}

}  // namespace hnzz
