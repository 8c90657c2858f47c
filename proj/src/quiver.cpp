#include "hnzz/quiver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "hnzz/error.hpp"
#include "hnzz/linalg.hpp"

namespace hnzz {

Quiver::Quiver(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].src >= vertex_count_ || edges_[e].dst >= vertex_count_)
      throw InvalidArgument("edge " + std::to_string(e) + " has an endpoint outside 0.." +
                            std::to_string(vertex_count_ == 0 ? 0 : vertex_count_ - 1));
}

Quiver Quiver::equioriented(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Quiver(n, std::move(edges));
}

std::size_t Quiver::in_degree(std::size_t x) const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [x](const Edge& e) { return e.dst == x; }));
}

std::optional<std::vector<std::size_t>> Quiver::topological_order() const {
  std::vector<std::size_t> indeg(vertex_count_, 0);
  for (const auto& e : edges_) ++indeg[e.dst];
  std::deque<std::size_t> ready;
  for (std::size_t x = 0; x < vertex_count_; ++x)
    if (indeg[x] == 0) ready.push_back(x);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t x = ready.front();
    ready.pop_front();
    order.push_back(x);
    for (const auto& e : edges_)
      if (e.src == x && --indeg[e.dst] == 0) ready.push_back(e.dst);
  }
  if (order.size() != vertex_count_) return std::nullopt;
  return order;
}

bool is_acyclic(const Quiver& q) { return q.topological_order().has_value(); }

std::optional<std::vector<PathStep>> path_layout(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  if (n == 0) return q.edge_count() == 0 ? std::optional<std::vector<PathStep>>(std::vector<PathStep>{}) : std::nullopt;
  if (q.edge_count() != n - 1) return std::nullopt;
  std::vector<std::optional<PathStep>> steps(n - 1);
  for (std::size_t e = 0; e < q.edge_count(); ++e) {
    const Edge& edge = q.edge(e);
    std::size_t lo = std::min(edge.src, edge.dst), hi = std::max(edge.src, edge.dst);
    if (hi != lo + 1 || steps[lo]) return std::nullopt;
    steps[lo] = PathStep{e, edge.src == lo ? PathDirection::forward : PathDirection::backward};
  }
  std::vector<PathStep> out;
  for (auto& s : steps) out.push_back(*s);
  return out;
}

bool is_equioriented_path(const Quiver& q) {
  auto layout = path_layout(q);
  return layout && std::all_of(layout->begin(), layout->end(),
                               [](const PathStep& s) { return s.direction == PathDirection::forward; });
}

Quiver path_quiver(std::span<const PathDirection> directions) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < directions.size(); ++i)
    edges.push_back(directions[i] == PathDirection::forward ? Edge{i, i + 1} : Edge{i + 1, i});
  return Quiver(directions.size() + 1, std::move(edges));
}

Representation Representation::zero(const Quiver& q, const Field& field) {
  Representation v{q, field, std::vector<std::size_t>(q.vertex_count(), 0), {}};
  for (std::size_t e = 0; e < q.edge_count(); ++e) v.mats.emplace_back(field, 0, 0);
  return v;
}

std::size_t Representation::total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

std::vector<Violation> validate(const Representation& v) {
  std::vector<Violation> out;
  const Quiver& q = v.quiver;
  if (v.dims.size() != q.vertex_count())
    out.push_back({Violation::Kind::count, "dimension vector has " + std::to_string(v.dims.size()) +
                                               " entries for " + std::to_string(q.vertex_count()) + " vertices"});
  if (v.mats.size() != q.edge_count())
    out.push_back({Violation::Kind::count, std::to_string(v.mats.size()) + " matrices for " +
                                               std::to_string(q.edge_count()) + " edges"});
  if (!out.empty()) return out;

  for (std::size_t e = 0; e < q.edge_count(); ++e) {
    const Matrix& m = v.mats[e];
    const Edge& edge = q.edge(e);
    if (m.field() != v.field)
      out.push_back({Violation::Kind::field,
                     "edge " + std::to_string(e) + ": matrix over " + m.field().name() + ", representation over " +
                         v.field.name()});
    if (m.rows() != v.dims[edge.dst] || m.cols() != v.dims[edge.src])
      out.push_back({Violation::Kind::shape, "edge " + std::to_string(e) + " (" + std::to_string(edge.src) + "->" +
                                                 std::to_string(edge.dst) + "): matrix is " +
                                                 std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                                 ", expected " + std::to_string(v.dims[edge.dst]) + "x" +
                                                 std::to_string(v.dims[edge.src])});
  }
  return out;
}

void require_valid(const Representation& v) {
  auto violations = validate(v);
  if (!violations.empty()) throw InvalidArgument("invalid representation: " + violations.front().message);
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.quiver != b.quiver) throw InvalidArgument("direct_sum: quivers differ");
  if (a.field != b.field) throw InvalidArgument("direct_sum: fields differ");
  require_valid(a);
  require_valid(b);
  Representation out{a.quiver, a.field, {}, {}};
  for (std::size_t x = 0; x < a.dims.size(); ++x) out.dims.push_back(a.dims[x] + b.dims[x]);
  for (std::size_t e = 0; e < a.mats.size(); ++e) out.mats.push_back(Matrix::block_diagonal(a.mats[e], b.mats[e]));
  return out;
}

Representation conjugate(const Representation& v, std::span<const Matrix> basis) {
  require_valid(v);
  if (basis.size() != v.dims.size()) throw InvalidArgument("conjugate: one basis matrix per vertex required");
  std::vector<Matrix> inv;
  for (std::size_t x = 0; x < basis.size(); ++x) {
    if (basis[x].rows() != v.dims[x] || basis[x].cols() != v.dims[x] || basis[x].field() != v.field)
      throw InvalidArgument("conjugate: basis at vertex " + std::to_string(x) + " has the wrong shape or field");
    auto i = inverse(basis[x]);
    if (!i) throw InvalidArgument("conjugate: basis at vertex " + std::to_string(x) + " is not invertible");
    inv.push_back(std::move(*i));
  }
  Representation out = v;
  for (std::size_t e = 0; e < v.mats.size(); ++e) {
    const Edge& edge = v.quiver.edge(e);
    out.mats[e] = basis[edge.dst] * v.mats[e] * inv[edge.src];
  }
  return out;
}

Representation restrict_to(const Representation& v, std::span<const std::size_t> vertices) {
  require_valid(v);
  const std::size_t n = v.quiver.vertex_count();
  std::vector<std::size_t> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<long> new_index(n, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= n) throw InvalidArgument("restrict_to: vertex " + std::to_string(keep[i]) + " out of range");
    new_index[keep[i]] = static_cast<long>(i);
  }
  std::vector<Edge> edges;
  std::vector<Matrix> mats;
  for (std::size_t e = 0; e < v.quiver.edge_count(); ++e) {
    const Edge& edge = v.quiver.edge(e);
    if (new_index[edge.src] < 0 || new_index[edge.dst] < 0) continue;
    edges.push_back({static_cast<std::size_t>(new_index[edge.src]), static_cast<std::size_t>(new_index[edge.dst])});
    mats.push_back(v.mats[e]);
  }
  Representation out{Quiver(keep.size(), std::move(edges)), v.field, {}, std::move(mats)};
  for (auto x : keep) out.dims.push_back(v.dims[x]);
  return out;
}

Rational slope(std::span<const std::size_t> dims, const StabilityCondition& alpha) {
  if (alpha.weights.size() != dims.size())
    throw InvalidArgument("slope: stability condition has " + std::to_string(alpha.weights.size()) +
                          " weights for " + std::to_string(dims.size()) + " vertices");
  Rational num(0);
  unsigned long den = 0;
  for (std::size_t x = 0; x < dims.size(); ++x) {
    num += alpha.weights[x] * static_cast<unsigned long>(dims[x]);
    den += dims[x];
  }
  if (den == 0) throw InvalidArgument("slope is undefined on the zero representation");
  return Rational(num / den);
}

Rational slope(const Representation& v, const StabilityCondition& alpha) { return slope(v.dims, alpha); }

StabilityCondition euler_stability(const Quiver& q) {
  if (!is_acyclic(q)) throw InvalidArgument("euler_stability requires an acyclic quiver");
  StabilityCondition s;
  for (std::size_t x = 0; x < q.vertex_count(); ++x) s.weights.emplace_back(1 - static_cast<long>(q.in_degree(x)));
  return s;
}

long sheaf_euler_characteristic(const Representation& v) {
  long chi = 0;
  for (std::size_t x = 0; x < v.dims.size(); ++x)
    chi += (1 - static_cast<long>(v.quiver.in_degree(x))) * static_cast<long>(v.dims[x]);
  return chi;
}

}  // namespace hnzz
