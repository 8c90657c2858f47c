#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hnzz/field.hpp"
#include "hnzz/matrix.hpp"

namespace hnzz {

struct Edge {
  std::size_t src;
  std::size_t dst;
  bool operator==(const Edge&) const = default;
};

/// Finite directed multigraph on vertices 0..vertex_count-1. Edge indices
/// are positions in the edge list, so parallel edges are distinct.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::size_t vertex_count, std::vector<Edge> edges);

  /// x_0 -> x_1 -> ... -> x_{n-1}
  static Quiver equioriented(std::size_t n);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  std::size_t in_degree(std::size_t x) const;

  /// Kahn ordering; nullopt when a directed cycle exists.
  std::optional<std::vector<std::size_t>> topological_order() const;

  bool operator==(const Quiver&) const = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

bool is_acyclic(const Quiver& q);

enum class PathDirection { forward, backward };  // forward: i -> i+1

/// The edge joining vertices i and i+1 of a type-A quiver.
struct PathStep {
  std::size_t edge;
  PathDirection direction;
};

/// For a quiver whose underlying graph is the path 0 - 1 - ... - (n-1) with
/// vertices numbered along the path, the step joining i and i+1 for each i.
/// nullopt for any other quiver.
std::optional<std::vector<PathStep>> path_layout(const Quiver& q);

bool is_equioriented_path(const Quiver& q);

/// Path quiver with edge i joining vertices i and i+1 in the given direction.
Quiver path_quiver(std::span<const PathDirection> directions);

/// A representation: one space K^dims[x] per vertex and one matrix per edge,
/// with mats[e] of shape dims[dst(e)] x dims[src(e)].
struct Representation {
  Quiver quiver;
  Field field = Field::rational();
  std::vector<std::size_t> dims;
  std::vector<Matrix> mats;

  static Representation zero(const Quiver& q, const Field& field);

  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  bool operator==(const Representation&) const = default;
};

struct Violation {
  enum class Kind { count, shape, field };
  Kind kind;
  std::string message;
};

/// Empty iff every shape and field invariant holds.
std::vector<Violation> validate(const Representation& v);

/// Throws InvalidArgument listing the first violation, if any.
void require_valid(const Representation& v);

/// Vertexwise sum; edge matrices are block diagonal with `a` first.
Representation direct_sum(const Representation& a, const Representation& b);

/// Edge e becomes basis[dst] * mats[e] * basis[src]^{-1}.
Representation conjugate(const Representation& v, std::span<const Matrix> basis);

/// Induced subrepresentation on a vertex subset. Vertices are renumbered in
/// increasing order; edges with both ends inside are kept in their order.
Representation restrict_to(const Representation& v, std::span<const std::size_t> vertices);

struct StabilityCondition {
  std::vector<Rational> weights;
};

/// sum_x alpha_x dim V_x / sum_x dim V_x. Throws on the zero representation.
Rational slope(std::span<const std::size_t> dims, const StabilityCondition& alpha);
Rational slope(const Representation& v, const StabilityCondition& alpha);

/// Weight 1 - in_degree(x) at each vertex. Throws on cyclic quivers.
StabilityCondition euler_stability(const Quiver& q);

/// sum_x (1 - in_degree(x)) dim V_x: the Euler characteristic of the
/// cellular sheaf attached to v on the quiver's underlying graph.
long sheaf_euler_characteristic(const Representation& v);

}  // namespace hnzz
