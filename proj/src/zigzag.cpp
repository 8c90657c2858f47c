#include "hnzz/zigzag.hpp"

#include <algorithm>

#include "hnzz/error.hpp"
#include "hnzz/linalg.hpp"

namespace hnzz {

namespace {

std::vector<PathStep> require_path(const Quiver& q) {
  auto layout = path_layout(q);
  if (!layout)
    throw InvalidArgument("quiver is not a type-A path with vertices numbered along the path");
  return *layout;
}

void require_interval(const Representation& v, Interval i) {
  if (i.lo > i.hi || i.hi >= v.quiver.vertex_count())
    throw InvalidArgument("interval [" + std::to_string(i.lo) + "," + std::to_string(i.hi) + "] outside 0.." +
                          std::to_string(v.quiver.vertex_count()) + "-1");
}

// Bars alive at the sweep position. Columns of `basis` are their current
// vectors, ordered so that a bar can absorb any bar to its left: first the
// bars born at a backward edge, latest birth first, then the bars born at
// vertex 0 or a forward edge, earliest birth first.
struct Sweep {
  struct Bar {
    std::size_t birth;
  };
  std::vector<Bar> bars;
  Matrix basis;
};

void add(Barcode& bar, std::size_t lo, std::size_t hi) { ++bar[Interval{lo, hi}]; }

}  // namespace

Representation interval_module(const Quiver& q, Interval i, const Field& field) {
  auto layout = require_path(q);
  if (i.lo > i.hi || i.hi >= q.vertex_count())
    throw InvalidArgument("interval [" + std::to_string(i.lo) + "," + std::to_string(i.hi) + "] out of range");
  Representation v{q, field, {}, std::vector<Matrix>(q.edge_count())};
  for (std::size_t x = 0; x < q.vertex_count(); ++x) v.dims.push_back(i.contains(x) ? 1 : 0);
  for (std::size_t e = 0; e < q.edge_count(); ++e) {
    const Edge& edge = q.edge(e);
    v.mats[e] = i.contains(edge.src) && i.contains(edge.dst) ? Matrix::identity(field, 1)
                                                              : Matrix(field, v.dims[edge.dst], v.dims[edge.src]);
  }
  return v;
}

std::size_t generalized_rank(const Representation& v, Interval i) {
  require_valid(v);
  auto layout = require_path(v.quiver);
  require_interval(v, i);
  const Field& field = v.field;

  std::vector<std::size_t> offset{0};
  for (std::size_t x = i.lo; x <= i.hi; ++x) offset.push_back(offset.back() + v.dims[x]);
  const std::size_t total = offset.back();
  if (total == 0) return 0;
  auto block = [&](std::size_t x) { return offset[x - i.lo]; };

  // Compatibility rows for the limit, gluing columns for the colimit.
  std::size_t compat_rows = 0, glue_cols = 0;
  for (std::size_t x = i.lo; x < i.hi; ++x) {
    const PathStep& s = layout[x];
    if (s.direction == PathDirection::forward) {
      compat_rows += v.dims[x + 1];
      glue_cols += v.dims[x];
    } else {
      compat_rows += v.dims[x];
      glue_cols += v.dims[x + 1];
    }
  }
  Matrix compat(field, compat_rows, total);
  Matrix glue(field, total, glue_cols);
  const Scalar minus_one(field, -1);
  std::size_t row = 0, col = 0;
  for (std::size_t x = i.lo; x < i.hi; ++x) {
    const PathStep& s = layout[x];
    const Matrix& m = v.mats[s.edge];
    // Forward: x_{k+1} = f x_k. Backward: x_k = g x_{k+1}.
    std::size_t from = s.direction == PathDirection::forward ? x : x + 1;
    std::size_t to = s.direction == PathDirection::forward ? x + 1 : x;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      compat.set(row + r, block(to) + r, 1);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        Scalar a = m.at(r, c);
        if (a.is_zero()) continue;
        compat.set(row + r, block(from) + c, a * minus_one);
        glue.set(block(to) + r, col + c, a);
      }
    }
    for (std::size_t c = 0; c < m.cols(); ++c) glue.set(block(from) + c, col + c, minus_one);
    row += m.rows();
    col += m.cols();
  }

  Matrix limit = compat_rows == 0 ? Matrix::identity(field, total) : kernel_basis(compat);
  if (limit.cols() == 0) return 0;
  // Map each limit vector to its component at i.lo, included into the sum.
  Matrix image(field, total, limit.cols());
  for (std::size_t r = 0; r < v.dims[i.lo]; ++r)
    for (std::size_t c = 0; c < limit.cols(); ++c) image.set(r, c, limit.at(r, c));
  if (glue_cols == 0) return rank(image);
  return rank(Matrix::hstack(glue, image)) - rank(glue);
}

Barcode barcode(const Representation& v) {
  require_valid(v);
  auto layout = require_path(v.quiver);
  const Field& field = v.field;
  const std::size_t n = v.quiver.vertex_count();
  Barcode out;
  if (n == 0) return out;

  Sweep s;
  s.basis = Matrix::identity(field, v.dims[0]);
  s.bars.assign(v.dims[0], Sweep::Bar{0});

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const PathStep& step = layout[i];
    const Matrix& m = v.mats[step.edge];
    const std::size_t next_dim = v.dims[i + 1];
    Sweep next;

    if (step.direction == PathDirection::forward) {
      // A bar dies when its image depends on the images of bars to its left.
      Matrix image = m * s.basis;
      RowEchelon e = row_reduce(image);
      std::vector<bool> survives(s.bars.size(), false);
      for (auto c : e.pivots) survives[c] = true;
      std::vector<std::size_t> kept;
      for (std::size_t k = 0; k < s.bars.size(); ++k) {
        if (survives[k]) {
          kept.push_back(k);
          next.bars.push_back(s.bars[k]);
        } else {
          add(out, s.bars[k].birth, i);
        }
      }
      // Complete the image with standard basis vectors: bars born at i+1.
      Matrix survivors = image.select_columns(kept);
      std::vector<bool> pivot_row(next_dim, false);
      RowEchelon t = row_reduce(survivors.transpose());
      for (auto c : t.pivots) pivot_row[c] = true;
      Matrix fresh(field, next_dim, next_dim - t.pivots.size());
      std::size_t k = 0;
      for (std::size_t r = 0; r < next_dim; ++r)
        if (!pivot_row[r]) {
          fresh.set(r, k++, 1);
          next.bars.push_back({i + 1});
        }
      next.basis = Matrix::hstack(survivors, fresh);
    } else {
      // A bar dies when its vector is not in the image of the backward map
      // modulo bars to its left; the others get preimages.
      Matrix aug = Matrix::hstack(m, s.basis);
      RowEchelon e = row_reduce(aug);
      const std::size_t gcols = m.cols();
      std::vector<long> pivot_row_of(aug.cols(), -1);
      for (std::size_t r = 0; r < e.pivots.size(); ++r) pivot_row_of[e.pivots[r]] = static_cast<long>(r);

      Matrix kernel = kernel_basis(m);
      std::vector<Sweep::Bar> born(kernel.cols(), Sweep::Bar{i + 1});
      next.bars = born;
      std::vector<std::size_t> surviving;
      for (std::size_t k = 0; k < s.bars.size(); ++k) {
        if (pivot_row_of[gcols + k] >= 0)
          add(out, s.bars[k].birth, i);
        else
          surviving.push_back(k);
      }
      Matrix pre(field, next_dim, surviving.size());
      for (std::size_t j = 0; j < surviving.size(); ++j) {
        std::size_t col = gcols + surviving[j];
        // Column = sum over pivot columns of (entry in that pivot's row)
        // times the pivot column; the g-part gives the preimage.
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
          std::size_t pc = e.pivots[r];
          if (pc >= gcols) break;
          Scalar a = e.reduced.at(r, col);
          if (!a.is_zero()) pre.set(pc, j, a);
        }
        next.bars.push_back(s.bars[surviving[j]]);
      }
      next.basis = Matrix::hstack(kernel, pre);
    }
    s = std::move(next);
  }
  for (const auto& b : s.bars) add(out, b.birth, n - 1);
  return out;
}

Barcode barcode_by_ranks(const Representation& v) {
  require_valid(v);
  require_path(v.quiver);
  const std::size_t n = v.quiver.vertex_count();
  // r[lo][hi], with out-of-range indices read as 0.
  std::vector<std::vector<long>> r(n, std::vector<long>(n, 0));
  for (std::size_t lo = 0; lo < n; ++lo)
    for (std::size_t hi = lo; hi < n; ++hi) r[lo][hi] = static_cast<long>(generalized_rank(v, {lo, hi}));
  auto at = [&](long lo, long hi) -> long {
    if (lo < 0 || hi >= static_cast<long>(n)) return 0;
    return r[lo][hi];
  };
  Barcode out;
  for (long lo = 0; lo < static_cast<long>(n); ++lo)
    for (long hi = lo; hi < static_cast<long>(n); ++hi) {
      long d = at(lo, hi) - at(lo - 1, hi) - at(lo, hi + 1) + at(lo - 1, hi + 1);
      if (d < 0)
        throw InternalError("negative interval multiplicity " + std::to_string(d) + " at [" + std::to_string(lo) +
                            "," + std::to_string(hi) + "]");
      if (d > 0) out[Interval{static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)}] = static_cast<std::size_t>(d);
    }
  return out;
}

std::vector<std::size_t> barcode_dims(const Barcode& bar, std::size_t vertex_count) {
  std::vector<std::size_t> dims(vertex_count, 0);
  for (const auto& [i, mult] : bar)
    for (std::size_t x = i.lo; x <= i.hi && x < vertex_count; ++x) dims[x] += mult;
  return dims;
}

}  // namespace hnzz
