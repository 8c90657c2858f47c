#include "hnzz/linalg.hpp"

#include <cstdlib>
#include <sstream>

#include "field_ops.hpp"
#include "hnzz/error.hpp"

namespace hnzz {

namespace {

// In-place Gauss-Jordan elimination on a row-major buffer. Returns the pivot
// column of each nonzero row; rows past the rank end up zero.
template <class Ops, class V>
std::vector<std::size_t> rref_in_place(V& a, std::size_t rows, std::size_t cols, const Ops& ops) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && ops.is_zero(a[piv * cols + c])) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    auto inv = ops.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = ops.mul(a[r * cols + j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || ops.is_zero(a[i * cols + c])) continue;
      auto f = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] = ops.sub_mul(a[i * cols + j], f, a[r * cols + j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class Fn>
decltype(auto) with_ops(const Field& field, Matrix::Storage& data, Fn&& fn) {
  if (field.is_rational())
    return fn(std::get<Matrix::RationalStorage>(data), detail::RationalOps{});
  return fn(std::get<Matrix::PrimeStorage>(data), detail::PrimeOps{field.modulus()});
}

// Keeps the first `k` rows.
Matrix top_rows(const Matrix& m, std::size_t k) {
  Matrix out(m.field(), k, m.cols());
  std::visit(
      [&](auto& dst) {
        using S = std::decay_t<decltype(dst)>;
        const auto& src = std::get<S>(m.storage());
        std::copy(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(k * m.cols()), dst.begin());
      },
      out.storage());
  return out;
}

}  // namespace

RowEchelon row_reduce(const Matrix& m) {
  RowEchelon result{m, {}};
  result.pivots = with_ops(m.field(), result.reduced.storage(),
                           [&](auto& data, const auto& ops) { return rref_in_place(data, m.rows(), m.cols(), ops); });
  return result;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return row_reduce(m).pivots.size();
}

Matrix column_echelon(const Matrix& m) {
  RowEchelon e = row_reduce(m.transpose());
  return top_rows(e.reduced, e.pivots.size()).transpose();
}

Matrix kernel_basis(const Matrix& m) {
  RowEchelon e = row_reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  // One row per free variable: x_f = 1, other free variables 0.
  Matrix rows(m.field(), free_cols.size(), n);
  const Scalar minus_one(m.field(), -1);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    rows.set(k, f, 1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      Scalar coeff = e.reduced.at(i, f);
      if (!coeff.is_zero()) rows.set(k, e.pivots[i], coeff * minus_one);
    }
  }
  RowEchelon canon = row_reduce(rows);
  return top_rows(canon.reduced, canon.pivots.size()).transpose();
}

bool column_space_contains(const Matrix& outer, const Matrix& inner) {
  if (inner.cols() == 0) return true;
  return rank(Matrix::hstack(outer, inner)) == rank(outer);
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw InvalidArgument("solve: row counts differ");
  RowEchelon e = row_reduce(Matrix::hstack(m, b));
  Matrix x(m.field(), m.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    std::size_t pc = e.pivots[i];
    if (pc >= m.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(pc, j, e.reduced.at(i, m.cols() + j));
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.field(), m.rows()));
}

Matrix random_invertible(std::size_t dim, const Field& field, Rng& rng) {
  for (;;) {
    Matrix m(field, dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        long v = field.is_rational() ? rng.between(-3, 3) : static_cast<long>(rng.below(field.modulus()));
        m.set(r, c, v);
      }
    if (rank(m) == dim) return m;
  }
}

Matrix random_invertible(std::size_t dim, const Field& field, std::uint64_t seed) {
  Rng rng(seed);
  return random_invertible(dim, field, rng);
}

void for_each_subspace(std::size_t dim, std::uint32_t p, const std::function<void(const Matrix&)>& visit,
                       const OracleGuard& guard) {
  if (dim > guard.max_subspace_dim || p > guard.max_prime) {
    std::ostringstream os;
    os << "subspace enumeration of GF(" << p << ")^" << dim << " exceeds guard (dim <= " << guard.max_subspace_dim
       << ", p <= " << guard.max_prime << ")";
    throw GuardExceeded(os.str());
  }
  const Field field = Field::prime(p);

  for (std::size_t k = 0; k <= dim; ++k) {
    // Pivot columns c_0 < ... < c_{k-1}, lexicographic.
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    for (;;) {
      // Free slots: row i may be nonzero at non-pivot columns right of c_i.
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      {
        std::vector<bool> is_piv(dim, false);
        for (auto c : piv) is_piv[c] = true;
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t c = piv[i] + 1; c < dim; ++c)
            if (!is_piv[c]) slots.emplace_back(i, c);
      }
      std::vector<std::uint32_t> digits(slots.size(), 0);
      for (;;) {
        Matrix rows(field, k, dim);
        for (std::size_t i = 0; i < k; ++i) rows.set(i, piv[i], 1);
        for (std::size_t s = 0; s < slots.size(); ++s)
          if (digits[s]) rows.set(slots[s].first, slots[s].second, Scalar::from_residue(field, digits[s]));
        visit(rows.transpose());

        std::size_t s = 0;
        while (s < digits.size() && ++digits[s] == p) digits[s++] = 0;
        if (s == digits.size()) break;
      }

      // Next pivot combination.
      std::size_t i = k;
      while (i > 0 && piv[i - 1] == dim - k + (i - 1)) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
}

std::vector<Matrix> enumerate_subspaces(std::size_t dim, std::uint32_t p, const OracleGuard& guard) {
  std::vector<Matrix> out;
  for_each_subspace(dim, p, [&](const Matrix& m) { out.push_back(m); }, guard);
  return out;
}

OracleGuard OracleGuard::parse_override(const std::string& spec) { return parse_override(spec, OracleGuard{}); }

OracleGuard OracleGuard::parse_override(const std::string& spec, OracleGuard base) {
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("guard override entry '" + item + "' lacks '='");
    std::string key = item.substr(0, eq);
    unsigned long value = 0;
    try {
      value = std::stoul(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw InvalidArgument("guard override value in '" + item + "' is not a number");
    }
    if (key == "subspace_dim")
      base.max_subspace_dim = value;
    else if (key == "prime")
      base.max_prime = static_cast<std::uint32_t>(value);
    else if (key == "total_dim")
      base.max_total_dim_gf2 = base.max_total_dim_odd = value;
    else if (key == "total_dim_gf2")
      base.max_total_dim_gf2 = value;
    else if (key == "total_dim_odd")
      base.max_total_dim_odd = value;
    else
      throw InvalidArgument("unknown guard override key '" + key + "'");
  }
  return base;
}

OracleGuard OracleGuard::from_environment() {
  const char* env = std::getenv("HNZZ_GUARD_OVERRIDE");
  if (!env || !*env) return {};
  return parse_override(env);
}

}  // namespace hnzz
