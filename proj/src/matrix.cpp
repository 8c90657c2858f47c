#include "hnzz/matrix.hpp"

#include <sstream>

#include "field_ops.hpp"
#include "hnzz/error.hpp"

namespace hnzz {

namespace {

Matrix::Storage make_storage(const Field& field, std::size_t n) {
  if (field.is_rational()) return Matrix::RationalStorage(n, Rational(0));
  return Matrix::PrimeStorage(n, 0);
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(make_storage(field, rows * cols)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  std::size_t c = rows.empty() ? cols : rows.front().size();
  if (c == 0) c = cols;
  Matrix m(field, rows.size(), c);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw InvalidArgument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.set(r, j, rows[r][j]);
  }
  return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long>>& rows, std::size_t cols) {
  std::size_t c = rows.empty() ? cols : rows.front().size();
  if (c == 0) c = cols;
  Matrix m(field, rows.size(), c);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw InvalidArgument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.set(r, j, rows[r][j]);
  }
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw InvalidArgument("matrix index out of range");
  std::size_t k = r * cols_ + c;
  if (auto* q = std::get_if<RationalStorage>(&data_)) return Scalar(field_, (*q)[k]);
  return Scalar::from_residue(field_, std::get<PrimeStorage>(data_)[k]);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (r >= rows_ || c >= cols_) throw InvalidArgument("matrix index out of range");
  if (value.field() != field_)
    throw InvalidArgument("cannot store a " + value.field().name() + " scalar in a " + field_.name() + " matrix");
  std::size_t k = r * cols_ + c;
  if (auto* q = std::get_if<RationalStorage>(&data_))
    (*q)[k] = value.to_rational();
  else
    std::get<PrimeStorage>(data_)[k] = value.residue();
}

void Matrix::set(std::size_t r, std::size_t c, long value) { set(r, c, Scalar(field_, value)); }

bool Matrix::is_zero() const {
  return std::visit(
      [](const auto& v) {
        for (const auto& x : v)
          if (x != 0) return false;
        return true;
      },
      data_);
}

bool Matrix::is_identity() const {
  return rows_ == cols_ && *this == identity(field_, rows_);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  std::visit(
      [&](const auto& src) {
        using S = std::decay_t<decltype(src)>;
        auto& dst = std::get<S>(t.data_);
        for (std::size_t r = 0; r < rows_; ++r)
          for (std::size_t c = 0; c < cols_; ++c) dst[c * rows_ + r] = src[r * cols_ + c];
      },
      data_);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> indices) const {
  Matrix out(field_, rows_, indices.size());
  std::visit(
      [&](const auto& src) {
        using S = std::decay_t<decltype(src)>;
        auto& dst = std::get<S>(out.data_);
        for (std::size_t j = 0; j < indices.size(); ++j) {
          if (indices[j] >= cols_) throw InvalidArgument("column index out of range");
          for (std::size_t r = 0; r < rows_; ++r) dst[r * indices.size() + j] = src[r * cols_ + indices[j]];
        }
      },
      data_);
  return out;
}

Matrix Matrix::column(std::size_t c) const {
  std::size_t idx[] = {c};
  return select_columns(idx);
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  a.require_same_field(b, "hstack");
  if (a.rows_ != b.rows_) throw InvalidArgument("hstack: row counts differ");
  Matrix out(a.field_, a.rows_, a.cols_ + b.cols_);
  std::visit(
      [&](auto& dst) {
        using S = std::decay_t<decltype(dst)>;
        const auto& x = std::get<S>(a.data_);
        const auto& y = std::get<S>(b.data_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
          for (std::size_t c = 0; c < a.cols_; ++c) dst[r * out.cols_ + c] = x[r * a.cols_ + c];
          for (std::size_t c = 0; c < b.cols_; ++c) dst[r * out.cols_ + a.cols_ + c] = y[r * b.cols_ + c];
        }
      },
      out.data_);
  return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  a.require_same_field(b, "vstack");
  if (a.cols_ != b.cols_) throw InvalidArgument("vstack: column counts differ");
  Matrix out(a.field_, a.rows_ + b.rows_, a.cols_);
  std::visit(
      [&](auto& dst) {
        using S = std::decay_t<decltype(dst)>;
        const auto& x = std::get<S>(a.data_);
        const auto& y = std::get<S>(b.data_);
        std::copy(x.begin(), x.end(), dst.begin());
        std::copy(y.begin(), y.end(), dst.begin() + static_cast<std::ptrdiff_t>(x.size()));
      },
      out.data_);
  return out;
}

Matrix Matrix::block_diagonal(const Matrix& a, const Matrix& b) {
  a.require_same_field(b, "block_diagonal");
  Matrix out(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  std::visit(
      [&](auto& dst) {
        using S = std::decay_t<decltype(dst)>;
        const auto& x = std::get<S>(a.data_);
        const auto& y = std::get<S>(b.data_);
        for (std::size_t r = 0; r < a.rows_; ++r)
          for (std::size_t c = 0; c < a.cols_; ++c) dst[r * out.cols_ + c] = x[r * a.cols_ + c];
        for (std::size_t r = 0; r < b.rows_; ++r)
          for (std::size_t c = 0; c < b.cols_; ++c)
            dst[(a.rows_ + r) * out.cols_ + a.cols_ + c] = y[r * b.cols_ + c];
      },
      out.data_);
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(o, "multiply");
  if (cols_ != o.rows_) throw InvalidArgument("multiply: inner dimensions differ");
  Matrix out(field_, rows_, o.cols_);
  if (field_.is_rational()) {
    const auto& x = std::get<RationalStorage>(data_);
    const auto& y = std::get<RationalStorage>(o.data_);
    auto& z = std::get<RationalStorage>(out.data_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& a = x[i * cols_ + k];
        if (sgn(a) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) z[i * o.cols_ + j] += a * y[k * o.cols_ + j];
      }
  } else {
    const std::uint64_t p = field_.modulus();
    const auto& x = std::get<PrimeStorage>(data_);
    const auto& y = std::get<PrimeStorage>(o.data_);
    auto& z = std::get<PrimeStorage>(out.data_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint64_t a = x[i * cols_ + k];
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          auto& cell = z[i * o.cols_ + j];
          cell = static_cast<std::uint32_t>((cell + a * y[k * o.cols_ + j]) % p);
        }
      }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(o, "add");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("add: shapes differ");
  Matrix out = *this;
  if (field_.is_rational()) {
    auto& z = std::get<RationalStorage>(out.data_);
    const auto& y = std::get<RationalStorage>(o.data_);
    for (std::size_t k = 0; k < z.size(); ++k) z[k] += y[k];
  } else {
    detail::PrimeOps ops{field_.modulus()};
    auto& z = std::get<PrimeStorage>(out.data_);
    const auto& y = std::get<PrimeStorage>(o.data_);
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = ops.add(z[k], y[k]);
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(Scalar(field_, -1)); }

Matrix Matrix::scaled(const Scalar& s) const {
  if (s.field() != field_) throw InvalidArgument("scaled: field mismatch");
  Matrix out = *this;
  if (field_.is_rational()) {
    Rational q = s.to_rational();
    for (auto& x : std::get<RationalStorage>(out.data_)) x *= q;
  } else {
    detail::PrimeOps ops{field_.modulus()};
    std::uint32_t r = s.residue();
    for (auto& x : std::get<PrimeStorage>(out.data_)) x = ops.mul(x, r);
  }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

void Matrix::require_same_field(const Matrix& o, const char* op) const {
  if (field_ != o.field_)
    throw InvalidArgument(std::string(op) + ": field mismatch (" + field_.name() + " vs " + o.field_.name() + ")");
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).to_string();
  }
  os << ']';
  return os.str();
}

}  // namespace hnzz
