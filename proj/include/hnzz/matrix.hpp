#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hnzz/field.hpp"

namespace hnzz {

/// Dense row-major matrix over a single field. Entries are stored unboxed:
/// rationals as mpq values, prime-field entries as residues.
class Matrix {
 public:
  using RationalStorage = std::vector<Rational>;
  using PrimeStorage = std::vector<std::uint32_t>;
  using Storage = std::variant<RationalStorage, PrimeStorage>;

  Matrix() : Matrix(Field::rational(), 0, 0) {}
  /// Zero matrix.
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, const std::vector<std::vector<Scalar>>& rows, std::size_t cols = 0);
  /// Integer entries, reduced into the field. `cols` is only consulted when
  /// `rows` is empty or all rows are empty.
  static Matrix from_ints(Field field, const std::vector<std::vector<long>>& rows, std::size_t cols = 0);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void set(std::size_t r, std::size_t c, long value);

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix select_columns(std::span<const std::size_t> indices) const;
  Matrix column(std::size_t c) const;

  /// [a | b]; row counts must agree.
  static Matrix hstack(const Matrix& a, const Matrix& b);
  /// [a ; b]; column counts must agree.
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix block_diagonal(const Matrix& a, const Matrix& b);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;

  bool operator==(const Matrix& o) const;

  const Storage& storage() const { return data_; }
  Storage& storage() { return data_; }

  std::string to_string() const;

 private:
  void require_same_field(const Matrix& o, const char* op) const;

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  Storage data_;
};

}  // namespace hnzz
