#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hnzz/guard.hpp"
#include "hnzz/matrix.hpp"
#include "hnzz/rng.hpp"

namespace hnzz {

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of {x : m x = 0}, in reduced column echelon form.
Matrix kernel_basis(const Matrix& m);

/// Basis of the column space of m in reduced column echelon form. Two
/// matrices span the same subspace iff their column echelon forms are equal.
Matrix column_echelon(const Matrix& m);

/// True iff every column of `inner` lies in the column space of `outer`.
bool column_space_contains(const Matrix& outer, const Matrix& inner);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Uniformly drawn invertible matrix for prime fields; small-integer
/// entries in [-3, 3] for the rationals.
Matrix random_invertible(std::size_t dim, const Field& field, Rng& rng);
Matrix random_invertible(std::size_t dim, const Field& field, std::uint64_t seed);

/// Calls `visit` once per subspace of GF(p)^dim, passing its basis in
/// reduced column echelon form (dim x k). Subspaces come in order of
/// increasing dimension, then pivot pattern, then free entries.
void for_each_subspace(std::size_t dim, std::uint32_t p, const std::function<void(const Matrix&)>& visit,
                       const OracleGuard& guard = OracleGuard::from_environment());

std::vector<Matrix> enumerate_subspaces(std::size_t dim, std::uint32_t p,
                                        const OracleGuard& guard = OracleGuard::from_environment());

}  // namespace hnzz
