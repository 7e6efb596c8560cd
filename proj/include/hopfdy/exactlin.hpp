#pragma once

#include <atomic>
#include <cstddef>
#include <optional>
#include <vector>

#include "hopfdy/echelon.hpp"
#include "hopfdy/sparse.hpp"

namespace hopfdy {

/// Rank of a list of vectors living in a space of dimension `dim`.
std::size_t rank_of_vectors(const std::vector<SparseVector>& vectors, std::size_t dim);

std::size_t rank(const SparseMatrix& m);

/// Basis of {x : m x = 0}. One vector per free column, unit at that column
/// and zero at the other free columns, ordered by the free column.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

/// Basis of the solution space of the homogeneous system whose equations are
/// the given rows (each row a vector over `nvars` unknowns).
std::vector<SparseVector> kernel_of_rows(const std::vector<SparseVector>& rows, std::size_t nvars);

/// Reduced row echelon basis of the span, ordered by pivot column.
std::vector<SparseVector> row_space_basis(const std::vector<SparseVector>& vectors, std::size_t dim);

/// True iff both families span the same subspace of a `dim`-dimensional space.
bool span_equal(const std::vector<SparseVector>& a, const std::vector<SparseVector>& b,
                std::size_t dim);

/// Solves m x = b. Returns nullopt when inconsistent; otherwise the solution
/// with every free variable set to zero.
std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b);

std::optional<SparseMatrix> inverse(const SparseMatrix& m);

/// Rank by fraction-free Bareiss elimination on a dense copy. Meant for small
/// dense matrices and as an independent check of the sparse engine.
std::size_t rank_bareiss(const SparseMatrix& m);

/// Rank modulo 2^31 - 1. Returns nullopt if some entry has a denominator
/// divisible by the prime.
std::optional<std::size_t> rank_mod_p(const std::vector<SparseVector>& vectors, std::size_t dim);

/// Exact rank together with the modular rank computed as an alarm. The exact
/// rank is authoritative; disagreements bump a global counter.
struct CheckedRank {
  std::size_t exact = 0;
  std::optional<std::size_t> modular;
  bool agree() const { return !modular || *modular == exact; }
};
CheckedRank checked_rank(const std::vector<SparseVector>& vectors, std::size_t dim);

/// Number of modular/exact rank disagreements seen so far in this process.
std::size_t modular_mismatch_count();

}  // namespace hopfdy
