#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hopfdy/rational.hpp"

namespace hopfdy {

using Index = std::uint32_t;

template <class S>
struct BasicEntry {
  Index index;
  S value;
  friend bool operator==(const BasicEntry& a, const BasicEntry& b) {
    return a.index == b.index && a.value == b.value;
  }
};

/// Sparse vector: entries with strictly increasing index and nonzero value.
using Entry = BasicEntry<Rational>;
using SparseVector = std::vector<Entry>;

/// Sorts by index, merges duplicates and drops zeros.
void canonicalize(SparseVector& v);

SparseVector unit_vector(Index i, Rational c = 1);
SparseVector add(const SparseVector& a, const SparseVector& b);
SparseVector sub(const SparseVector& a, const SparseVector& b);
SparseVector scale(const SparseVector& a, const Rational& c);
/// y += c * x
void axpy(SparseVector& y, const Rational& c, const SparseVector& x);
Rational coefficient(const SparseVector& v, Index i);
Rational dot(const SparseVector& a, const SparseVector& b);
std::vector<Rational> to_dense(const SparseVector& v, std::size_t n);
SparseVector from_dense(const std::vector<Rational>& d);

/// Collects (index, value) contributions in any order and turns them into a
/// canonical sparse vector.
class VectorBuilder {
 public:
  void add(Index i, const Rational& c) {
    if (!c.is_zero()) terms_.push_back({i, c});
  }
  void add_scaled(const SparseVector& v, const Rational& c);
  SparseVector finish();
  bool empty() const { return terms_.empty(); }

 private:
  SparseVector terms_;
};

/// Column-major sparse matrix over the rationals.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_columns(std::size_t rows, std::vector<SparseVector> cols);
  /// Triplets (row, col, value); duplicates are summed.
  struct Triplet {
    Index row;
    Index col;
    Rational value;
  };
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    const std::vector<Triplet>& triplets);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  const SparseVector& column(std::size_t j) const { return cols_[j]; }
  const std::vector<SparseVector>& columns() const { return cols_; }
  void set_column(std::size_t j, SparseVector v);
  Rational at(std::size_t i, std::size_t j) const;
  std::size_t nnz() const;
  bool is_zero() const;

  SparseVector apply(const SparseVector& x) const;
  SparseMatrix operator*(const SparseMatrix& b) const;
  SparseMatrix operator+(const SparseMatrix& b) const;
  SparseMatrix operator-(const SparseMatrix& b) const;
  SparseMatrix scaled(const Rational& c) const;
  SparseMatrix transpose() const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> cols_;
};

/// Kronecker product; index (i, j) of the result is i * b.dim + j.
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

/// Block matrix built from a grid of optional blocks with given row and
/// column block sizes.
SparseMatrix block_matrix(const std::vector<std::size_t>& row_sizes,
                          const std::vector<std::size_t>& col_sizes,
                          const std::vector<std::vector<const SparseMatrix*>>& blocks);

}  // namespace hopfdy
