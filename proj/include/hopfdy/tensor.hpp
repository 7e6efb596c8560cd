#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hopfdy/rational.hpp"
#include "hopfdy/sparse.hpp"

namespace hopfdy {

/// Element of the d-fold tensor power of an n-dimensional space, stored as a
/// sorted list of (multi-index key, coefficient). The key of (i_1, ..., i_d)
/// is the base-n number i_1 i_2 ... i_d, so slot 0 is the most significant.
class TensorElement {
 public:
  using Key = std::uint64_t;
  using Term = std::pair<Key, Rational>;

  TensorElement() = default;
  TensorElement(std::size_t dim, std::size_t degree);

  static TensorElement basis(std::size_t dim, std::span<const Index> idx, Rational c = 1);
  static TensorElement from_vector(std::size_t dim, const SparseVector& v);
  /// Degree-d element whose flattened coordinates are v.
  static TensorElement from_flat(std::size_t dim, std::size_t degree, const SparseVector& v);
  /// Pure tensor v_1 ⊗ ... ⊗ v_d of vectors.
  static TensorElement pure(std::size_t dim, const std::vector<SparseVector>& factors);

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// dim^degree
  Key space_size() const { return space_; }

  Key encode(std::span<const Index> idx) const;
  void decode(Key k, std::span<Index> out) const;
  std::vector<Index> decode(Key k) const;
  Rational coeff(std::span<const Index> idx) const;
  Rational coeff_key(Key k) const;

  /// Flattened coordinates; requires dim^degree < 2^32.
  SparseVector flat() const;
  /// Degree-1 element as a vector.
  SparseVector as_vector() const;

  TensorElement& operator+=(const TensorElement& b);
  TensorElement& operator-=(const TensorElement& b);
  TensorElement operator-() const;
  TensorElement scaled(const Rational& c) const;
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Rational& c, const TensorElement& a) { return a.scaled(c); }
  friend bool operator==(const TensorElement& a, const TensorElement& b);
  friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

  /// Outer tensor product: this ⊗ b, degrees add.
  TensorElement outer(const TensorElement& b) const;

  /// Builds an element from unsorted terms (duplicates summed, zeros dropped).
  static TensorElement from_terms(std::size_t dim, std::size_t degree, std::vector<Term> terms);

 private:
  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  Key space_ = 1;
  std::vector<Term> terms_;
};

/// Moves slot s of u to slot perm[s] of the result.
TensorElement permute_slots(const TensorElement& u, std::span<const std::size_t> perm);

/// Swaps the two slots of a degree-2 element.
TensorElement flip(const TensorElement& u);

/// Applies a linear map (dim x dim matrix) to one slot.
TensorElement apply_at(const TensorElement& u, std::size_t slot, const SparseMatrix& m);

/// Applies a linear functional to one slot, lowering the degree by one.
TensorElement contract_at(const TensorElement& u, std::size_t slot, const SparseVector& functional);

/// Order-preserving compression of a family of tensors to short vectors so
/// ranks can be computed in a narrow space. Returns the vectors and the
/// compressed width.
std::pair<std::vector<SparseVector>, std::size_t> compress(const std::vector<TensorElement>& us);

}  // namespace hopfdy
