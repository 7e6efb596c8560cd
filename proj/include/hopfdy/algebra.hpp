#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopfdy/sparse.hpp"
#include "hopfdy/tensor.hpp"

namespace hopfdy {

/// Finite-dimensional associative unital algebra given by structure constants.
class Algebra {
 public:
  /// `mult[i * dim + j]` is the product e_i e_j.
  Algebra(std::vector<std::string> labels, std::vector<SparseVector> mult, SparseVector unit);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVector& product(Index i, Index j) const { return mult_[i * dim() + j]; }
  const std::vector<SparseVector>& mult_table() const { return mult_; }
  const SparseVector& unit() const { return unit_; }

  SparseVector multiply(const SparseVector& a, const SparseVector& b) const;
  /// Matrix of x ↦ a x.
  SparseMatrix left_mult(const SparseVector& a) const;
  /// Matrix of x ↦ x a.
  SparseMatrix right_mult(const SparseVector& a) const;

 private:
  std::vector<std::string> labels_;
  std::vector<SparseVector> mult_;
  SparseVector unit_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Same object or identical structure constants.
bool same_algebra(const Algebra& a, const Algebra& b);

/// Linear map between algebras; matrix is dim(target) x dim(source).
struct AlgebraMap {
  AlgebraPtr source;
  AlgebraPtr target;
  SparseMatrix matrix;

  SparseVector operator()(const SparseVector& x) const { return matrix.apply(x); }
};

AlgebraMap identity_map(AlgebraPtr a);
AlgebraMap compose(const AlgebraMap& f, const AlgebraMap& g);  // f ∘ g

/// Module over an algebra: one action matrix per basis element.
struct ModuleRep {
  AlgebraPtr algebra;
  std::size_t dim = 0;
  std::vector<SparseMatrix> action;

  /// Action matrix of an arbitrary algebra element.
  SparseMatrix act(const SparseVector& a) const;
};

/// One violated identity, with the basis indices that witness it.
struct Violation {
  std::string axiom;
  std::vector<Index> witness;
  std::string detail;
};
using Report = std::vector<Violation>;

std::string format_report(const Report& r);

/// Associativity on basis triples and the unit laws. Algebras of dimension at
/// most `exhaustive_limit` are checked on every triple; larger ones on
/// (generator, basis, basis) triples, which implies full associativity.
Report verify_algebra(const Algebra& a, std::size_t exhaustive_limit = 64);
Report verify_algebra_map(const AlgebraMap& f);
/// Module axioms ρ(e_i)ρ(e_j) = Σ m_ij^k ρ(e_k) and ρ(1) = id. Pairs are
/// checked exhaustively up to `exhaustive_limit` algebra dimension, else with
/// the left factor running over a generating set.
Report verify_module(const ModuleRep& m, std::size_t exhaustive_limit = 64);

/// Deterministic generating set: basis elements picked greedily in index
/// order until left-normed words in them span the algebra.
std::vector<Index> algebra_generators(const Algebra& a);

/// Slotwise product of two tensors over the same algebra.
TensorElement tensor_mul(const Algebra& a, const TensorElement& x, const TensorElement& y);
/// 1 ⊗ ... ⊗ 1 (d factors).
TensorElement tensor_unit(const Algebra& a, std::size_t d);
/// Places the slots of u at positions `slots` of a degree-`degree` tensor and
/// fills the remaining slots with 1, e.g. R ↦ R_13 for slots {0, 2}.
TensorElement embed_slots(const Algebra& a, const TensorElement& u, std::size_t degree,
                          std::span<const std::size_t> slots);

/// A ⊗ B on the basis (i, j) ↦ i * dim B + j.
AlgebraPtr tensor_algebra(const Algebra& a, const Algebra& b);
AlgebraMap tensor_maps(const AlgebraMap& f, const AlgebraMap& g, AlgebraPtr source,
                       AlgebraPtr target);

ModuleRep regular_module(AlgebraPtr a);
ModuleRep restrict_module(const ModuleRep& m, const AlgebraMap& f);
/// M ⊗ N as a module over A ⊗ B (the external tensor product).
ModuleRep tensor_modules(const ModuleRep& m, const ModuleRep& n, AlgebraPtr ab);
ModuleRep direct_sum(const std::vector<const ModuleRep*>& parts);

/// Basis of Hom_A(M, N); each element is a dim N x dim M matrix.
std::vector<SparseMatrix> hom_space(const ModuleRep& m, const ModuleRep& n);
/// Same, from the action matrices of a generating set (paired by position).
std::vector<SparseMatrix> hom_space_from_actions(const std::vector<const SparseMatrix*>& m_actions,
                                                 const std::vector<const SparseMatrix*>& n_actions,
                                                 std::size_t dm, std::size_t dn);

/// True when f ρ_M(a) = ρ_N(a) f for every basis element a.
bool is_intertwiner(const SparseMatrix& f, const ModuleRep& m, const ModuleRep& n);

/// Induced module A ⊗_B V along ι: B → A, built as the quotient of A ⊗ V by
/// the relations (a ι(b)) ⊗ v − a ⊗ (b v), with b running over
/// algebra_generators(B). The quotient basis consists of the
/// non-pivot columns of the relation echelon form; column (a, v) has index
/// a * dim V + v.
class Induction {
 public:
  Induction(AlgebraMap iota, ModuleRep base);
  ~Induction();
  Induction(Induction&&) noexcept;
  Induction& operator=(Induction&&) noexcept;

  std::size_t dim() const { return reps_.size(); }
  const AlgebraMap& map() const { return iota_; }
  const ModuleRep& base() const { return base_; }
  std::pair<Index, Index> representative(Index q) const;

  /// Quotient coordinates of an element of A ⊗ V given in column coordinates.
  SparseVector reduce(const SparseVector& x) const;
  /// Class of a ⊗ v.
  SparseVector class_of(const SparseVector& a, const SparseVector& v) const;
  /// a · [basis q]
  SparseVector act(const SparseVector& a, Index q) const;
  SparseMatrix action_matrix(const SparseVector& a) const;
  /// Full A-module (action of every basis element).
  ModuleRep module() const;

  /// v ↦ [1 ⊗ v]: base → Res(Ind(base)).
  SparseMatrix unit_map() const;
  /// [a ⊗ x] ↦ a · x, for an A-module X whose restriction is base().
  SparseMatrix counit_map(const ModuleRep& x) const;
  /// Ind(f) for a B-linear f: base() → target.base().
  SparseMatrix induced_map(const SparseMatrix& f, const Induction& target) const;

 private:
  struct Quotient;
  AlgebraMap iota_;
  ModuleRep base_;
  std::unique_ptr<Quotient> q_;
  std::vector<std::pair<Index, Index>> reps_;
};

ModuleRep induced_module(const AlgebraMap& iota, const ModuleRep& v);

struct ModuleKernel {
  ModuleRep module;
  SparseMatrix inclusion;  // dim M x dim K
};

/// Kernel of an intertwiner f: M → N. Throws InvalidStructure if f does not
/// intertwine. The kernel basis is the reduced-echelon kernel basis of f.
ModuleKernel module_map_kernel(const SparseMatrix& f, const ModuleRep& m, const ModuleRep& n);

/// Coordinates with respect to a basis in reduced form (every basis vector
/// owns a column where the others vanish, as for kernel bases and reduced
/// echelon rows). Membership is verified by reconstruction; a vector outside
/// the span raises ConsistencyFailure.
class SubspaceCoordinates {
 public:
  SubspaceCoordinates(std::vector<SparseVector> basis, std::size_t ambient);
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVector>& basis() const { return basis_; }
  SparseVector coordinates(const SparseVector& v) const;
  bool contains(const SparseVector& v) const;
  /// Matrix ambient-dim x dim whose columns are the basis vectors.
  SparseMatrix inclusion() const;

 private:
  std::vector<SparseVector> basis_;
  std::size_t ambient_;
  std::vector<std::int64_t> slot_;  // ambient column -> basis position or -1
  std::vector<Rational> pivot_;     // value of each basis vector at its column
};

}  // namespace hopfdy
