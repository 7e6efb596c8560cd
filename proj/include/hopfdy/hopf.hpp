#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfdy/algebra.hpp"
#include "hopfdy/tensor.hpp"

namespace hopfdy {

/// Finite-dimensional Hopf algebra by structure constants. Coproducts are
/// stored as flat vectors over dim^2 with index i * dim + j for e_i ⊗ e_j.
class HopfAlgebra {
 public:
  /// Computes the antipode inverse by matrix inversion when none is given;
  /// throws InvalidStructure if the antipode is singular.
  HopfAlgebra(AlgebraPtr algebra, std::vector<SparseVector> comult, SparseVector counit,
              SparseMatrix antipode, std::optional<SparseMatrix> antipode_inverse = std::nullopt);

  const Algebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  std::size_t dim() const { return algebra_->dim(); }

  const SparseVector& coproduct(Index i) const { return comult_[i]; }
  const SparseVector& counit() const { return counit_; }
  const SparseMatrix& antipode() const { return antipode_; }
  const SparseMatrix& antipode_inverse() const { return antipode_inv_; }

  TensorElement coproduct_of(const SparseVector& h) const;
  Rational counit_of(const SparseVector& h) const { return dot(counit_, h); }
  SparseVector antipode_of(const SparseVector& h) const { return antipode_.apply(h); }

 private:
  AlgebraPtr algebra_;
  std::vector<SparseVector> comult_;
  SparseVector counit_;
  SparseMatrix antipode_;
  SparseMatrix antipode_inv_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

/// Bialgebra and antipode axioms on basis elements. Multiplicativity of the
/// coproduct is checked on all basis pairs up to `exhaustive_limit`, and on
/// (generator, basis) pairs above it.
Report verify_hopf(const HopfAlgebra& h, std::size_t exhaustive_limit = 16);

/// Dual Hopf algebra on the dual basis. With opposite_product the product is
/// (φψ)(x) = (ψ ⊗ φ)(Δx) and the antipode is the transpose of S^{-1}.
HopfAlgebra dual_hopf(const HopfAlgebra& h, bool opposite_product);

HopfAlgebra tensor_hopf(const HopfAlgebra& a, const HopfAlgebra& b);

/// Applies Δ `times` times at `slot` (0-based).
TensorElement iterated_coproduct(const HopfAlgebra& h, const TensorElement& u, std::size_t slot,
                                 std::size_t times);
/// Δ^{(n-1)}(x) in H^{⊗n}; n >= 1.
TensorElement coproduct_power(const HopfAlgebra& h, const SparseVector& x, std::size_t n);

TensorElement apply_counit_at(const HopfAlgebra& h, const TensorElement& u, std::size_t slot);
TensorElement apply_antipode_at(const HopfAlgebra& h, const TensorElement& u, std::size_t slot);

/// (x ▷ f)(z) = f(z x), as a vector on the dual basis.
SparseVector coregular_left(const HopfAlgebra& h, const SparseVector& x, const SparseVector& f);
/// (f ◁ x)(z) = f(x z).
SparseVector coregular_right(const HopfAlgebra& h, const SparseVector& f, const SparseVector& x);
/// Matrices of f ↦ x ▷ f and f ↦ f ◁ x on the dual basis.
SparseMatrix coregular_left_matrix(const HopfAlgebra& h, const SparseVector& x);
SparseMatrix coregular_right_matrix(const HopfAlgebra& h, const SparseVector& x);

/// The ground field as a module through the counit.
ModuleRep trivial_module(const HopfAlgebra& h);

/// Checks that a linear map K → H preserves products, unit, coproduct,
/// counit and antipode.
Report verify_hopf_map(const HopfAlgebra& k, const HopfAlgebra& h, const SparseMatrix& m);

}  // namespace hopfdy
