#pragma once

#include <string>

#include "hopfdy/hopf.hpp"
#include "hopfdy/rmatrix.hpp"

namespace hopfdy {

/// D(H) on (H*)^op ⊗ H. Basis element e^a ⊗ e_b has index a * dim H + b.
struct DoubleAlgebra {
  HopfPtr hopf;  // D(H)
  HopfPtr base;  // H
  HopfPtr dual;  // H*^op

  std::size_t base_dim() const { return base->dim(); }
  Index index(Index a, Index b) const { return static_cast<Index>(a * base_dim() + b); }
  /// φ ↦ φ ⊗ 1
  AlgebraMap dual_embedding() const;
  /// h ↦ ε ⊗ h
  AlgebraMap base_embedding() const;
};

/// Product from the straightening relation h φ = (h3 ▷ φ ◁ S(h1)) h2, the
/// tensor coproduct, and the antipode found by solving the antipode axiom.
/// Throws InvalidStructure when that system has no solution.
DoubleAlgebra drinfeld_double(HopfPtr h);

/// (id ⊗ α)(R)
SparseVector ell_plus(const HopfAlgebra& h, const VerifiedRMatrix& r, const SparseVector& alpha);
/// (β ⊗ id)(R^{-1})
SparseVector ell_minus(const HopfAlgebra& h, const VerifiedRMatrix& r, const SparseVector& beta);
/// Extensions α a ↦ ℓ(α) a as linear maps D(H) → H.
AlgebraMap ell_plus_map(const DoubleAlgebra& d, const VerifiedRMatrix& r);
AlgebraMap ell_minus_map(const DoubleAlgebra& d, const VerifiedRMatrix& r);

struct CoefficientModule {
  ModuleRep module;
  std::string provenance;
};

/// H* as a module over D(H) ⊗ D(H) (the tensor_algebra of the double with
/// itself, passed in so callers share one instance):
/// (α a ⊗ β b)·ψ = ℓ⁻(β) b ▷ ψ ◁ S(ℓ⁺(α) a).
CoefficientModule coeff_tensor_product(const DoubleAlgebra& d, AlgebraPtr dd,
                                       const VerifiedRMatrix& r);

/// {f ∈ H* : f ◁ ι(k) = ε(k) f} as a D(H)-module with (ε ⊗ h)·f = h ▷ f and
/// (φ ⊗ 1)·f = Σ φ(S(z1) z3) f(z2). `iota` is dim H x dim K. Throws
/// InvalidStructure if ι is not a Hopf map or the subspace is not stable.
CoefficientModule coeff_restriction(const DoubleAlgebra& d, const HopfAlgebra& k,
                                    const SparseMatrix& iota);

enum class CenterVariant { Braiding, InverseBraiding, DualBraiding };

/// Extends an H-module to D(H) along ℓ⁺ (Braiding), ℓ⁻ (InverseBraiding),
/// or on the dual space through f ↦ f ∘ S(ℓ⁺(α) a) (DualBraiding).
ModuleRep center_module_from_rmatrix(const DoubleAlgebra& d, const VerifiedRMatrix& r,
                                     const ModuleRep& m, CenterVariant variant);

/// Only the trivial twist J = 1 ⊗ 1 is supported; anything else throws
/// std::invalid_argument.
void require_trivial_twist(const HopfAlgebra& h, const TensorElement& j);

}  // namespace hopfdy
