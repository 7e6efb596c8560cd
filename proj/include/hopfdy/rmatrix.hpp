#pragma once

#include <optional>
#include <vector>

#include "hopfdy/hopf.hpp"

namespace hopfdy {

struct RMatrixReport {
  Report quasi_cocommutativity;  // R Δ(h) = Δ^op(h) R; witness = h
  Report hexagon1;               // (Δ ⊗ id)(R) = R_13 R_23
  Report hexagon2;               // (id ⊗ Δ)(R) = R_13 R_12
  Report counit_normalization;   // (ε ⊗ id)(R) = (id ⊗ ε)(R) = 1
  std::optional<TensorElement> inverse;

  bool verified() const {
    return quasi_cocommutativity.empty() && hexagon1.empty() && hexagon2.empty() &&
           counit_normalization.empty() && inverse.has_value();
  }
  Report all() const;
};

/// Checks every R-matrix axiom on basis elements. The inverse is taken as
/// (S ⊗ id)(R) when that works and is otherwise solved for.
RMatrixReport check_rmatrix(const HopfAlgebra& h, const TensorElement& r);

struct VerifiedRMatrix {
  TensorElement r;
  TensorElement r_inverse;
};

/// Throws InvalidRMatrix carrying the formatted report unless R verifies.
VerifiedRMatrix require_rmatrix(const HopfAlgebra& h, const TensorElement& r);

struct TangentBasis {
  TensorElement base;
  std::vector<TensorElement> vectors;
  std::size_t dim() const { return vectors.size(); }
};

/// Kernel of the linearized R-matrix equations at R, solved as one stacked
/// system. Throws InvalidRMatrix if R does not verify and ConsistencyFailure
/// if a solution fails (ε ⊗ id)(T) = (id ⊗ ε)(T) = 0.
TangentBasis tangent_space(const HopfAlgebra& h, const TensorElement& r);

/// True when T satisfies the three linear tangent conditions at R.
bool is_tangent(const HopfAlgebra& h, const TensorElement& r, const TensorElement& t);

/// 1 ⊗ 1.
TensorElement trivial_r(const HopfAlgebra& h);

/// R_0 = e_+ ⊗ 1 + e_- ⊗ g with e_± = (1 ± g)/2, over build_bk(k).
TensorElement bk_r0(int k);
/// R_0 Π_{i,j} (1 ⊗ 1 + λ_ij x_i ⊗ x_j g); the factors commute.
TensorElement bk_r_lambda(int k, const std::vector<std::vector<Rational>>& lambda);
/// R_0 (x_i ⊗ x_j g) for i, j = 1..k, in row-major order.
std::vector<TensorElement> bk_reference_tangent_basis(int k);

}  // namespace hopfdy
