#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hopfdy/hopf.hpp"
#include "hopfdy/rmatrix.hpp"

namespace hopfdy {

enum class DYKind { Identity, TensorWithR, Restriction };

struct CohomologyInfo {
  std::size_t degree = 0;
  std::size_t cochain_dim = 0;
  std::size_t rank_in = 0;   // rank δ^{n-1}
  std::size_t rank_out = 0;  // rank δ^n
  std::size_t dim = 0;
  bool modular_agree = true;
};

/// Davydov-Yetter cochain complex of a functor on H-mod, in Hopf form.
///
/// Identity: C^n ⊂ H^{⊗n} is the centralizer of Δ^{(n-1)}(H).
/// Restriction along ι: K → H: centralizer of Δ^{(n-1)}(ι(K)), same cofaces.
/// TensorWithR: C^n ⊂ H^{⊗2n} with slots x_1 y_1 ... x_n y_n; u commutes in
/// the sense (⊗_i h^{(i)} ⊗ h^{(n+i)}) u = u Δ^{(2n-1)}(h).
///
/// C^0 is the scalar line (a degree-0 tensor). Cochain bases are cached; the
/// cache is filled under a mutex.
class DYComplex {
 public:
  static DYComplex identity(HopfPtr h);
  /// Throws InvalidRMatrix if R does not verify.
  static DYComplex tensor_with_r(HopfPtr h, const TensorElement& r);
  /// `iota` is dim H x dim K; throws InvalidStructure unless it is a Hopf map.
  static DYComplex restriction(HopfPtr h, HopfPtr k, SparseMatrix iota);

  DYComplex(DYComplex&&) noexcept;
  DYComplex& operator=(DYComplex&&) noexcept;
  ~DYComplex();

  DYKind kind() const { return kind_; }
  const HopfAlgebra& hopf() const { return *h_; }
  const HopfPtr& hopf_ptr() const { return h_; }
  /// Only for TensorWithR.
  const VerifiedRMatrix& rmatrix() const;

  /// Tensor degree of C^n inside H^{⊗*}.
  std::size_t slots(std::size_t n) const { return kind_ == DYKind::TensorWithR ? 2 * n : n; }

  /// Throws UnsupportedDegree when the ambient space of C^n is too large.
  const std::vector<TensorElement>& cochain_basis(std::size_t n) const;
  std::size_t cochain_dim(std::size_t n) const { return cochain_basis(n).size(); }
  bool is_cochain(std::size_t n, const TensorElement& u) const;
  SparseVector coordinates(std::size_t n, const TensorElement& u) const;
  TensorElement from_coordinates(std::size_t n, const SparseVector& v) const;

  /// ∂_i : C^n → C^{n+1}, 0 <= i <= n + 1.
  TensorElement coface(std::size_t n, std::size_t i, const TensorElement& u) const;
  /// s_i : C^n → C^{n-1}, 0 <= i <= n - 1.
  TensorElement codegeneracy(std::size_t n, std::size_t i, const TensorElement& u) const;
  /// δ^n = Σ (-1)^i ∂_i.
  TensorElement differential(std::size_t n, const TensorElement& u) const;

  /// Matrices in cochain coordinates; images are checked to land in the
  /// target cochain space (ConsistencyFailure otherwise).
  SparseMatrix differential_matrix(std::size_t n) const;
  SparseMatrix coface_matrix(std::size_t n, std::size_t i) const;
  SparseMatrix codegeneracy_matrix(std::size_t n, std::size_t i) const;

  /// dim ker δ^n − rank δ^{n−1}. δ^{n−1} is taken in C^n coordinates; δ^n is
  /// ranked on its images, each checked against the degree-(n+1) centralizer
  /// equations, so C^{n+1} itself is never built.
  CohomologyInfo cohomology(std::size_t n) const;
  std::size_t cohomology_dim(std::size_t n) const { return cohomology(n).dim; }
  /// Basis of ker δ^n as cochains.
  std::vector<TensorElement> cocycle_basis(std::size_t n) const;

  /// Low-degree normalization projector; n in {1, 2, 3}.
  TensorElement normalize(std::size_t n, const TensorElement& u) const;

 private:
  DYComplex(DYKind kind, HopfPtr h);
  struct Cache;

  void check_degree(std::size_t n, const TensorElement& u) const;
  /// Centralizer residual of u at degree n (empty iff u is a cochain).
  SparseVector residual(std::size_t n, const TensorElement& u) const;
  const std::vector<std::pair<TensorElement, TensorElement>>& commutation_pairs(std::size_t n) const;

  DYKind kind_;
  HopfPtr h_;
  HopfPtr k_;
  SparseMatrix iota_;
  std::optional<VerifiedRMatrix> r_;
  std::unique_ptr<Cache> cache_;
};

/// (a, b, T) from a degree-2 cocycle u of TensorWithR:
/// a = (id⊗ε)^{⊗2}(u), b = (ε⊗id)^{⊗2}(u),
/// T = (ε⊗id⊗id⊗ε)(u) − τ((id⊗ε⊗ε⊗id)(u)) R.
struct H2Decomposition {
  TensorElement a;
  TensorElement b;
  TensorElement t;
};
/// Throws std::invalid_argument if u is not a degree-2 cocycle.
H2Decomposition decompose_h2_tensor(const DYComplex& c, const TensorElement& u);

/// u = 1 ⊗ T ⊗ 1; throws std::invalid_argument unless T is tangent at R.
TensorElement cocycle_from_tangent(const DYComplex& c, const TensorElement& t);

/// Maximum ambient dimension for which cochain bases are computed.
inline constexpr std::uint64_t kMaxCochainAmbient = std::uint64_t{1} << 16;

}  // namespace hopfdy
