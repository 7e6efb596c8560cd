#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hopfdy/algebra.hpp"
#include "hopfdy/double.hpp"
#include "hopfdy/dycomplex.hpp"

namespace hopfdy {

/// An injective algebra map ι: B → A, with generating sets of both sides.
struct ResolventPair {
  AlgebraMap inclusion;
  std::vector<Index> big_generators;
  std::vector<Index> small_generators;

  const AlgebraPtr& big() const { return inclusion.target; }
  const AlgebraPtr& small() const { return inclusion.source; }

  /// Throws InvalidStructure unless ι is an injective unital algebra map.
  static ResolventPair make(AlgebraMap inclusion);
};

/// (D(H), H) along h ↦ ε ⊗ h.
ResolventPair double_pair(const DoubleAlgebra& d);
/// (D(H) ⊗ D(H), H ⊗ H); `dd` must be tensor_algebra of the double with itself.
ResolventPair double_tensor_pair(const DoubleAlgebra& d, AlgebraPtr dd);
/// (A ⊗ A', B ⊗ B'), with `big` = A ⊗ A' and `small` = B ⊗ B' built by tensor_algebra.
ResolventPair tensor_pair(const ResolventPair& p, const ResolventPair& q, AlgebraPtr big,
                          AlgebraPtr small);

class LazyModule;
using ModulePtr = std::shared_ptr<const LazyModule>;

/// Module whose action is computed column by column on demand. Action
/// matrices of single basis elements are cached, so large induced modules
/// never hold the action of every basis element at once.
class LazyModule {
 public:
  /// Column `col` of the action of an algebra element.
  using ColumnFn = std::function<SparseVector(const SparseVector& a, Index col)>;

  LazyModule(AlgebraPtr algebra, std::size_t dim, ColumnFn fn);

  static ModulePtr from_rep(ModuleRep m);
  static ModulePtr induced(std::shared_ptr<const Induction> ind);
  /// Span of `basis` (reduced form) inside `parent`; a column escaping the
  /// span raises ConsistencyFailure.
  static ModulePtr submodule(ModulePtr parent, std::vector<SparseVector> basis);
  /// External tensor product over `ab` = tensor_algebra(A, A').
  static ModulePtr tensor(ModulePtr m, ModulePtr n, AlgebraPtr ab);
  static ModulePtr direct_sum(std::vector<ModulePtr> parts);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t dim() const { return dim_; }

  SparseVector act_column(const SparseVector& a, Index col) const;
  SparseVector act_column(Index a, Index col) const;
  SparseMatrix act(const SparseVector& a) const;
  /// Cached action of a basis element.
  const SparseMatrix& action(Index a) const;
  /// Actions of ι(b) for every basis element b of the source.
  ModuleRep restrict_to(const AlgebraMap& iota) const;
  ModuleRep materialize() const;

 private:
  AlgebraPtr algebra_;
  std::size_t dim_;
  ColumnFn fn_;
  mutable std::mutex mu_;
  mutable std::map<Index, std::shared_ptr<const SparseMatrix>> cache_;
};

enum class ResolutionKind { Bar, Cover, Tensor };
std::string to_string(ResolutionKind k);

/// Truncated (A, B)-projective resolution P_N → ... → P_0 → V with a
/// B-linear contracting homotopy. The tail is the next map d_{N+1}, whose
/// domain is kept only as a vector space with its B-action.
struct Resolution {
  ResolutionKind kind = ResolutionKind::Bar;
  ModulePtr target;
  std::vector<ModulePtr> terms;
  SparseMatrix augmentation;                // P_0 → V
  std::vector<SparseMatrix> differentials;  // [n - 1] is d_n : P_n → P_{n-1}
  std::size_t tail_dim = 0;
  SparseMatrix tail;                        // d_{N+1}
  /// Actions of the small generators: on V, on each P_n, and on the tail domain.
  std::vector<SparseMatrix> target_small;
  std::vector<std::vector<SparseMatrix>> terms_small;
  std::vector<SparseMatrix> tail_small;
  /// [0] is s_{-1} : V → P_0, [n + 1] is s_n : P_n → P_{n+1} (the tail domain for n = N).
  std::vector<SparseMatrix> contraction;

  std::size_t maxdeg() const { return terms.size() - 1; }
  std::vector<std::size_t> term_dims() const;
};

/// P_n = G^{n+1}(V) with G = A ⊗_B −, d_n = ε_{P_{n-1}} − G(d_{n-1}), s_n = η.
Resolution bar_resolution(const ResolventPair& pair, ModulePtr v, std::size_t maxdeg);
/// K_0 = V, P_n = G(K_n), K_{n+1} = ker(P_n → K_n), d_{n+1} = P_{n+1} → K_{n+1} ⊂ P_n.
Resolution iterated_cover_resolution(const ResolventPair& pair, ModulePtr v, std::size_t maxdeg);
Resolution make_resolution(ResolutionKind kind, const ResolventPair& pair, ModulePtr v,
                           std::size_t maxdeg);
/// Total complex of two resolutions over `pair` = tensor_pair of the factor
/// pairs, with d(x ⊗ y) = dx ⊗ y + (-1)^i x ⊗ dy and homotopy
/// s ⊗ 1 + (s_{-1} ε) ⊗ s' (second term on P_0 ⊗ − only). Truncated one
/// degree below the shorter factor.
Resolution tensor_resolution(const Resolution& a, const Resolution& b, const ResolventPair& pair);

struct ResolutionCheck {
  bool complex = false;          // consecutive maps compose to zero
  bool module_maps = false;      // ε, d_n are A-linear; the tail is B-linear
  bool exact = false;            // rank bookkeeping at V and every P_n
  bool b_linear_splitting = false;
  bool homotopy = false;         // ε s_{-1} = 1 and d s + s d = 1 in every degree
  std::vector<std::size_t> ranks;  // rank ε, rank d_1, ..., rank d_{N+1}
  std::string detail;

  bool ok() const { return complex && module_maps && exact && b_linear_splitting && homotopy; }
};
ResolutionCheck verify_resolution(const Resolution& res, const ResolventPair& pair);

struct ExtResult {
  std::vector<std::size_t> dims;      // Ext^0 .. Ext^N
  std::vector<std::size_t> hom_dims;  // dim Hom_A(P_n, W)
  std::vector<std::size_t> ranks;     // rank δ^0 .. δ^N
  bool modular_agree = true;
};
ExtResult relative_ext(const Resolution& res, const ResolventPair& pair, const LazyModule& w);
ExtResult relative_ext(const ResolventPair& pair, ModulePtr v, const LazyModule& w,
                       std::size_t maxdeg, ResolutionKind kind);

/// One side computed from Davydov-Yetter cohomology, the other from relative Ext.
struct AdjunctionCheck {
  std::size_t degree = 0;
  std::size_t cohomology = 0;
  std::size_t ext = 0;
  bool resolution_verified = false;
  bool consistent() const { return cohomology == ext && resolution_verified; }
};
/// H^n of TensorWithR against Ext^n over (D(H)⊗D(H), H⊗H) of (k, H*).
AdjunctionCheck adjunction_check_tensor(HopfPtr h, const TensorElement& r, std::size_t n,
                                        ResolutionKind kind);
/// H^n of Restriction along ι: K → H against Ext^n over (D(H), H) of (k, coefficient module).
AdjunctionCheck adjunction_check_restriction(HopfPtr h, HopfPtr k, const SparseMatrix& iota,
                                             std::size_t n, ResolutionKind kind);

struct DimensionFormulaCheck {
  std::size_t h2_tensor = 0;
  std::size_t h2_id = 0;
  std::size_t tangent_dim = 0;
  bool consistent() const { return h2_tensor == 2 * h2_id + tangent_dim; }
};
DimensionFormulaCheck dimension_formula_check(HopfPtr h, const TensorElement& r);

struct KunnethCheck {
  std::size_t degree = 0;
  std::size_t direct = 0;                     // Ext^n over the tensor pair
  std::size_t product_sum = 0;                // Σ_{i+j=n} Ext^i Ext'^j
  std::vector<std::size_t> factor_a, factor_b;
  std::size_t tensor_resolution_ext = 0;      // Ext^n from the tensor of the two resolutions
  bool tensor_resolution_verified = false;
  bool consistent() const {
    return direct == product_sum && tensor_resolution_ext == direct && tensor_resolution_verified;
  }
};
/// Factors (A, B, V, W) and (A', B', V', W'); the direct side resolves V ⊗ V'
/// over `ab` with the given kind.
KunnethCheck kunneth_check(const ResolventPair& p, ModulePtr v, ModulePtr w, const ResolventPair& q,
                           ModulePtr v2, ModulePtr w2, const ResolventPair& ab, std::size_t n,
                           ResolutionKind kind);

}  // namespace hopfdy
