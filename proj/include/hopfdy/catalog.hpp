#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hopfdy/hopf.hpp"

namespace hopfdy {

/// Group algebra of the cyclic group of order n on the basis g^0, ..., g^{n-1}.
HopfPtr build_cyclic(int n);

/// B_k = exterior algebra on x_1..x_k smash the group algebra of Z/2.
///
/// Basis: x_1^{e_1} ... x_k^{e_k} g^t has index t + 2 * Σ e_i 2^{i-1}, so for
/// k = 1 the basis reads 1, g, x1, x1g.
HopfPtr build_bk(int k);

namespace bk {
/// Index of the monomial with the given x-mask and g-exponent.
inline Index monomial(unsigned mask, unsigned t) { return static_cast<Index>(t + 2 * mask); }
inline Index g() { return 1; }
/// x_i for 1 <= i <= k.
inline Index x(int i) { return monomial(1u << (i - 1), 0); }
/// k such that dim B_k = 2^{k+1}; throws when dim is not of that form.
int rank_of(const HopfAlgebra& h);
/// Inclusion B_k → B_m (k <= m) sending x_i ↦ x_{m-k+i} and g ↦ g.
SparseMatrix inclusion(int k, int m);
}  // namespace bk

struct CatalogKey {
  enum class Family { Cyclic, Bk, CPlus, CMinus };
  Family family = Family::Cyclic;
  int param = 1;

  /// Parses "cyclic:n", "bk:k", "cplus:k", "cminus:k"; nullopt otherwise.
  static std::optional<CatalogKey> parse(std::string_view text);
  std::string str() const;
};

/// Hopf algebra for a catalog key of family cyclic or bk.
HopfPtr build_catalog_hopf(const CatalogKey& key);

/// The D(B_k)-module 𝒞_± = B_k^{*op} f_± with f_± = (1 ± h)/2, where x_i acts
/// by 0 and g acts as h. `double_algebra` must be D(B_k) on the dual-major
/// basis (a, b) ↦ a * dim + b with the dual factor carrying the opposite
/// product. The module basis is the reduced echelon basis of the ideal.
ModuleRep build_c_pm(const HopfAlgebra& bk, AlgebraPtr double_algebra, int sign);

}  // namespace hopfdy
