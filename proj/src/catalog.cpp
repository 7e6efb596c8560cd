#include "hopfdy/catalog.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

#include "hopfdy/errors.hpp"
#include "hopfdy/exactlin.hpp"

namespace hopfdy {

HopfPtr build_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  const Index m = static_cast<Index>(n);
  std::vector<std::string> labels;
  for (Index i = 0; i < m; ++i) labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
  std::vector<SparseVector> mult(m * m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) mult[i * m + j] = unit_vector((i + j) % m);
  }
  auto alg = std::make_shared<const Algebra>(std::move(labels), std::move(mult), unit_vector(0));
  std::vector<SparseVector> comult(m);
  SparseVector counit;
  std::vector<SparseMatrix::Triplet> s;
  for (Index i = 0; i < m; ++i) {
    comult[i] = unit_vector(i * m + i);
    counit.push_back({i, 1});
    s.push_back({(m - i) % m, i, 1});
  }
  SparseMatrix anti = SparseMatrix::from_triplets(m, m, s);
  return std::make_shared<const HopfAlgebra>(std::move(alg), std::move(comult), std::move(counit), anti,
                                             anti);
}

namespace {

std::string bk_label(unsigned mask, unsigned t, int k) {
  std::string s;
  for (int i = 1; i <= k; ++i) {
    if (mask & (1u << (i - 1))) s += "x" + std::to_string(i);
  }
  if (t) s += "g";
  return s.empty() ? "1" : s;
}

/// Normal-ordered product of monomials x^a g^s · x^b g^t.
SparseVector bk_product(unsigned a, unsigned s, unsigned b, unsigned t) {
  if (a & b) return {};
  int sign_exp = 0;
  if (s) sign_exp += std::popcount(b);  // g x_j = -x_j g
  // Sorting x^a x^b: count pairs (i in a, j in b) with i > j.
  for (unsigned bb = b; bb; bb &= bb - 1) {
    unsigned j = static_cast<unsigned>(std::countr_zero(bb));
    sign_exp += std::popcount(a >> (j + 1));
  }
  Rational c = (sign_exp % 2) ? -1 : 1;
  return unit_vector(bk::monomial(a | b, s ^ t), c);
}

}  // namespace

HopfPtr build_bk(int k) {
  if (k < 1 || k > 12) throw std::invalid_argument("B_k needs 1 <= k <= 12");
  const unsigned masks = 1u << k;
  const Index n = static_cast<Index>(2 * masks);
  std::vector<std::string> labels(n);
  std::vector<SparseVector> mult(n * n);
  for (unsigned a = 0; a < masks; ++a) {
    for (unsigned s = 0; s < 2; ++s) {
      Index i = bk::monomial(a, s);
      labels[i] = bk_label(a, s, k);
      for (unsigned b = 0; b < masks; ++b) {
        for (unsigned t = 0; t < 2; ++t) mult[i * n + bk::monomial(b, t)] = bk_product(a, s, b, t);
      }
    }
  }
  auto alg = std::make_shared<const Algebra>(std::move(labels), std::move(mult), unit_vector(0));

  // Generator images; monomial images are products of these.
  const TensorElement one2 = tensor_unit(*alg, 2);
  const Index gi = bk::g();
  const Index pair_g[2] = {gi, gi};
  const TensorElement dg = TensorElement::basis(n, pair_g);
  std::vector<TensorElement> dx;
  for (int i = 1; i <= k; ++i) {
    const Index a[2] = {0, bk::x(i)};
    const Index b[2] = {bk::x(i), gi};
    dx.push_back(TensorElement::basis(n, a) + TensorElement::basis(n, b));
  }
  std::vector<SparseVector> comult(n);
  std::vector<SparseVector> anti_cols(n);
  SparseVector counit = unit_vector(0);
  counit.push_back({gi, 1});
  for (unsigned a = 0; a < masks; ++a) {
    for (unsigned s = 0; s < 2; ++s) {
      TensorElement d = one2;
      SparseVector sv = unit_vector(0);
      for (int i = 1; i <= k; ++i) {
        if (a & (1u << (i - 1))) {
          d = tensor_mul(*alg, d, dx[static_cast<std::size_t>(i - 1)]);
          // S is anti-multiplicative and S(x_i) = g x_i.
          sv = alg->multiply(alg->product(gi, bk::x(i)), sv);
        }
      }
      if (s) {
        d = tensor_mul(*alg, d, dg);
        sv = alg->multiply(unit_vector(gi), sv);
      }
      Index idx = bk::monomial(a, s);
      comult[idx] = d.flat();
      anti_cols[idx] = std::move(sv);
    }
  }
  SparseMatrix anti = SparseMatrix::from_columns(n, std::move(anti_cols));
  return std::make_shared<const HopfAlgebra>(std::move(alg), std::move(comult), std::move(counit),
                                             std::move(anti));
}

int bk::rank_of(const HopfAlgebra& h) {
  std::size_t d = h.dim();
  int k = 0;
  while ((std::size_t{2} << k) < d) ++k;
  if ((std::size_t{2} << k) != d || k < 1) throw std::invalid_argument("dimension is not 2^(k+1)");
  return k;
}

SparseMatrix bk::inclusion(int k, int m) {
  if (k < 1 || k > m) throw std::invalid_argument("B_k ⊂ B_m needs 1 <= k <= m");
  const Index nk = static_cast<Index>(2u << k), nm = static_cast<Index>(2u << m);
  std::vector<SparseVector> cols(nk);
  for (unsigned a = 0; a < (1u << k); ++a) {
    for (unsigned t = 0; t < 2; ++t) {
      cols[monomial(a, t)] = unit_vector(monomial(a << (m - k), t));
    }
  }
  return SparseMatrix::from_columns(nm, std::move(cols));
}

std::optional<CatalogKey> CatalogKey::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  std::string_view fam = text.substr(0, colon), num = text.substr(colon + 1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
  if (ec != std::errc() || ptr != num.data() + num.size() || value < 1) return std::nullopt;
  CatalogKey key;
  key.param = value;
  if (fam == "cyclic") {
    key.family = Family::Cyclic;
  } else if (fam == "bk") {
    key.family = Family::Bk;
  } else if (fam == "cplus") {
    key.family = Family::CPlus;
  } else if (fam == "cminus") {
    key.family = Family::CMinus;
  } else {
    return std::nullopt;
  }
  return key;
}

std::string CatalogKey::str() const {
  switch (family) {
    case Family::Cyclic: return "cyclic:" + std::to_string(param);
    case Family::Bk: return "bk:" + std::to_string(param);
    case Family::CPlus: return "cplus:" + std::to_string(param);
    case Family::CMinus: return "cminus:" + std::to_string(param);
  }
  return {};
}

HopfPtr build_catalog_hopf(const CatalogKey& key) {
  switch (key.family) {
    case CatalogKey::Family::Cyclic: return build_cyclic(key.param);
    case CatalogKey::Family::Bk: return build_bk(key.param);
    default: throw std::invalid_argument(key.str() + " names a module, not a Hopf algebra");
  }
}

ModuleRep build_c_pm(const HopfAlgebra& bk, AlgebraPtr double_algebra, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const Index n = static_cast<Index>(bk.dim());
  bk::rank_of(bk);
  if (double_algebra->dim() != std::size_t{n} * n) throw std::invalid_argument("not the double of B_k");
  HopfAlgebra dual = dual_hopf(bk, true);
  const Algebra& da = dual.algebra();
  // h = 1* - g*, f = (ε + sign h) / 2 with ε = 1* + g* the unit of the dual.
  SparseVector h = {{0, 1}, {bk::g(), -1}};
  SparseVector f = scale(add(da.unit(), scale(h, sign)), Rational(1, 2));
  std::vector<SparseVector> span;
  for (Index a = 0; a < n; ++a) span.push_back(da.multiply(unit_vector(a), f));
  SubspaceCoordinates ideal(row_space_basis(span, n), n);
  const std::size_t dim = ideal.dim();

  // Left multiplication by dual basis elements, restricted to the ideal.
  std::vector<SparseMatrix> left(n);
  for (Index a = 0; a < n; ++a) {
    std::vector<SparseVector> cols(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      cols[j] = ideal.coordinates(da.multiply(unit_vector(a), ideal.basis()[j]));
    }
    left[a] = SparseMatrix::from_columns(dim, std::move(cols));
  }
  // π(x^e g^t) = 0 for e ≠ 0, and h^t otherwise.
  SparseMatrix hm(dim, dim);
  for (const auto& e : h) hm = hm + left[e.index].scaled(e.value);
  ModuleRep m{double_algebra, dim, {}};
  m.action.reserve(std::size_t{n} * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (b == 0) {
        m.action.push_back(left[a]);
      } else if (b == bk::g()) {
        m.action.push_back(left[a] * hm);
      } else {
        m.action.emplace_back(dim, dim);
      }
    }
  }
  return m;
}

}  // namespace hopfdy
