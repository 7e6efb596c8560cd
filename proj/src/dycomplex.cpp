#include "hopfdy/dycomplex.hpp"

#include <numeric>

#include "hopfdy/errors.hpp"
#include "hopfdy/exactlin.hpp"

namespace hopfdy {

struct DYComplex::Cache {
  std::recursive_mutex mu;
  std::map<std::size_t, std::vector<TensorElement>> bases;
  std::map<std::size_t, std::unique_ptr<SubspaceCoordinates>> coords;
  std::map<std::size_t, std::vector<std::pair<TensorElement, TensorElement>>> pairs;
};

namespace {

std::vector<std::size_t> iota_slots(std::size_t from, std::size_t count, std::size_t step = 1) {
  std::vector<std::size_t> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = from + i * step;
  return out;
}

Rational scalar_of(const TensorElement& u) { return u.terms().empty() ? Rational(0) : u.terms()[0].second; }

TensorElement scalar(std::size_t dim, const Rational& c) {
  TensorElement t(dim, 0);
  if (c.is_zero()) return t;
  return TensorElement::from_terms(dim, 0, {{0, c}});
}

}  // namespace

DYComplex::DYComplex(DYKind kind, HopfPtr h)
    : kind_(kind), h_(std::move(h)), cache_(std::make_unique<Cache>()) {}
DYComplex::DYComplex(DYComplex&&) noexcept = default;
DYComplex& DYComplex::operator=(DYComplex&&) noexcept = default;
DYComplex::~DYComplex() = default;

DYComplex DYComplex::identity(HopfPtr h) { return DYComplex(DYKind::Identity, std::move(h)); }

DYComplex DYComplex::tensor_with_r(HopfPtr h, const TensorElement& r) {
  VerifiedRMatrix vr = require_rmatrix(*h, r);
  DYComplex c(DYKind::TensorWithR, std::move(h));
  c.r_ = std::move(vr);
  return c;
}

DYComplex DYComplex::restriction(HopfPtr h, HopfPtr k, SparseMatrix iota) {
  Report rep = verify_hopf_map(*k, *h, iota);
  if (!rep.empty()) throw InvalidStructure("inclusion is not a Hopf map: " + format_report(rep));
  DYComplex c(DYKind::Restriction, std::move(h));
  c.k_ = std::move(k);
  c.iota_ = std::move(iota);
  return c;
}

const VerifiedRMatrix& DYComplex::rmatrix() const {
  if (!r_) throw std::logic_error("complex carries no R-matrix");
  return *r_;
}

void DYComplex::check_degree(std::size_t n, const TensorElement& u) const {
  if (u.degree() != slots(n) || u.dim() != h_->dim()) {
    throw std::invalid_argument("cochain has the wrong tensor degree");
  }
}

const std::vector<std::pair<TensorElement, TensorElement>>& DYComplex::commutation_pairs(std::size_t n) const {
  std::lock_guard lock(cache_->mu);
  auto it = cache_->pairs.find(n);
  if (it != cache_->pairs.end()) return it->second;
  std::vector<std::pair<TensorElement, TensorElement>> out;
  if (n > 0) {
    std::vector<SparseVector> gens;
    if (kind_ == DYKind::Restriction) {
      for (Index g : algebra_generators(k_->algebra())) gens.push_back(iota_.column(g));
    } else {
      for (Index g : algebra_generators(h_->algebra())) gens.push_back(unit_vector(g));
    }
    const std::size_t m = slots(n);
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) {
      perm[i] = kind_ == DYKind::TensorWithR ? (i < n ? 2 * i : 2 * (i - n) + 1) : i;
    }
    for (const auto& g : gens) {
      TensorElement right = coproduct_power(*h_, g, m);
      TensorElement left = permute_slots(right, perm);
      out.emplace_back(std::move(left), std::move(right));
    }
  }
  return cache_->pairs.emplace(n, std::move(out)).first->second;
}

SparseVector DYComplex::residual(std::size_t n, const TensorElement& u) const {
  const Algebra& a = h_->algebra();
  const auto& pairs = commutation_pairs(n);
  VectorBuilder out;
  std::uint64_t offset = 0;
  for (const auto& [left, right] : pairs) {
    TensorElement r = tensor_mul(a, left, u) - tensor_mul(a, u, right);
    for (const auto& [k, c] : r.terms()) out.add(static_cast<Index>(offset + k), c);
    offset += u.space_size();
  }
  return out.finish();
}

bool DYComplex::is_cochain(std::size_t n, const TensorElement& u) const {
  check_degree(n, u);
  return residual(n, u).empty();
}

const std::vector<TensorElement>& DYComplex::cochain_basis(std::size_t n) const {
  std::lock_guard lock(cache_->mu);
  auto it = cache_->bases.find(n);
  if (it != cache_->bases.end()) return it->second;
  const std::size_t dim = h_->dim();
  const std::size_t m = slots(n);
  std::vector<TensorElement> basis;
  if (n == 0) {
    basis.push_back(scalar(dim, 1));
    cache_->coords.emplace(n, std::make_unique<SubspaceCoordinates>(std::vector<SparseVector>{unit_vector(0)}, 1));
  } else {
    TensorElement probe(dim, m);
    if (probe.space_size() > kMaxCochainAmbient) {
      throw UnsupportedDegree("cochain space of degree " + std::to_string(n) + " lives in a space of dimension " +
                              std::to_string(probe.space_size()) + ", above the supported limit");
    }
    const std::size_t space = probe.space_size();
    const std::size_t npairs = commutation_pairs(n).size();
    std::vector<SparseVector> cols(space);
    std::vector<Index> idx(m);
    for (std::size_t key = 0; key < space; ++key) {
      if (key % 1024 == 0) check_deadline("cochain_basis");
      probe.decode(key, idx);
      cols[key] = residual(n, TensorElement::basis(dim, idx));
    }
    SparseMatrix sys = SparseMatrix::from_columns(std::max<std::size_t>(npairs * space, 1), std::move(cols));
    std::vector<SparseVector> ker = kernel_basis(sys);
    for (const auto& v : ker) basis.push_back(TensorElement::from_flat(dim, m, v));
    cache_->coords.emplace(n, std::make_unique<SubspaceCoordinates>(std::move(ker), space));
  }
  return cache_->bases.emplace(n, std::move(basis)).first->second;
}

SparseVector DYComplex::coordinates(std::size_t n, const TensorElement& u) const {
  check_degree(n, u);
  cochain_basis(n);
  std::lock_guard lock(cache_->mu);
  const auto& sc = *cache_->coords.at(n);
  if (n == 0) return u.is_zero() ? SparseVector{} : unit_vector(0, scalar_of(u));
  return sc.coordinates(u.flat());
}

TensorElement DYComplex::from_coordinates(std::size_t n, const SparseVector& v) const {
  const auto& basis = cochain_basis(n);
  TensorElement out(h_->dim(), slots(n));
  for (const auto& e : v) out += basis.at(e.index).scaled(e.value);
  return out;
}

TensorElement DYComplex::coface(std::size_t n, std::size_t i, const TensorElement& u) const {
  check_degree(n, u);
  if (i > n + 1) throw std::out_of_range("coface index out of range");
  const Algebra& a = h_->algebra();
  if (n == 0) return tensor_unit(a, slots(1)).scaled(scalar_of(u));
  if (kind_ != DYKind::TensorWithR) {
    if (i == 0) return embed_slots(a, u, n + 1, iota_slots(1, n));
    if (i == n + 1) return embed_slots(a, u, n + 1, iota_slots(0, n));
    return iterated_coproduct(*h_, u, i - 1, 1);
  }
  const TensorElement& r = r_->r;
  const std::size_t m = 2 * n + 2;
  if (i == 0) {
    // 1 ⊗ R¹ ⊗ Δ^{(n-1)}(R²) spread over x_2..x_{n+1}, times 1 ⊗ 1 ⊗ u.
    std::vector<std::size_t> sl{1};
    for (std::size_t j = 1; j <= n; ++j) sl.push_back(2 * j);
    TensorElement e = embed_slots(a, iterated_coproduct(*h_, r, 1, n - 1), m, sl);
    return tensor_mul(a, e, embed_slots(a, u, m, iota_slots(2, 2 * n)));
  }
  if (i == n + 1) {
    // Δ^{(n-1)}(R¹) over y_1..y_n and R² in x_{n+1}, times u ⊗ 1 ⊗ 1.
    std::vector<std::size_t> sl;
    for (std::size_t j = 0; j < n; ++j) sl.push_back(2 * j + 1);
    sl.push_back(2 * n);
    TensorElement e = embed_slots(a, iterated_coproduct(*h_, r, 0, n - 1), m, sl);
    return tensor_mul(a, e, embed_slots(a, u, m, iota_slots(0, 2 * n)));
  }
  // Interleaved coproduct on block i-1, then R in slots (2i-1, 2i).
  const std::size_t x = 2 * (i - 1);
  TensorElement v = iterated_coproduct(*h_, iterated_coproduct(*h_, u, x, 1), x + 2, 1);
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[x + 1], perm[x + 2]);
  v = permute_slots(v, perm);
  const std::size_t rs[2] = {2 * i - 1, 2 * i};
  return tensor_mul(a, v, embed_slots(a, r, m, rs));
}

TensorElement DYComplex::codegeneracy(std::size_t n, std::size_t i, const TensorElement& u) const {
  check_degree(n, u);
  if (n == 0 || i >= n) throw std::out_of_range("codegeneracy index out of range");
  const SparseVector& eps = h_->counit();
  if (kind_ != DYKind::TensorWithR) return contract_at(u, i, eps);
  return contract_at(contract_at(u, 2 * i + 1, eps), 2 * i, eps);
}

TensorElement DYComplex::differential(std::size_t n, const TensorElement& u) const {
  TensorElement out(h_->dim(), slots(n + 1));
  for (std::size_t i = 0; i <= n + 1; ++i) {
    TensorElement f = coface(n, i, u);
    if (i % 2 == 0) {
      out += f;
    } else {
      out -= f;
    }
  }
  return out;
}

SparseMatrix DYComplex::differential_matrix(std::size_t n) const {
  const auto& src = cochain_basis(n);
  std::vector<SparseVector> cols;
  for (const auto& b : src) cols.push_back(coordinates(n + 1, differential(n, b)));
  return SparseMatrix::from_columns(cochain_dim(n + 1), std::move(cols));
}

SparseMatrix DYComplex::coface_matrix(std::size_t n, std::size_t i) const {
  const auto& src = cochain_basis(n);
  std::vector<SparseVector> cols;
  for (const auto& b : src) cols.push_back(coordinates(n + 1, coface(n, i, b)));
  return SparseMatrix::from_columns(cochain_dim(n + 1), std::move(cols));
}

SparseMatrix DYComplex::codegeneracy_matrix(std::size_t n, std::size_t i) const {
  const auto& src = cochain_basis(n);
  std::vector<SparseVector> cols;
  for (const auto& b : src) cols.push_back(coordinates(n - 1, codegeneracy(n, i, b)));
  return SparseMatrix::from_columns(cochain_dim(n - 1), std::move(cols));
}

CohomologyInfo DYComplex::cohomology(std::size_t n) const {
  CohomologyInfo info;
  info.degree = n;
  const auto& cn = cochain_basis(n);
  info.cochain_dim = cn.size();
  if (n > 0) {
    std::vector<SparseVector> in;
    for (const auto& b : cochain_basis(n - 1)) {
      check_deadline("cohomology");
      in.push_back(coordinates(n, differential(n - 1, b)));
    }
    CheckedRank cr = checked_rank(in, cn.size());
    info.rank_in = cr.exact;
    info.modular_agree = info.modular_agree && cr.agree();
  }
  std::vector<TensorElement> out;
  out.reserve(cn.size());
  for (const auto& b : cn) {
    check_deadline("cohomology");
    TensorElement img = differential(n, b);
    if (!residual(n + 1, img).empty()) {
      throw ConsistencyFailure("δ image escapes the degree-" + std::to_string(n + 1) + " cochain space");
    }
    out.push_back(std::move(img));
  }
  auto [vecs, width] = compress(out);
  CheckedRank cr = checked_rank(vecs, width);
  info.rank_out = cr.exact;
  info.modular_agree = info.modular_agree && cr.agree();
  info.dim = info.cochain_dim - info.rank_out - info.rank_in;
  return info;
}

std::vector<TensorElement> DYComplex::cocycle_basis(std::size_t n) const {
  const auto& cn = cochain_basis(n);
  std::vector<TensorElement> imgs;
  for (const auto& b : cn) imgs.push_back(differential(n, b));
  auto [vecs, width] = compress(imgs);
  SparseMatrix m = SparseMatrix::from_columns(std::max<std::size_t>(width, 1), std::move(vecs));
  std::vector<TensorElement> out;
  for (const auto& k : kernel_basis(m)) out.push_back(from_coordinates(n, k));
  return out;
}

TensorElement DYComplex::normalize(std::size_t n, const TensorElement& u) const {
  check_degree(n, u);
  auto d = [&](std::size_t k, std::size_t i, const TensorElement& x) { return coface(k, i, x); };
  auto s = [&](std::size_t k, std::size_t i, const TensorElement& x) { return codegeneracy(k, i, x); };
  switch (n) {
    case 1:
      return u - d(0, 0, s(1, 0, u));
    case 2:
      return u - d(1, 0, s(2, 0, u)) - d(1, 1, s(2, 1, u)) + d(1, 0, s(2, 1, u));
    case 3:
      return u - d(2, 0, s(3, 0, u)) - d(2, 1, s(3, 1, u)) - d(2, 2, s(3, 2, u)) + d(2, 0, s(3, 1, u)) +
             d(2, 1, s(3, 2, u)) + d(2, 0, d(1, 1, s(2, 0, s(3, 2, u)))) - d(2, 0, s(3, 2, u));
    default:
      throw UnsupportedDegree("normalization is implemented for degrees 1 to 3");
  }
}

H2Decomposition decompose_h2_tensor(const DYComplex& c, const TensorElement& u) {
  if (c.kind() != DYKind::TensorWithR) throw std::invalid_argument("decomposition needs the tensor complex");
  if (!c.is_cochain(2, u) || !c.differential(2, u).is_zero()) {
    throw std::invalid_argument("u is not a degree-2 cocycle");
  }
  const HopfAlgebra& h = c.hopf();
  const SparseVector& eps = h.counit();
  H2Decomposition out;
  out.a = contract_at(contract_at(u, 3, eps), 1, eps);
  out.b = contract_at(contract_at(u, 2, eps), 0, eps);
  TensorElement first = contract_at(contract_at(u, 3, eps), 0, eps);
  TensorElement second = flip(contract_at(contract_at(u, 2, eps), 1, eps));
  out.t = first - tensor_mul(h.algebra(), second, c.rmatrix().r);
  return out;
}

TensorElement cocycle_from_tangent(const DYComplex& c, const TensorElement& t) {
  if (c.kind() != DYKind::TensorWithR) throw std::invalid_argument("needs the tensor complex");
  const HopfAlgebra& h = c.hopf();
  if (t.degree() != 2 || !is_tangent(h, c.rmatrix().r, t)) {
    throw std::invalid_argument("T is not in the tangent space");
  }
  const std::size_t sl[2] = {1, 2};
  return embed_slots(h.algebra(), t, 4, sl);
}

}  // namespace hopfdy
