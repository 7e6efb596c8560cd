#include "hopfdy/rmatrix.hpp"

#include <array>

#include "hopfdy/catalog.hpp"
#include "hopfdy/errors.hpp"
#include "hopfdy/exactlin.hpp"

namespace hopfdy {

namespace {

constexpr std::array<std::size_t, 2> k12{0, 1};
constexpr std::array<std::size_t, 2> k13{0, 2};
constexpr std::array<std::size_t, 2> k23{1, 2};

TensorElement basis2(std::size_t n, Index a, Index b) {
  const Index idx[2] = {a, b};
  return TensorElement::basis(n, idx);
}

/// Left-hand sides of the three linearized equations for T at R, flattened
/// into one vector: [T Δ(h) − Δ^op(h) T]_h, (Δ⊗id)T − T_13 R_23 − R_13 T_23,
/// (id⊗Δ)T − T_13 R_12 − R_13 T_12.
SparseVector tangent_residual(const HopfAlgebra& h, const TensorElement& r, const TensorElement& t,
                              const std::vector<TensorElement>& deltas) {
  const Algebra& a = h.algebra();
  const std::size_t n = h.dim();
  VectorBuilder out;
  std::size_t offset = 0;
  auto push = [&](const TensorElement& u) {
    for (const auto& [k, c] : u.terms()) out.add(static_cast<Index>(offset + k), c);
    offset += u.space_size();
  };
  for (std::size_t i = 0; i < n; ++i) {
    push(tensor_mul(a, t, deltas[i]) - tensor_mul(a, flip(deltas[i]), t));
  }
  TensorElement r12 = embed_slots(a, r, 3, k12), r13 = embed_slots(a, r, 3, k13),
                r23 = embed_slots(a, r, 3, k23);
  TensorElement t12 = embed_slots(a, t, 3, k12), t13 = embed_slots(a, t, 3, k13),
                t23 = embed_slots(a, t, 3, k23);
  push(iterated_coproduct(h, t, 0, 1) - tensor_mul(a, t13, r23) - tensor_mul(a, r13, t23));
  push(iterated_coproduct(h, t, 1, 1) - tensor_mul(a, t13, r12) - tensor_mul(a, r13, t12));
  return out.finish();
}

std::vector<TensorElement> basis_coproducts(const HopfAlgebra& h) {
  std::vector<TensorElement> out;
  for (Index i = 0; i < h.dim(); ++i) out.push_back(h.coproduct_of(unit_vector(i)));
  return out;
}

}  // namespace

Report RMatrixReport::all() const {
  Report r;
  for (const Report* part : {&quasi_cocommutativity, &hexagon1, &hexagon2, &counit_normalization}) {
    r.insert(r.end(), part->begin(), part->end());
  }
  if (!inverse) r.push_back({"invertibility", {}, "R has no inverse"});
  return r;
}

RMatrixReport check_rmatrix(const HopfAlgebra& h, const TensorElement& r) {
  const Algebra& a = h.algebra();
  const std::size_t n = h.dim();
  if (r.degree() != 2 || r.dim() != n) throw std::invalid_argument("R must be a degree-2 tensor over H");
  RMatrixReport rep;
  for (Index i = 0; i < n; ++i) {
    TensorElement d = h.coproduct_of(unit_vector(i));
    if (tensor_mul(a, r, d) != tensor_mul(a, flip(d), r)) {
      rep.quasi_cocommutativity.push_back(
          {"quasi-cocommutativity", {i}, "R Δ(" + a.labels()[i] + ") != Δop(" + a.labels()[i] + ") R"});
    }
  }
  TensorElement r12 = embed_slots(a, r, 3, k12), r13 = embed_slots(a, r, 3, k13),
                r23 = embed_slots(a, r, 3, k23);
  if (iterated_coproduct(h, r, 0, 1) != tensor_mul(a, r13, r23)) {
    rep.hexagon1.push_back({"hexagon (Δ⊗id)R = R13 R23", {}, ""});
  }
  if (iterated_coproduct(h, r, 1, 1) != tensor_mul(a, r13, r12)) {
    rep.hexagon2.push_back({"hexagon (id⊗Δ)R = R13 R12", {}, ""});
  }
  if (contract_at(r, 0, h.counit()).as_vector() != a.unit()) {
    rep.counit_normalization.push_back({"counit normalization (ε⊗id)R = 1", {}, ""});
  }
  if (contract_at(r, 1, h.counit()).as_vector() != a.unit()) {
    rep.counit_normalization.push_back({"counit normalization (id⊗ε)R = 1", {}, ""});
  }

  const TensorElement one = tensor_unit(a, 2);
  TensorElement cand = apply_at(r, 0, h.antipode());
  if (tensor_mul(a, r, cand) == one && tensor_mul(a, cand, r) == one) {
    rep.inverse = std::move(cand);
    return rep;
  }
  // Solve R X = 1 ⊗ 1 through left multiplication on H ⊗ H.
  const std::size_t n2 = n * n;
  std::vector<SparseVector> cols(n2);
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) cols[p * n + q] = tensor_mul(a, r, basis2(n, p, q)).flat();
  }
  SparseMatrix left = SparseMatrix::from_columns(n2, std::move(cols));
  if (auto x = solve(left, one.flat())) {
    TensorElement inv = TensorElement::from_flat(n, 2, *x);
    if (tensor_mul(a, inv, r) == one) rep.inverse = std::move(inv);
  }
  return rep;
}

VerifiedRMatrix require_rmatrix(const HopfAlgebra& h, const TensorElement& r) {
  RMatrixReport rep = check_rmatrix(h, r);
  if (!rep.verified()) throw InvalidRMatrix(format_report(rep.all()));
  return {r, *rep.inverse};
}

TangentBasis tangent_space(const HopfAlgebra& h, const TensorElement& r) {
  require_rmatrix(h, r);
  const std::size_t n = h.dim();
  const auto deltas = basis_coproducts(h);
  // Equations as rows: one column per unknown coefficient of T.
  std::vector<SparseVector> cols(n * n);
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) {
      check_deadline("tangent_space");
      cols[p * n + q] = tangent_residual(h, r, basis2(n, p, q), deltas);
    }
  }
  const std::size_t rows = n * n * n + 2 * n * n * n;
  SparseMatrix sys = SparseMatrix::from_columns(rows, std::move(cols));
  TangentBasis out{r, {}};
  for (auto& v : kernel_basis(sys)) {
    TensorElement t = TensorElement::from_flat(n, 2, v);
    if (!contract_at(t, 0, h.counit()).is_zero() || !contract_at(t, 1, h.counit()).is_zero()) {
      throw ConsistencyFailure("tangent vector with nonzero counit contraction");
    }
    out.vectors.push_back(std::move(t));
  }
  return out;
}

bool is_tangent(const HopfAlgebra& h, const TensorElement& r, const TensorElement& t) {
  return tangent_residual(h, r, t, basis_coproducts(h)).empty();
}

TensorElement trivial_r(const HopfAlgebra& h) { return tensor_unit(h.algebra(), 2); }

TensorElement bk_r0(int k) {
  const std::size_t n = std::size_t{2} << k;
  const Index g = bk::g();
  const Rational half(1, 2);
  // e_+ ⊗ 1 + e_- ⊗ g = ½(1⊗1 + g⊗1 + 1⊗g − g⊗g)
  return basis2(n, 0, 0).scaled(half) + basis2(n, g, 0).scaled(half) + basis2(n, 0, g).scaled(half) -
         basis2(n, g, g).scaled(half);
}

TensorElement bk_r_lambda(int k, const std::vector<std::vector<Rational>>& lambda) {
  const auto uk = static_cast<std::size_t>(k);
  if (lambda.size() != uk) throw std::invalid_argument("λ must be k x k");
  HopfPtr h = build_bk(k);
  const Algebra& a = h->algebra();
  const std::size_t n = h->dim();
  TensorElement acc = bk_r0(k);
  for (int i = 1; i <= k; ++i) {
    const auto& row = lambda[static_cast<std::size_t>(i - 1)];
    if (row.size() != uk) throw std::invalid_argument("λ must be k x k");
    for (int j = 1; j <= k; ++j) {
      const Rational& l = row[static_cast<std::size_t>(j - 1)];
      if (l.is_zero()) continue;
      Index xjg = bk::monomial(1u << (j - 1), 1);
      TensorElement factor = tensor_unit(a, 2) + basis2(n, bk::x(i), xjg).scaled(l);
      acc = tensor_mul(a, acc, factor);
    }
  }
  return acc;
}

std::vector<TensorElement> bk_reference_tangent_basis(int k) {
  HopfPtr h = build_bk(k);
  const std::size_t n = h->dim();
  TensorElement r0 = bk_r0(k);
  std::vector<TensorElement> out;
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      out.push_back(tensor_mul(h->algebra(), r0, basis2(n, bk::x(i), bk::monomial(1u << (j - 1), 1))));
    }
  }
  return out;
}

}  // namespace hopfdy
