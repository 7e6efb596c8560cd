#include "hopfdy/double.hpp"

#include <map>

#include "hopfdy/errors.hpp"
#include "hopfdy/exactlin.hpp"

namespace hopfdy {

namespace {

/// Straightened e_b e^c = Σ coef (e^p ⊗ e_j) as a vector on the double basis.
/// Uses z ↦ e^c(S(h1) z h3) for the middle functional.
std::vector<SparseVector> straighten_table(const HopfAlgebra& h) {
  const Index n = static_cast<Index>(h.dim());
  const Algebra& a = h.algebra();
  // rows[(i, k)][c] = functional p ↦ coefficient of e_c in S(e_i) e_p e_k.
  std::map<std::pair<Index, Index>, SparseMatrix> rows;
  auto functionals = [&](Index i, Index k) -> const SparseMatrix& {
    auto it = rows.find({i, k});
    if (it != rows.end()) return it->second;
    SparseMatrix m = a.left_mult(h.antipode().column(i)) * a.right_mult(unit_vector(k));
    return rows.emplace(std::make_pair(i, k), m.transpose()).first->second;
  };
  std::vector<SparseVector> out(std::size_t{n} * n);
  Index idx[3];
  for (Index b = 0; b < n; ++b) {
    TensorElement d3 = coproduct_power(h, unit_vector(b), 3);
    for (Index c = 0; c < n; ++c) {
      VectorBuilder vb;
      for (const auto& [key, coef] : d3.terms()) {
        d3.decode(key, idx);
        const SparseMatrix& f = functionals(idx[0], idx[2]);
        for (const auto& e : f.column(c)) vb.add(e.index * n + idx[1], coef * e.value);
      }
      out[b * n + c] = vb.finish();
    }
  }
  return out;
}

/// Solves m ∘ (T ⊗ id) ∘ Δ = η ∘ ε for T.
SparseMatrix solve_antipode(const Algebra& a, const std::vector<SparseVector>& comult,
                            const SparseVector& counit) {
  const Index n = static_cast<Index>(a.dim());
  // Unknown T_{y,x} (coefficient of e_y in T(e_x)) has index x * n + y;
  // equation (x, z) has index x * n + z.
  std::vector<SparseMatrix::Triplet> trip;
  for (Index x = 0; x < n; ++x) {
    for (const auto& t : comult[x]) {
      Index x1 = t.index / n, x2 = t.index % n;
      for (Index y = 0; y < n; ++y) {
        for (const auto& e : a.product(y, x2)) trip.push_back({x * n + e.index, x1 * n + y, t.value * e.value});
      }
    }
  }
  const std::size_t n2 = std::size_t{n} * n;
  SparseMatrix sys = SparseMatrix::from_triplets(n2, n2, trip);
  VectorBuilder rhs;
  for (const auto& c : counit) {
    for (const auto& u : a.unit()) rhs.add(c.index * n + u.index, c.value * u.value);
  }
  auto sol = solve(sys, rhs.finish());
  if (!sol) throw InvalidStructure("the double has no antipode");
  std::vector<SparseMatrix::Triplet> st;
  for (const auto& e : *sol) st.push_back({e.index % n, e.index / n, e.value});
  return SparseMatrix::from_triplets(n, n, st);
}

}  // namespace

AlgebraMap DoubleAlgebra::dual_embedding() const {
  const Index n = static_cast<Index>(base_dim());
  std::vector<SparseVector> cols(n);
  for (Index a = 0; a < n; ++a) {
    for (const auto& u : base->algebra().unit()) cols[a].push_back({index(a, u.index), u.value});
  }
  return {dual->algebra_ptr(), hopf->algebra_ptr(), SparseMatrix::from_columns(std::size_t{n} * n, cols)};
}

AlgebraMap DoubleAlgebra::base_embedding() const {
  const Index n = static_cast<Index>(base_dim());
  std::vector<SparseVector> cols(n);
  for (Index b = 0; b < n; ++b) {
    for (const auto& u : base->counit()) cols[b].push_back({index(u.index, b), u.value});
    canonicalize(cols[b]);
  }
  return {base->algebra_ptr(), hopf->algebra_ptr(), SparseMatrix::from_columns(std::size_t{n} * n, cols)};
}

DoubleAlgebra drinfeld_double(HopfPtr h) {
  const Index n = static_cast<Index>(h->dim());
  const Index nd = n * n;
  auto dual = std::make_shared<const HopfAlgebra>(dual_hopf(*h, true));
  const Algebra& da = dual->algebra();
  const Algebra& ha = h->algebra();
  const auto straight = straighten_table(*h);

  std::vector<std::string> labels(nd);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) labels[a * n + b] = da.labels()[a] + ha.labels()[b];
  }
  // (e^a e_b)(e^c e_d) = Σ s (e^a e^p) ⊗ (e_j e_d) over e_b e^c = Σ s e^p e_j.
  std::vector<SparseVector> mult(std::size_t{nd} * nd);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        const SparseVector& st = straight[b * n + c];
        for (Index d = 0; d < n; ++d) {
          VectorBuilder vb;
          for (const auto& e : st) {
            Index p = e.index / n, j = e.index % n;
            const SparseVector& left = da.product(a, p);
            const SparseVector& right = ha.product(j, d);
            for (const auto& l : left) {
              for (const auto& r : right) vb.add(l.index * n + r.index, e.value * l.value * r.value);
            }
          }
          mult[(a * n + b) * nd + (c * n + d)] = vb.finish();
        }
      }
    }
  }
  VectorBuilder unit;
  for (const auto& c : h->counit()) {
    for (const auto& u : ha.unit()) unit.add(c.index * n + u.index, c.value * u.value);
  }
  auto alg = std::make_shared<const Algebra>(std::move(labels), std::move(mult), unit.finish());

  // Δ(e^a e_b) = Σ (e^{a1} e_{b1}) ⊗ (e^{a2} e_{b2}); ε(e^a e_b) = 1(a) ε(b).
  std::vector<SparseVector> comult(nd);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      VectorBuilder vb;
      for (const auto& da_e : dual->coproduct(a)) {
        Index a1 = da_e.index / n, a2 = da_e.index % n;
        for (const auto& hb : h->coproduct(b)) {
          Index b1 = hb.index / n, b2 = hb.index % n;
          vb.add((a1 * n + b1) * nd + (a2 * n + b2), da_e.value * hb.value);
        }
      }
      comult[a * n + b] = vb.finish();
    }
  }
  VectorBuilder counit;
  for (const auto& u : ha.unit()) {
    for (const auto& c : h->counit()) counit.add(u.index * n + c.index, u.value * c.value);
  }
  SparseVector cu = counit.finish();
  SparseMatrix anti = solve_antipode(*alg, comult, cu);
  auto hopf = std::make_shared<const HopfAlgebra>(std::move(alg), std::move(comult), std::move(cu),
                                                  std::move(anti));
  return {std::move(hopf), std::move(h), std::move(dual)};
}

SparseVector ell_plus(const HopfAlgebra& h, const VerifiedRMatrix& r, const SparseVector& alpha) {
  (void)h;
  return contract_at(r.r, 1, alpha).as_vector();
}

SparseVector ell_minus(const HopfAlgebra& h, const VerifiedRMatrix& r, const SparseVector& beta) {
  (void)h;
  return contract_at(r.r_inverse, 0, beta).as_vector();
}

namespace {

AlgebraMap ell_map(const DoubleAlgebra& d, const VerifiedRMatrix& r, bool plus) {
  const Index n = static_cast<Index>(d.base_dim());
  const Algebra& ha = d.base->algebra();
  std::vector<SparseVector> cols(std::size_t{n} * n);
  for (Index a = 0; a < n; ++a) {
    SparseVector l = plus ? ell_plus(*d.base, r, unit_vector(a)) : ell_minus(*d.base, r, unit_vector(a));
    for (Index b = 0; b < n; ++b) cols[d.index(a, b)] = ha.multiply(l, unit_vector(b));
  }
  return {d.hopf->algebra_ptr(), d.base->algebra_ptr(), SparseMatrix::from_columns(n, std::move(cols))};
}

}  // namespace

AlgebraMap ell_plus_map(const DoubleAlgebra& d, const VerifiedRMatrix& r) { return ell_map(d, r, true); }
AlgebraMap ell_minus_map(const DoubleAlgebra& d, const VerifiedRMatrix& r) { return ell_map(d, r, false); }

CoefficientModule coeff_tensor_product(const DoubleAlgebra& d, AlgebraPtr dd, const VerifiedRMatrix& r) {
  const Index n = static_cast<Index>(d.base_dim());
  const Index nd = n * n;
  if (dd->dim() != std::size_t{nd} * nd) throw std::invalid_argument("dd must be D(H) ⊗ D(H)");
  const HopfAlgebra& h = *d.base;
  AlgebraMap lp = ell_plus_map(d, r), lm = ell_minus_map(d, r);
  // ψ ↦ L ▷ ψ ◁ Rt is ψ ↦ (z ↦ ψ(Rt z L)).
  std::vector<SparseMatrix> right(nd), left(nd);
  for (Index x = 0; x < nd; ++x) {
    right[x] = coregular_right_matrix(h, h.antipode_of(lp.matrix.column(x)));
    left[x] = coregular_left_matrix(h, lm.matrix.column(x));
  }
  ModuleRep m{std::move(dd), n, {}};
  m.action.reserve(std::size_t{nd} * nd);
  for (Index x = 0; x < nd; ++x) {
    for (Index y = 0; y < nd; ++y) {
      check_deadline("coeff_tensor_product");
      // Both actions commute, so the order of composition is immaterial.
      m.action.push_back(left[y] * right[x]);
    }
  }
  Report rep = verify_module(m);
  if (!rep.empty()) throw InvalidStructure("H* coefficient module: " + format_report(rep));
  return {std::move(m), "tensor_product_coeff"};
}

CoefficientModule coeff_restriction(const DoubleAlgebra& d, const HopfAlgebra& k, const SparseMatrix& iota) {
  const HopfAlgebra& h = *d.base;
  const Index n = static_cast<Index>(h.dim());
  Report hm = verify_hopf_map(k, h, iota);
  if (!hm.empty()) throw InvalidStructure("inclusion is not a Hopf map: " + format_report(hm));

  // Stacked equations f ◁ ι(k) − ε(k) f = 0, one block of n rows per k.
  std::vector<SparseVector> eq_cols(n);
  for (Index kb = 0; kb < k.dim(); ++kb) {
    SparseMatrix blk = coregular_right_matrix(h, iota.column(kb)) -
                       SparseMatrix::identity(n).scaled(coefficient(k.counit(), kb));
    for (Index p = 0; p < n; ++p) {
      for (const auto& e : blk.column(p)) eq_cols[p].push_back({kb * n + e.index, e.value});
    }
  }
  SparseMatrix eqs = SparseMatrix::from_columns(k.dim() * n, std::move(eq_cols));
  SubspaceCoordinates sub(kernel_basis(eqs), n);

  // Full H* actions: φ-part via Δ²(z), h-part by ▷.
  std::vector<SparseMatrix> phi(n), hh(n);
  std::vector<TensorElement> d3(n);
  for (Index c = 0; c < n; ++c) d3[c] = coproduct_power(h, unit_vector(c), 3);
  Index idx[3];
  for (Index a = 0; a < n; ++a) {
    std::vector<SparseMatrix::Triplet> trip;
    for (Index c = 0; c < n; ++c) {
      for (const auto& [key, coef] : d3[c].terms()) {
        d3[c].decode(key, idx);
        SparseVector w = h.algebra().multiply(h.antipode().column(idx[0]), unit_vector(idx[2]));
        Rational v = coefficient(w, a);
        if (!v.is_zero()) trip.push_back({c, idx[1], coef * v});
      }
    }
    phi[a] = SparseMatrix::from_triplets(n, n, trip);
    hh[a] = coregular_left_matrix(h, unit_vector(a));
  }
  const std::size_t dim = sub.dim();
  const SparseMatrix incl = sub.inclusion();
  ModuleRep m{d.hopf->algebra_ptr(), dim, {}};
  try {
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        SparseMatrix full = phi[a] * hh[b] * incl;
        std::vector<SparseVector> cols(dim);
        for (std::size_t j = 0; j < dim; ++j) cols[j] = sub.coordinates(full.column(j));
        m.action.push_back(SparseMatrix::from_columns(dim, std::move(cols)));
      }
    }
  } catch (const ConsistencyFailure&) {
    throw InvalidStructure("Hom_K(H, k) is not stable under the D(H) action");
  }
  Report rep = verify_module(m);
  if (!rep.empty()) throw InvalidStructure("restriction coefficient module: " + format_report(rep));
  return {std::move(m), "restriction_coeff"};
}

ModuleRep center_module_from_rmatrix(const DoubleAlgebra& d, const VerifiedRMatrix& r, const ModuleRep& x,
                                     CenterVariant variant) {
  if (!same_algebra(*x.algebra, d.base->algebra())) throw std::invalid_argument("module is not over H");
  const std::size_t nd = d.hopf->dim();
  AlgebraMap ell = variant == CenterVariant::InverseBraiding ? ell_minus_map(d, r) : ell_plus_map(d, r);
  ModuleRep m{d.hopf->algebra_ptr(), x.dim, {}};
  for (Index i = 0; i < nd; ++i) {
    const SparseVector& l = ell.matrix.column(i);
    if (variant == CenterVariant::DualBraiding) {
      m.action.push_back(x.act(d.base->antipode_of(l)).transpose());
    } else {
      m.action.push_back(x.act(l));
    }
  }
  Report rep = verify_module(m);
  if (!rep.empty()) throw InvalidStructure("extended module: " + format_report(rep));
  return m;
}

void require_trivial_twist(const HopfAlgebra& h, const TensorElement& j) {
  if (j != tensor_unit(h.algebra(), 2)) {
    throw std::invalid_argument("only the trivial twist J = 1 ⊗ 1 is supported");
  }
}

}  // namespace hopfdy
