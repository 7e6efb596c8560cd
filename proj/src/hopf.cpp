#include "hopfdy/hopf.hpp"

#include <stdexcept>

#include "hopfdy/errors.hpp"
#include "hopfdy/exactlin.hpp"

namespace hopfdy {

HopfAlgebra::HopfAlgebra(AlgebraPtr algebra, std::vector<SparseVector> comult,
                         SparseVector counit, SparseMatrix antipode,
                         std::optional<SparseMatrix> antipode_inverse)
    : algebra_(std::move(algebra)),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  const std::size_t n = dim();
  if (comult_.size() != n) throw InvalidStructure("coproduct table has wrong size");
  for (auto& v : comult_) {
    canonicalize(v);
    if (!v.empty() && v.back().index >= n * n) throw InvalidStructure("coproduct index out of range");
  }
  canonicalize(counit_);
  if (!counit_.empty() && counit_.back().index >= n) throw InvalidStructure("counit index out of range");
  if (antipode_.rows() != n || antipode_.cols() != n) throw InvalidStructure("antipode has wrong shape");
  if (antipode_inverse) {
    antipode_inv_ = std::move(*antipode_inverse);
  } else {
    auto inv = inverse(antipode_);
    if (!inv) throw InvalidStructure("antipode is not invertible");
    antipode_inv_ = std::move(*inv);
  }
}

TensorElement HopfAlgebra::coproduct_of(const SparseVector& h) const {
  VectorBuilder b;
  for (const auto& e : h) b.add_scaled(comult_[e.index], e.value);
  return TensorElement::from_flat(dim(), 2, b.finish());
}

namespace {

bool equal_vectors(const SparseVector& a, const SparseVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].index != b[i].index || a[i].value != b[i].value) return false;
  }
  return true;
}

TensorElement coproduct_at(const HopfAlgebra& h, const TensorElement& u, std::size_t slot) {
  const std::size_t d = u.degree();
  if (slot >= d) throw std::out_of_range("coproduct slot out of range");
  const std::size_t n = h.dim();
  TensorElement shape(n, d + 1);
  std::vector<Index> in(d), out(d + 1);
  std::vector<TensorElement::Term> terms;
  for (const auto& [k, c] : u.terms()) {
    u.decode(k, in);
    for (std::size_t s = 0; s < slot; ++s) out[s] = in[s];
    for (std::size_t s = slot + 1; s < d; ++s) out[s + 1] = in[s];
    for (const auto& e : h.coproduct(in[slot])) {
      out[slot] = static_cast<Index>(e.index / n);
      out[slot + 1] = static_cast<Index>(e.index % n);
      terms.emplace_back(shape.encode(out), c * e.value);
    }
  }
  return TensorElement::from_terms(n, d + 1, std::move(terms));
}

}  // namespace

TensorElement iterated_coproduct(const HopfAlgebra& h, const TensorElement& u, std::size_t slot,
                                 std::size_t times) {
  if (slot >= u.degree()) throw std::out_of_range("coproduct slot out of range");
  TensorElement r = u;
  for (std::size_t t = 0; t < times; ++t) r = coproduct_at(h, r, slot);
  return r;
}

TensorElement coproduct_power(const HopfAlgebra& h, const SparseVector& x, std::size_t n) {
  if (n == 0) throw std::invalid_argument("coproduct_power needs n >= 1");
  return iterated_coproduct(h, TensorElement::from_vector(h.dim(), x), 0, n - 1);
}

TensorElement apply_counit_at(const HopfAlgebra& h, const TensorElement& u, std::size_t slot) {
  return contract_at(u, slot, h.counit());
}

TensorElement apply_antipode_at(const HopfAlgebra& h, const TensorElement& u, std::size_t slot) {
  return apply_at(u, slot, h.antipode());
}

SparseMatrix coregular_left_matrix(const HopfAlgebra& h, const SparseVector& x) {
  // Column p is the functional z ↦ e^p(z x); its value at e_c is the
  // coefficient of e_p in e_c x.
  const std::size_t n = h.dim();
  std::vector<SparseMatrix::Triplet> trip;
  for (Index c = 0; c < n; ++c) {
    for (const auto& e : h.algebra().multiply(unit_vector(c), x)) trip.push_back({c, e.index, e.value});
  }
  return SparseMatrix::from_triplets(n, n, trip);
}

SparseMatrix coregular_right_matrix(const HopfAlgebra& h, const SparseVector& x) {
  const std::size_t n = h.dim();
  std::vector<SparseMatrix::Triplet> trip;
  for (Index c = 0; c < n; ++c) {
    for (const auto& e : h.algebra().multiply(x, unit_vector(c))) trip.push_back({c, e.index, e.value});
  }
  return SparseMatrix::from_triplets(n, n, trip);
}

SparseVector coregular_left(const HopfAlgebra& h, const SparseVector& x, const SparseVector& f) {
  return coregular_left_matrix(h, x).apply(f);
}

SparseVector coregular_right(const HopfAlgebra& h, const SparseVector& f, const SparseVector& x) {
  return coregular_right_matrix(h, x).apply(f);
}

ModuleRep trivial_module(const HopfAlgebra& h) {
  ModuleRep m{h.algebra_ptr(), 1, {}};
  for (Index i = 0; i < h.dim(); ++i) {
    SparseMatrix a(1, 1);
    Rational c = coefficient(h.counit(), i);
    if (!c.is_zero()) a.set_column(0, unit_vector(0, c));
    m.action.push_back(std::move(a));
  }
  return m;
}

Report verify_hopf(const HopfAlgebra& h, std::size_t exhaustive_limit) {
  Report rep = verify_algebra(h.algebra());
  const Algebra& a = h.algebra();
  const Index n = static_cast<Index>(h.dim());
  const SparseMatrix id = SparseMatrix::identity(n);

  for (Index i = 0; i < n; ++i) {
    TensorElement d = TensorElement::from_flat(n, 2, h.coproduct(i));
    if (coproduct_at(h, d, 0) != coproduct_at(h, d, 1)) rep.push_back({"coassociativity", {i}, ""});
    if (contract_at(d, 0, h.counit()).as_vector() != unit_vector(i)) {
      rep.push_back({"left counit", {i}, ""});
    }
    if (contract_at(d, 1, h.counit()).as_vector() != unit_vector(i)) {
      rep.push_back({"right counit", {i}, ""});
    }
  }

  TensorElement unit2 = tensor_unit(a, 2);
  if (h.coproduct_of(a.unit()) != unit2) rep.push_back({"coproduct preserves unit", {}, ""});
  if (!h.counit_of(a.unit()).is_one()) rep.push_back({"counit preserves unit", {}, ""});

  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Rational lhs = h.counit_of(a.product(i, j));
      Rational rhs = coefficient(h.counit(), i) * coefficient(h.counit(), j);
      if (lhs != rhs) rep.push_back({"counit multiplicative", {i, j}, ""});
    }
  }

  std::vector<Index> left;
  if (n <= exhaustive_limit) {
    for (Index i = 0; i < n; ++i) left.push_back(i);
  } else {
    left = algebra_generators(a);
  }
  std::vector<TensorElement> deltas;
  deltas.reserve(n);
  for (Index i = 0; i < n; ++i) deltas.push_back(TensorElement::from_flat(n, 2, h.coproduct(i)));
  for (Index i : left) {
    for (Index j = 0; j < n; ++j) {
      check_deadline("verify_hopf");
      TensorElement lhs = h.coproduct_of(a.product(i, j));
      TensorElement rhs = tensor_mul(a, deltas[i], deltas[j]);
      if (lhs != rhs) rep.push_back({"coproduct multiplicative", {i, j}, ""});
    }
  }

  for (Index i = 0; i < n; ++i) {
    SparseVector expect = scale(a.unit(), coefficient(h.counit(), i));
    VectorBuilder l, r;
    for (const auto& e : h.coproduct(i)) {
      Index x = static_cast<Index>(e.index / n), y = static_cast<Index>(e.index % n);
      l.add_scaled(a.multiply(h.antipode().column(x), unit_vector(y)), e.value);
      r.add_scaled(a.multiply(unit_vector(x), h.antipode().column(y)), e.value);
    }
    if (!equal_vectors(l.finish(), expect)) rep.push_back({"antipode (S ⊗ id)", {i}, ""});
    if (!equal_vectors(r.finish(), expect)) rep.push_back({"antipode (id ⊗ S)", {i}, ""});
  }
  if (h.antipode() * h.antipode_inverse() != id || h.antipode_inverse() * h.antipode() != id) {
    rep.push_back({"antipode inverse", {}, ""});
  }
  return rep;
}

HopfAlgebra dual_hopf(const HopfAlgebra& h, bool opposite_product) {
  const Index n = static_cast<Index>(h.dim());
  const Algebra& a = h.algebra();
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l + "*");
  std::vector<SparseVector> mult(n * n);
  for (Index z = 0; z < n; ++z) {
    for (const auto& e : h.coproduct(z)) {
      Index i = static_cast<Index>(e.index / n), j = static_cast<Index>(e.index % n);
      Index slot = opposite_product ? j * n + i : i * n + j;
      mult[slot].push_back({z, e.value});
    }
  }
  std::vector<SparseVector> comult(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (const auto& e : a.product(i, j)) comult[e.index].push_back({i * n + j, e.value});
    }
  }
  auto alg = std::make_shared<const Algebra>(std::move(labels), std::move(mult), h.counit());
  SparseMatrix s = opposite_product ? h.antipode_inverse().transpose() : h.antipode().transpose();
  SparseMatrix sinv = opposite_product ? h.antipode().transpose() : h.antipode_inverse().transpose();
  return HopfAlgebra(std::move(alg), std::move(comult), a.unit(), std::move(s), std::move(sinv));
}

HopfAlgebra tensor_hopf(const HopfAlgebra& x, const HopfAlgebra& y) {
  auto alg = tensor_algebra(x.algebra(), y.algebra());
  const std::size_t nx = x.dim(), ny = y.dim(), n = nx * ny;
  std::vector<SparseVector> comult(n);
  for (Index i = 0; i < nx; ++i) {
    for (Index j = 0; j < ny; ++j) {
      SparseVector v;
      for (const auto& ex : x.coproduct(i)) {
        Index a1 = static_cast<Index>(ex.index / nx), a2 = static_cast<Index>(ex.index % nx);
        for (const auto& ey : y.coproduct(j)) {
          Index b1 = static_cast<Index>(ey.index / ny), b2 = static_cast<Index>(ey.index % ny);
          v.push_back({static_cast<Index>((a1 * ny + b1) * n + (a2 * ny + b2)), ex.value * ey.value});
        }
      }
      comult[i * ny + j] = std::move(v);
    }
  }
  SparseVector counit;
  for (const auto& ex : x.counit()) {
    for (const auto& ey : y.counit()) {
      counit.push_back({static_cast<Index>(ex.index * ny + ey.index), ex.value * ey.value});
    }
  }
  return HopfAlgebra(std::move(alg), std::move(comult), std::move(counit),
                     kron(x.antipode(), y.antipode()),
                     kron(x.antipode_inverse(), y.antipode_inverse()));
}

Report verify_hopf_map(const HopfAlgebra& k, const HopfAlgebra& h, const SparseMatrix& m) {
  Report rep = verify_algebra_map(AlgebraMap{k.algebra_ptr(), h.algebra_ptr(), m});
  if (!rep.empty()) return rep;
  const Index nk = static_cast<Index>(k.dim());
  for (Index i = 0; i < nk; ++i) {
    const SparseVector& img = m.column(i);
    TensorElement lhs = h.coproduct_of(img);
    // Push Δ_K(e_i) forward along m in both slots.
    std::vector<TensorElement::Term> terms;
    for (const auto& e : k.coproduct(i)) {
      Index a = static_cast<Index>(e.index / nk), b = static_cast<Index>(e.index % nk);
      for (const auto& x : m.column(a)) {
        for (const auto& y : m.column(b)) {
          terms.emplace_back(static_cast<TensorElement::Key>(x.index) * h.dim() + y.index,
                             e.value * x.value * y.value);
        }
      }
    }
    TensorElement rhs = TensorElement::from_terms(h.dim(), 2, std::move(terms));
    if (lhs != rhs) rep.push_back({"map preserves coproduct", {i}, ""});
    if (h.counit_of(img) != coefficient(k.counit(), i)) rep.push_back({"map preserves counit", {i}, ""});
    if (h.antipode_of(img) != m.apply(k.antipode().column(i))) {
      rep.push_back({"map preserves antipode", {i}, ""});
    }
  }
  return rep;
}

}  // namespace hopfdy
