#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "hopfdy/hopf.hpp"
#include "hopfdy/sparse.hpp"
#include "hopfdy/tensor.hpp"

namespace test {

using namespace hopfdy;

inline Rational random_rational(std::mt19937& rng) {
  const long long num = static_cast<long long>(rng() % 11) - 5;
  const long long den = 1 + static_cast<long long>(rng() % 4);
  return Rational(num, den);
}

inline Rational random_nonzero_rational(std::mt19937& rng) {
  Rational r;
  while (r.is_zero()) r = random_rational(rng);
  return r;
}

inline SparseVector random_vector(std::mt19937& rng, std::size_t dim, double density) {
  std::bernoulli_distribution keep(density);
  VectorBuilder b;
  for (std::size_t i = 0; i < dim; ++i) {
    if (keep(rng)) b.add(static_cast<Index>(i), random_rational(rng));
  }
  return b.finish();
}

/// With low_rank the columns are combinations of two random columns.
inline SparseMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density,
                                  bool low_rank) {
  std::vector<SparseVector> c;
  SparseVector u = random_vector(rng, rows, density), v = random_vector(rng, rows, density);
  for (std::size_t j = 0; j < cols; ++j) {
    if (low_rank) {
      SparseVector x = scale(u, random_rational(rng));
      axpy(x, random_rational(rng), v);
      c.push_back(std::move(x));
    } else {
      c.push_back(random_vector(rng, rows, density));
    }
  }
  return SparseMatrix::from_columns(rows, std::move(c));
}

inline TensorElement random_tensor(std::mt19937& rng, std::size_t dim, std::size_t degree, int terms) {
  TensorElement t(dim, degree);
  std::vector<Index> idx(degree);
  for (int k = 0; k < terms; ++k) {
    for (auto& i : idx) i = static_cast<Index>(rng() % dim);
    t += TensorElement::basis(dim, idx, random_nonzero_rational(rng));
  }
  return t;
}

/// The same Hopf algebra on the basis e'_i = e_{perm[i]}.
inline HopfPtr permute_basis(const HopfAlgebra& h, const std::vector<Index>& perm) {
  const std::size_t n = h.dim();
  std::vector<Index> inv(n);
  for (Index i = 0; i < n; ++i) inv[perm[i]] = i;
  auto mapv = [&](const SparseVector& v) {
    VectorBuilder b;
    for (const auto& e : v) b.add(inv[e.index], e.value);
    return b.finish();
  };
  const Algebra& a = h.algebra();
  std::vector<std::string> labels(n);
  std::vector<SparseVector> mult(n * n), comult(n);
  for (Index i = 0; i < n; ++i) {
    labels[i] = a.labels()[perm[i]];
    for (Index j = 0; j < n; ++j) mult[i * n + j] = mapv(a.product(perm[i], perm[j]));
    VectorBuilder cb;
    for (const auto& e : h.coproduct(perm[i])) {
      cb.add(static_cast<Index>(inv[e.index / n] * n + inv[e.index % n]), e.value);
    }
    comult[i] = cb.finish();
  }
  std::vector<SparseVector> s(n);
  for (Index i = 0; i < n; ++i) s[i] = mapv(h.antipode().column(perm[i]));
  auto alg = std::make_shared<const Algebra>(std::move(labels), std::move(mult), mapv(a.unit()));
  return std::make_shared<const HopfAlgebra>(alg, std::move(comult), mapv(h.counit()),
                                             SparseMatrix::from_columns(n, std::move(s)));
}

/// Re-expresses a tensor over the permuted basis.
inline TensorElement permute_tensor(const TensorElement& t, const std::vector<Index>& perm) {
  const std::size_t n = t.dim();
  std::vector<Index> inv(n);
  for (Index i = 0; i < n; ++i) inv[perm[i]] = i;
  std::vector<TensorElement::Term> terms;
  for (const auto& [k, c] : t.terms()) {
    std::vector<Index> idx = t.decode(k);
    for (auto& i : idx) i = inv[i];
    terms.emplace_back(t.encode(idx), c);
  }
  return TensorElement::from_terms(n, t.degree(), std::move(terms));
}

}  // namespace test
