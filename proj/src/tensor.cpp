#include "hopfdy/tensor.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hopfdy {

namespace {

bool term_less(const TensorElement::Term& a, const TensorElement::Term& b) {
  return a.first < b.first;
}

void merge_into(std::vector<TensorElement::Term>& out, const std::vector<TensorElement::Term>& a,
                const std::vector<TensorElement::Term>& b, const Rational& cb) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, b[j].second * cb);
      ++j;
    } else {
      Rational v = a[i].second + b[j].second * cb;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
}

}  // namespace

TensorElement::TensorElement(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {
  if (dim == 0) throw std::invalid_argument("tensor over a zero-dimensional space");
  space_ = 1;
  for (std::size_t i = 0; i < degree; ++i) {
    if (space_ > std::numeric_limits<Key>::max() / dim) {
      throw std::overflow_error("tensor power too large to index");
    }
    space_ *= dim;
  }
}

TensorElement TensorElement::basis(std::size_t dim, std::span<const Index> idx, Rational c) {
  TensorElement t(dim, idx.size());
  if (!c.is_zero()) t.terms_.emplace_back(t.encode(idx), std::move(c));
  return t;
}

TensorElement TensorElement::from_vector(std::size_t dim, const SparseVector& v) {
  return from_flat(dim, 1, v);
}

TensorElement TensorElement::from_flat(std::size_t dim, std::size_t degree, const SparseVector& v) {
  TensorElement t(dim, degree);
  t.terms_.reserve(v.size());
  for (const auto& e : v) {
    if (e.index >= t.space_) throw std::out_of_range("flat index beyond tensor space");
    t.terms_.emplace_back(e.index, e.value);
  }
  return t;
}

TensorElement TensorElement::pure(std::size_t dim, const std::vector<SparseVector>& factors) {
  TensorElement t(dim, factors.size());
  std::vector<Term> cur{{0, Rational(1)}};
  for (const auto& f : factors) {
    std::vector<Term> next;
    next.reserve(cur.size() * f.size());
    for (const auto& [k, c] : cur) {
      for (const auto& e : f) next.emplace_back(k * dim + e.index, c * e.value);
    }
    cur = std::move(next);
  }
  return from_terms(dim, factors.size(), std::move(cur));
}

TensorElement TensorElement::from_terms(std::size_t dim, std::size_t degree,
                                        std::vector<Term> terms) {
  TensorElement t(dim, degree);
  std::sort(terms.begin(), terms.end(), term_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Key k = terms[i].first;
    Rational acc = std::move(terms[i].second);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].first == k; ++j) acc += terms[j].second;
    if (!acc.is_zero()) terms[out++] = Term{k, std::move(acc)};
    i = j;
  }
  terms.resize(out);
  t.terms_ = std::move(terms);
  return t;
}

TensorElement::Key TensorElement::encode(std::span<const Index> idx) const {
  if (idx.size() != degree_) throw std::invalid_argument("multi-index length mismatch");
  Key k = 0;
  for (Index i : idx) {
    if (i >= dim_) throw std::out_of_range("multi-index entry out of range");
    k = k * dim_ + i;
  }
  return k;
}

void TensorElement::decode(Key k, std::span<Index> out) const {
  for (std::size_t s = degree_; s-- > 0;) {
    out[s] = static_cast<Index>(k % dim_);
    k /= dim_;
  }
}

std::vector<Index> TensorElement::decode(Key k) const {
  std::vector<Index> out(degree_);
  decode(k, out);
  return out;
}

Rational TensorElement::coeff(std::span<const Index> idx) const { return coeff_key(encode(idx)); }

Rational TensorElement::coeff_key(Key k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{k, Rational()}, term_less);
  if (it != terms_.end() && it->first == k) return it->second;
  return 0;
}

SparseVector TensorElement::flat() const {
  if (space_ > std::numeric_limits<Index>::max()) {
    throw std::overflow_error("tensor space too large for flat coordinates");
  }
  SparseVector v;
  v.reserve(terms_.size());
  for (const auto& [k, c] : terms_) v.push_back({static_cast<Index>(k), c});
  return v;
}

SparseVector TensorElement::as_vector() const {
  if (degree_ != 1) throw std::invalid_argument("as_vector on a tensor of degree != 1");
  return flat();
}

TensorElement& TensorElement::operator+=(const TensorElement& b) {
  if (dim_ != b.dim_ || degree_ != b.degree_) throw std::invalid_argument("tensor shape mismatch");
  std::vector<Term> out;
  merge_into(out, terms_, b.terms_, Rational(1));
  terms_ = std::move(out);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& b) {
  if (dim_ != b.dim_ || degree_ != b.degree_) throw std::invalid_argument("tensor shape mismatch");
  std::vector<Term> out;
  merge_into(out, terms_, b.terms_, Rational(-1));
  terms_ = std::move(out);
  return *this;
}

TensorElement TensorElement::operator-() const { return scaled(-1); }

TensorElement TensorElement::scaled(const Rational& c) const {
  TensorElement t(dim_, degree_);
  if (c.is_zero()) return t;
  t.terms_.reserve(terms_.size());
  for (const auto& [k, v] : terms_) t.terms_.emplace_back(k, v * c);
  return t;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  if (a.dim_ != b.dim_ || a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) {
      return false;
    }
  }
  return true;
}

TensorElement TensorElement::outer(const TensorElement& b) const {
  if (dim_ != b.dim_) throw std::invalid_argument("outer product of different spaces");
  TensorElement t(dim_, degree_ + b.degree_);
  t.terms_.reserve(terms_.size() * b.terms_.size());
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : b.terms_) t.terms_.emplace_back(ka * b.space_ + kb, ca * cb);
  }
  return t;
}

TensorElement permute_slots(const TensorElement& u, std::span<const std::size_t> perm) {
  std::size_t d = u.degree();
  if (perm.size() != d) throw std::invalid_argument("permutation length mismatch");
  std::vector<char> seen(d, 0);
  for (std::size_t p : perm) {
    if (p >= d || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = 1;
  }
  std::vector<Index> in(d), out(d);
  std::vector<TensorElement::Term> terms;
  terms.reserve(u.terms().size());
  TensorElement shape(u.dim(), d);
  for (const auto& [k, c] : u.terms()) {
    u.decode(k, in);
    for (std::size_t s = 0; s < d; ++s) out[perm[s]] = in[s];
    terms.emplace_back(shape.encode(out), c);
  }
  return TensorElement::from_terms(u.dim(), d, std::move(terms));
}

TensorElement flip(const TensorElement& u) {
  const std::size_t p[2] = {1, 0};
  return permute_slots(u, p);
}

TensorElement apply_at(const TensorElement& u, std::size_t slot, const SparseMatrix& m) {
  if (slot >= u.degree()) throw std::out_of_range("slot out of range");
  if (m.rows() != u.dim() || m.cols() != u.dim()) throw std::invalid_argument("map shape mismatch");
  std::vector<Index> idx(u.degree());
  std::vector<TensorElement::Term> terms;
  for (const auto& [k, c] : u.terms()) {
    u.decode(k, idx);
    Index orig = idx[slot];
    for (const auto& e : m.column(orig)) {
      idx[slot] = e.index;
      terms.emplace_back(u.encode(idx), c * e.value);
    }
  }
  return TensorElement::from_terms(u.dim(), u.degree(), std::move(terms));
}

TensorElement contract_at(const TensorElement& u, std::size_t slot,
                          const SparseVector& functional) {
  if (slot >= u.degree()) throw std::out_of_range("slot out of range");
  std::size_t d = u.degree();
  TensorElement shape(u.dim(), d - 1);
  std::vector<Index> idx(d), rest(d - 1);
  std::vector<TensorElement::Term> terms;
  for (const auto& [k, c] : u.terms()) {
    u.decode(k, idx);
    Rational f = coefficient(functional, idx[slot]);
    if (f.is_zero()) continue;
    std::size_t r = 0;
    for (std::size_t s = 0; s < d; ++s) {
      if (s != slot) rest[r++] = idx[s];
    }
    terms.emplace_back(shape.encode(rest), c * f);
  }
  return TensorElement::from_terms(u.dim(), d - 1, std::move(terms));
}

std::pair<std::vector<SparseVector>, std::size_t> compress(const std::vector<TensorElement>& us) {
  std::vector<TensorElement::Key> keys;
  for (const auto& u : us) {
    for (const auto& t : u.terms()) keys.push_back(t.first);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<SparseVector> out;
  out.reserve(us.size());
  for (const auto& u : us) {
    SparseVector v;
    v.reserve(u.terms().size());
    for (const auto& [k, c] : u.terms()) {
      auto pos = std::lower_bound(keys.begin(), keys.end(), k) - keys.begin();
      v.push_back({static_cast<Index>(pos), c});
    }
    out.push_back(std::move(v));
  }
  return {std::move(out), keys.size()};
}

}  // namespace hopfdy
