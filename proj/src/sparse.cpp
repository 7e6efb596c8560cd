#include "hopfdy/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfdy {

void canonicalize(SparseVector& v) {
  if (v.empty()) return;
  bool sorted = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1].index >= v[i].index) {
      sorted = false;
      break;
    }
  }
  if (!sorted) {
    std::stable_sort(v.begin(), v.end(),
                     [](const Entry& a, const Entry& b) { return a.index < b.index; });
  }
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    Index idx = v[i].index;
    Rational acc = std::move(v[i].value);
    std::size_t j = i + 1;
    for (; j < v.size() && v[j].index == idx; ++j) acc += v[j].value;
    if (!acc.is_zero()) v[out++] = Entry{idx, std::move(acc)};
    i = j;
  }
  v.resize(out);
}

SparseVector unit_vector(Index i, Rational c) {
  SparseVector v;
  if (!c.is_zero()) v.push_back({i, std::move(c)});
  return v;
}

SparseVector add(const SparseVector& a, const SparseVector& b) {
  SparseVector r = a;
  axpy(r, 1, b);
  return r;
}

SparseVector sub(const SparseVector& a, const SparseVector& b) {
  SparseVector r = a;
  axpy(r, -1, b);
  return r;
}

SparseVector scale(const SparseVector& a, const Rational& c) {
  SparseVector r;
  if (c.is_zero()) return r;
  r.reserve(a.size());
  for (const auto& e : a) r.push_back({e.index, e.value * c});
  return r;
}

void axpy(SparseVector& y, const Rational& c, const SparseVector& x) {
  if (c.is_zero() || x.empty()) return;
  SparseVector out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].index < x[j].index)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].index < y[i].index) {
      out.push_back({x[j].index, x[j].value * c});
      ++j;
    } else {
      Rational v = std::move(y[i].value);
      v += x[j].value * c;
      if (!v.is_zero()) out.push_back({y[i].index, std::move(v)});
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

Rational coefficient(const SparseVector& v, Index i) {
  auto it = std::lower_bound(v.begin(), v.end(), i,
                             [](const Entry& e, Index k) { return e.index < k; });
  if (it != v.end() && it->index == i) return it->value;
  return 0;
}

Rational dot(const SparseVector& a, const SparseVector& b) {
  Rational s;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].index < b[j].index) {
      ++i;
    } else if (b[j].index < a[i].index) {
      ++j;
    } else {
      s += a[i].value * b[j].value;
      ++i;
      ++j;
    }
  }
  return s;
}

std::vector<Rational> to_dense(const SparseVector& v, std::size_t n) {
  std::vector<Rational> d(n);
  for (const auto& e : v) {
    if (e.index >= n) throw std::out_of_range("sparse index beyond dense length");
    d[e.index] = e.value;
  }
  return d;
}

SparseVector from_dense(const std::vector<Rational>& d) {
  SparseVector v;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i].is_zero()) v.push_back({static_cast<Index>(i), d[i]});
  }
  return v;
}

void VectorBuilder::add_scaled(const SparseVector& v, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& e : v) terms_.push_back({e.index, e.value * c});
}

SparseVector VectorBuilder::finish() {
  SparseVector out = std::move(terms_);
  terms_.clear();
  canonicalize(out);
  return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i] = unit_vector(static_cast<Index>(i));
  return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::vector<SparseVector> cols) {
  SparseMatrix m;
  m.rows_ = rows;
  m.cols_ = std::move(cols);
  for (const auto& c : m.cols_) {
    if (!c.empty() && c.back().index >= rows) {
      throw std::out_of_range("column entry beyond row count");
    }
  }
  return m;
}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         const std::vector<Triplet>& triplets) {
  SparseMatrix m(rows, cols);
  for (const auto& t : triplets) {
    if (t.row >= rows || t.col >= cols) throw std::out_of_range("triplet out of range");
    m.cols_[t.col].push_back({t.row, t.value});
  }
  for (auto& c : m.cols_) canonicalize(c);
  return m;
}

void SparseMatrix::set_column(std::size_t j, SparseVector v) {
  if (!v.empty() && v.back().index >= rows_) throw std::out_of_range("column entry beyond rows");
  cols_.at(j) = std::move(v);
}

Rational SparseMatrix::at(std::size_t i, std::size_t j) const {
  return coefficient(cols_.at(j), static_cast<Index>(i));
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const SparseVector& c) { return c.empty(); });
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  if (!x.empty() && x.back().index >= cols_.size()) {
    throw std::out_of_range("vector length does not match matrix columns");
  }
  if (x.size() == 1) return scale(cols_[x[0].index], x[0].value);
  VectorBuilder b;
  for (const auto& e : x) b.add_scaled(cols_[e.index], e.value);
  return b.finish();
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& b) const {
  if (cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  SparseMatrix r(rows_, b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) r.cols_[j] = apply(b.cols_[j]);
  return r;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& b) const {
  if (rows_ != b.rows_ || cols() != b.cols()) throw std::invalid_argument("matrix sum mismatch");
  SparseMatrix r = *this;
  for (std::size_t j = 0; j < cols(); ++j) axpy(r.cols_[j], 1, b.cols_[j]);
  return r;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& b) const {
  if (rows_ != b.rows_ || cols() != b.cols()) throw std::invalid_argument("matrix sum mismatch");
  SparseMatrix r = *this;
  for (std::size_t j = 0; j < cols(); ++j) axpy(r.cols_[j], -1, b.cols_[j]);
  return r;
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
  SparseMatrix r(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j) r.cols_[j] = scale(cols_[j], c);
  return r;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols(), rows_);
  std::vector<std::size_t> counts(rows_, 0);
  for (const auto& c : cols_) {
    for (const auto& e : c) ++counts[e.index];
  }
  for (std::size_t i = 0; i < rows_; ++i) t.cols_[i].reserve(counts[i]);
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    for (const auto& e : cols_[j]) t.cols_[e.index].push_back({static_cast<Index>(j), e.value});
  }
  return t;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_.size() != b.cols_.size()) return false;
  for (std::size_t j = 0; j < a.cols_.size(); ++j) {
    const auto& x = a.cols_[j];
    const auto& y = b.cols_[j];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].index != y[i].index || x[i].value != y[i].value) return false;
    }
  }
  return true;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  std::size_t br = b.rows();
  SparseMatrix r(a.rows() * br, a.cols() * b.cols());
  std::vector<SparseVector> cols(a.cols() * b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      SparseVector c;
      c.reserve(a.column(i).size() * b.column(j).size());
      for (const auto& ea : a.column(i)) {
        for (const auto& eb : b.column(j)) {
          c.push_back({static_cast<Index>(ea.index * br + eb.index), ea.value * eb.value});
        }
      }
      cols[i * b.cols() + j] = std::move(c);
    }
  }
  return SparseMatrix::from_columns(a.rows() * br, std::move(cols));
}

SparseMatrix block_matrix(const std::vector<std::size_t>& row_sizes,
                          const std::vector<std::size_t>& col_sizes,
                          const std::vector<std::vector<const SparseMatrix*>>& blocks) {
  std::vector<std::size_t> roff(row_sizes.size() + 1, 0), coff(col_sizes.size() + 1, 0);
  for (std::size_t i = 0; i < row_sizes.size(); ++i) roff[i + 1] = roff[i] + row_sizes[i];
  for (std::size_t j = 0; j < col_sizes.size(); ++j) coff[j + 1] = coff[j] + col_sizes[j];
  std::vector<SparseVector> cols(coff.back());
  for (std::size_t bj = 0; bj < col_sizes.size(); ++bj) {
    for (std::size_t c = 0; c < col_sizes[bj]; ++c) {
      SparseVector& out = cols[coff[bj] + c];
      for (std::size_t bi = 0; bi < row_sizes.size(); ++bi) {
        const SparseMatrix* m = blocks[bi][bj];
        if (m == nullptr) continue;
        if (m->rows() != row_sizes[bi] || m->cols() != col_sizes[bj]) {
          throw std::invalid_argument("block size mismatch");
        }
        for (const auto& e : m->column(c)) {
          out.push_back({static_cast<Index>(roff[bi] + e.index), e.value});
        }
      }
    }
  }
  return SparseMatrix::from_columns(roff.back(), std::move(cols));
}

}  // namespace hopfdy
