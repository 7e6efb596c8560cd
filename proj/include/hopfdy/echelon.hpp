#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

#include "hopfdy/sparse.hpp"

namespace hopfdy {

/// Element of the prime field F_p with p = 2^31 - 1.
struct ModP {
  static constexpr std::uint32_t kPrime = 2147483647u;
  std::uint32_t v = 0;

  ModP() = default;
  explicit ModP(std::uint32_t x) : v(x % kPrime) {}

  bool is_zero() const { return v == 0; }
  ModP operator-() const { return ModP(v == 0 ? 0 : kPrime - v); }
  ModP& operator+=(ModP b) {
    std::uint64_t s = std::uint64_t{v} + b.v;
    v = static_cast<std::uint32_t>(s >= kPrime ? s - kPrime : s);
    return *this;
  }
  ModP& operator-=(ModP b) { return *this += -b; }
  ModP& operator*=(ModP b) {
    v = static_cast<std::uint32_t>(std::uint64_t{v} * b.v % kPrime);
    return *this;
  }
  ModP inverse() const {
    if (v == 0) throw std::domain_error("inverse of zero mod p");
    std::uint64_t r = 1, base = v, e = kPrime - 2;
    while (e) {
      if (e & 1) r = r * base % kPrime;
      base = base * base % kPrime;
      e >>= 1;
    }
    return ModP(static_cast<std::uint32_t>(r));
  }
  ModP& operator/=(ModP b) { return *this *= b.inverse(); }
  friend ModP operator+(ModP a, ModP b) { return a += b; }
  friend ModP operator-(ModP a, ModP b) { return a -= b; }
  friend ModP operator*(ModP a, ModP b) { return a *= b; }
  friend ModP operator/(ModP a, ModP b) { return a /= b; }
  friend bool operator==(ModP a, ModP b) { return a.v == b.v; }
};

inline bool is_zero(ModP a) { return a.v == 0; }
inline ModP field_inverse(ModP a) { return a.inverse(); }
inline Rational field_inverse(const Rational& a) { return a.inverse(); }

/// Incremental row echelon form over a field.
///
/// Each stored row is normalized so that its largest column index (the
/// pivot) carries coefficient 1. Insertion reduces the incoming vector only
/// until its leading term is a new pivot, which keeps fill-in low; a final
/// `make_reduced` pass back-substitutes to reduced row echelon form.
template <class S>
class BasicEchelon {
 public:
  using E = BasicEntry<S>;
  using Vec = std::vector<E>;

  explicit BasicEchelon(Index ncols) : ncols_(ncols), pivot_row_(ncols, -1) {}

  Index ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(Index c) const { return pivot_row_[c] >= 0; }
  bool reduced() const { return reduced_; }

  /// Adds v to the row space. Returns true when the rank grew.
  bool insert(const Vec& v) {
    Scratch& s = scratch();
    load(s, v);
    Index lead = 0;
    bool found = false;
    while (!s.heap.empty()) {
      Index c = pop(s);
      if (::hopfdy::is_zero(s.val[c])) continue;
      std::int32_t r = pivot_row_[c];
      if (r >= 0) {
        eliminate(s, c, rows_[static_cast<std::size_t>(r)]);
      } else {
        lead = c;
        found = true;
        break;
      }
    }
    if (!found) {
      clear(s);
      return false;
    }
    S inv = field_inverse(s.val[lead]);
    Vec row;
    while (!s.heap.empty()) {
      Index c = pop(s);
      if (::hopfdy::is_zero(s.val[c])) continue;
      row.push_back(E{c, s.val[c] * inv});
    }
    std::reverse(row.begin(), row.end());
    row.push_back(E{lead, S(1)});
    s.val[lead] = S();
    clear(s);
    pivot_row_[lead] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(row));
    reduced_ = false;
    return true;
  }

  /// Normal form of v modulo the row space: the result has no pivot columns.
  Vec reduce(const Vec& v) const {
    Scratch& s = scratch();
    load(s, v);
    Vec out;
    while (!s.heap.empty()) {
      Index c = pop(s);
      if (::hopfdy::is_zero(s.val[c])) continue;
      std::int32_t r = pivot_row_[c];
      if (r >= 0) {
        eliminate(s, c, rows_[static_cast<std::size_t>(r)]);
      } else {
        out.push_back(E{c, s.val[c]});
      }
    }
    clear(s);
    std::reverse(out.begin(), out.end());
    return out;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

  /// Back-substitutes so no row has a nonzero entry in another pivot column.
  void make_reduced() {
    if (reduced_) return;
    for (Index c = 0; c < ncols_; ++c) {
      std::int32_t r = pivot_row_[c];
      if (r < 0) continue;
      Vec& row = rows_[static_cast<std::size_t>(r)];
      bool dirty = false;
      for (std::size_t i = 0; i + 1 < row.size(); ++i) {
        if (pivot_row_[row[i].index] >= 0) {
          dirty = true;
          break;
        }
      }
      if (!dirty) continue;
      Vec tail(row.begin(), row.end() - 1);
      Vec red = reduce(tail);
      red.push_back(E{c, S(1)});
      row = std::move(red);
    }
    reduced_ = true;
  }

  /// Pivot columns in increasing order.
  std::vector<Index> pivots() const {
    std::vector<Index> p;
    for (Index c = 0; c < ncols_; ++c) {
      if (pivot_row_[c] >= 0) p.push_back(c);
    }
    return p;
  }

  std::vector<Index> free_columns() const {
    std::vector<Index> f;
    for (Index c = 0; c < ncols_; ++c) {
      if (pivot_row_[c] < 0) f.push_back(c);
    }
    return f;
  }

  /// The stored row whose pivot is c (normalized, leading coefficient 1).
  const Vec& row_for_pivot(Index c) const {
    return rows_.at(static_cast<std::size_t>(pivot_row_.at(c)));
  }

  /// Kernel of the row space viewed as a system of equations. One vector per
  /// free column f, with coefficient 1 at f and 0 at every other free column,
  /// ordered by f. Requires make_reduced().
  std::vector<Vec> kernel() const {
    if (!reduced_) throw std::logic_error("kernel requires reduced echelon form");
    std::vector<std::int64_t> slot(ncols_, -1);
    std::vector<Vec> basis;
    for (Index c = 0; c < ncols_; ++c) {
      if (pivot_row_[c] < 0) {
        slot[c] = static_cast<std::int64_t>(basis.size());
        basis.push_back(Vec{E{c, S(1)}});
      }
    }
    for (Index c = 0; c < ncols_; ++c) {
      std::int32_t r = pivot_row_[c];
      if (r < 0) continue;
      const Vec& row = rows_[static_cast<std::size_t>(r)];
      for (std::size_t i = 0; i + 1 < row.size(); ++i) {
        basis[static_cast<std::size_t>(slot[row[i].index])].push_back(E{c, -row[i].value});
      }
    }
    for (auto& v : basis) {
      std::sort(v.begin(), v.end(), [](const E& a, const E& b) { return a.index < b.index; });
    }
    return basis;
  }

 private:
  struct Scratch {
    std::vector<S> val;
    std::vector<char> mark;
    std::vector<Index> heap;
    std::vector<Index> touched;
  };

  Index ncols_;
  std::vector<std::int32_t> pivot_row_;
  std::vector<Vec> rows_;
  bool reduced_ = true;

  static Scratch& scratch() {
    thread_local Scratch s;
    return s;
  }

  void load(Scratch& s, const Vec& v) const {
    if (s.val.size() < ncols_) {
      s.val.resize(ncols_);
      s.mark.resize(ncols_, 0);
    }
    for (const auto& e : v) {
      if (e.index >= ncols_) throw std::out_of_range("vector index beyond echelon width");
      if (!s.mark[e.index]) {
        s.mark[e.index] = 1;
        s.touched.push_back(e.index);
        s.heap.push_back(e.index);
      }
      s.val[e.index] += e.value;
    }
    std::make_heap(s.heap.begin(), s.heap.end());
  }

  static Index pop(Scratch& s) {
    std::pop_heap(s.heap.begin(), s.heap.end());
    Index c = s.heap.back();
    s.heap.pop_back();
    return c;
  }

  static void eliminate(Scratch& s, Index c, const Vec& row) {
    S x = s.val[c];
    s.val[c] = S();
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      Index k = row[i].index;
      if (!s.mark[k]) {
        s.mark[k] = 1;
        s.touched.push_back(k);
        s.heap.push_back(k);
        std::push_heap(s.heap.begin(), s.heap.end());
      }
      s.val[k] -= x * row[i].value;
    }
  }

  static void clear(Scratch& s) {
    for (Index k : s.touched) {
      s.val[k] = S();
      s.mark[k] = 0;
    }
    s.touched.clear();
    s.heap.clear();
  }
};

using Echelon = BasicEchelon<Rational>;
using ModEchelon = BasicEchelon<ModP>;

}  // namespace hopfdy
