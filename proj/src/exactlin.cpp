#include "hopfdy/exactlin.hpp"

#include <stdexcept>

namespace hopfdy {

namespace {

std::atomic<std::size_t> g_mismatches{0};

void check_width(const std::vector<SparseVector>& vs, std::size_t dim) {
  for (const auto& v : vs) {
    if (!v.empty() && v.back().index >= dim) {
      throw std::invalid_argument("vector index exceeds the ambient dimension");
    }
  }
}

}  // namespace

std::size_t rank_of_vectors(const std::vector<SparseVector>& vectors, std::size_t dim) {
  check_width(vectors, dim);
  Echelon ech(static_cast<Index>(dim));
  for (const auto& v : vectors) {
    ech.insert(v);
    if (ech.rank() == dim) break;
  }
  return ech.rank();
}

std::size_t rank(const SparseMatrix& m) {
  // Insert whichever family of vectors is shorter.
  if (m.rows() <= m.cols()) return rank_of_vectors(m.columns(), m.rows());
  SparseMatrix t = m.transpose();
  return rank_of_vectors(t.columns(), t.rows());
}

std::vector<SparseVector> kernel_of_rows(const std::vector<SparseVector>& rows,
                                         std::size_t nvars) {
  check_width(rows, nvars);
  Echelon ech(static_cast<Index>(nvars));
  for (const auto& r : rows) ech.insert(r);
  ech.make_reduced();
  return ech.kernel();
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  SparseMatrix t = m.transpose();
  return kernel_of_rows(t.columns(), m.cols());
}

std::vector<SparseVector> row_space_basis(const std::vector<SparseVector>& vectors,
                                          std::size_t dim) {
  check_width(vectors, dim);
  Echelon ech(static_cast<Index>(dim));
  for (const auto& v : vectors) ech.insert(v);
  ech.make_reduced();
  std::vector<SparseVector> out;
  for (Index c : ech.pivots()) out.push_back(ech.row_for_pivot(c));
  return out;
}

bool span_equal(const std::vector<SparseVector>& a, const std::vector<SparseVector>& b,
                std::size_t dim) {
  check_width(a, dim);
  check_width(b, dim);
  Echelon ea(static_cast<Index>(dim));
  for (const auto& v : a) ea.insert(v);
  Echelon eb(static_cast<Index>(dim));
  for (const auto& v : b) eb.insert(v);
  if (ea.rank() != eb.rank()) return false;
  for (const auto& v : b) {
    if (!ea.contains(v)) return false;
  }
  return true;
}

std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b) {
  // Unknown j lives in column j + 1; column 0 carries the constant term, so it
  // can only become a pivot when the system is inconsistent.
  SparseMatrix t = m.transpose();
  std::vector<SparseVector> eq(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseVector row;
    Rational rhs = coefficient(b, static_cast<Index>(i));
    if (!rhs.is_zero()) row.push_back({0, -rhs});
    for (const auto& e : t.column(i)) row.push_back({e.index + 1, e.value});
    eq[i] = std::move(row);
  }
  Echelon ech(static_cast<Index>(m.cols() + 1));
  for (const auto& r : eq) ech.insert(r);
  if (ech.is_pivot(0)) return std::nullopt;
  ech.make_reduced();
  SparseVector x;
  for (Index c = 1; c <= m.cols(); ++c) {
    if (!ech.is_pivot(c)) continue;
    const auto& row = ech.row_for_pivot(c);
    if (!row.empty() && row.front().index == 0) x.push_back({c - 1, -row.front().value});
  }
  return x;
}

std::optional<SparseMatrix> inverse(const SparseMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  if (rank(m) != n) return std::nullopt;
  std::vector<SparseVector> cols(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto x = solve(m, unit_vector(static_cast<Index>(j)));
    if (!x) return std::nullopt;
    cols[j] = std::move(*x);
  }
  return SparseMatrix::from_columns(n, std::move(cols));
}

std::size_t rank_bareiss(const SparseMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& e : m.column(j)) a[e.index][j] = e.value;
  }
  Rational prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::optional<std::size_t> rank_mod_p(const std::vector<SparseVector>& vectors,
                                      std::size_t dim) {
  check_width(vectors, dim);
  ModEchelon ech(static_cast<Index>(dim));
  std::vector<BasicEntry<ModP>> mv;
  for (const auto& v : vectors) {
    mv.clear();
    for (const auto& e : v) {
      std::uint32_t r = 0;
      if (!e.value.residue(ModP::kPrime, r)) return std::nullopt;
      if (r != 0) mv.push_back({e.index, ModP(r)});
    }
    ech.insert(mv);
    if (ech.rank() == dim) break;
  }
  return ech.rank();
}

CheckedRank checked_rank(const std::vector<SparseVector>& vectors, std::size_t dim) {
  CheckedRank out;
  out.modular = rank_mod_p(vectors, dim);
  out.exact = rank_of_vectors(vectors, dim);
  if (!out.agree()) g_mismatches.fetch_add(1);
  return out;
}

std::size_t modular_mismatch_count() { return g_mismatches.load(); }

}  // namespace hopfdy
