#include "hopfdy/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hopfdy/echelon.hpp"
#include "hopfdy/errors.hpp"
#include "hopfdy/exactlin.hpp"

namespace hopfdy {

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(std::vector<std::string> labels, std::vector<SparseVector> mult,
                 SparseVector unit)
    : labels_(std::move(labels)), mult_(std::move(mult)), unit_(std::move(unit)) {
  std::size_t n = labels_.size();
  if (n == 0) throw InvalidStructure("algebra of dimension zero");
  if (mult_.size() != n * n) throw InvalidStructure("multiplication table has wrong size");
  for (auto& v : mult_) {
    canonicalize(v);
    if (!v.empty() && v.back().index >= n) throw InvalidStructure("product index out of range");
  }
  canonicalize(unit_);
  if (!unit_.empty() && unit_.back().index >= n) throw InvalidStructure("unit index out of range");
}

SparseVector Algebra::multiply(const SparseVector& a, const SparseVector& b) const {
  if (a.size() == 1 && b.size() == 1) {
    return scale(product(a[0].index, b[0].index), a[0].value * b[0].value);
  }
  VectorBuilder out;
  for (const auto& x : a) {
    for (const auto& y : b) out.add_scaled(product(x.index, y.index), x.value * y.value);
  }
  return out.finish();
}

SparseMatrix Algebra::left_mult(const SparseVector& a) const {
  std::vector<SparseVector> cols(dim());
  for (Index j = 0; j < dim(); ++j) cols[j] = multiply(a, unit_vector(j));
  return SparseMatrix::from_columns(dim(), std::move(cols));
}

SparseMatrix Algebra::right_mult(const SparseVector& a) const {
  std::vector<SparseVector> cols(dim());
  for (Index j = 0; j < dim(); ++j) cols[j] = multiply(unit_vector(j), a);
  return SparseMatrix::from_columns(dim(), std::move(cols));
}

namespace {

bool equal_vectors(const SparseVector& a, const SparseVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].index != b[i].index || a[i].value != b[i].value) return false;
  }
  return true;
}

}  // namespace

bool same_algebra(const Algebra& a, const Algebra& b) {
  if (&a == &b) return true;
  if (a.dim() != b.dim()) return false;
  if (!equal_vectors(a.unit(), b.unit())) return false;
  for (std::size_t i = 0; i < a.mult_table().size(); ++i) {
    if (!equal_vectors(a.mult_table()[i], b.mult_table()[i])) return false;
  }
  return true;
}

AlgebraMap identity_map(AlgebraPtr a) {
  auto n = a->dim();
  return AlgebraMap{a, a, SparseMatrix::identity(n)};
}

AlgebraMap compose(const AlgebraMap& f, const AlgebraMap& g) {
  if (!same_algebra(*f.source, *g.target)) throw std::invalid_argument("maps do not compose");
  return AlgebraMap{g.source, f.target, f.matrix * g.matrix};
}

SparseMatrix ModuleRep::act(const SparseVector& a) const {
  SparseMatrix out(dim, dim);
  for (const auto& e : a) {
    if (e.index >= action.size()) throw std::out_of_range("algebra element index out of range");
    if (out.nnz() == 0) {
      out = action[e.index].scaled(e.value);
    } else {
      out = out + action[e.index].scaled(e.value);
    }
  }
  return out;
}

std::string format_report(const Report& r) {
  std::ostringstream os;
  for (const auto& v : r) {
    os << v.axiom << " [";
    for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
    os << "]";
    if (!v.detail.empty()) os << " " << v.detail;
    os << "\n";
  }
  return os.str();
}

// ----------------------------------------------------------- verification

std::vector<Index> algebra_generators(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Index> gens;
  // Closure of span{1} under left multiplication by the chosen generators.
  auto closure_rank = [&](const std::vector<Index>& g, Echelon& ech) {
    std::vector<SparseVector> frontier{a.unit()};
    ech.insert(a.unit());
    while (!frontier.empty()) {
      std::vector<SparseVector> next;
      for (const auto& v : frontier) {
        for (Index x : g) {
          SparseVector w = a.multiply(unit_vector(x), v);
          if (ech.insert(w)) next.push_back(std::move(w));
        }
      }
      frontier = std::move(next);
    }
    return ech.rank();
  };
  Echelon ech(static_cast<Index>(n));
  closure_rank(gens, ech);
  for (Index i = 0; i < n && ech.rank() < n; ++i) {
    if (ech.contains(unit_vector(i))) continue;
    gens.push_back(i);
    Echelon fresh(static_cast<Index>(n));
    closure_rank(gens, fresh);
    ech = std::move(fresh);
  }
  return gens;
}

Report verify_algebra(const Algebra& a, std::size_t exhaustive_limit) {
  Report rep;
  const Index n = static_cast<Index>(a.dim());
  for (Index i = 0; i < n; ++i) {
    auto e = unit_vector(i);
    if (!equal_vectors(a.multiply(a.unit(), e), e)) {
      rep.push_back({"left unit", {i}, ""});
    }
    if (!equal_vectors(a.multiply(e, a.unit()), e)) {
      rep.push_back({"right unit", {i}, ""});
    }
  }
  if (!rep.empty()) return rep;
  std::vector<Index> left;
  if (n <= exhaustive_limit) {
    for (Index i = 0; i < n; ++i) left.push_back(i);
  } else {
    left = algebra_generators(a);
  }
  for (Index i : left) {
    for (Index j = 0; j < n; ++j) {
      const SparseVector& ij = a.product(i, j);
      for (Index k = 0; k < n; ++k) {
        SparseVector lhs = a.multiply(ij, unit_vector(k));
        SparseVector rhs = a.multiply(unit_vector(i), a.product(j, k));
        if (!equal_vectors(lhs, rhs)) rep.push_back({"associativity", {i, j, k}, ""});
      }
    }
  }
  return rep;
}

Report verify_algebra_map(const AlgebraMap& f) {
  Report rep;
  const Algebra& s = *f.source;
  const Algebra& t = *f.target;
  if (f.matrix.rows() != t.dim() || f.matrix.cols() != s.dim()) {
    rep.push_back({"shape", {}, "matrix dimensions do not match the algebras"});
    return rep;
  }
  if (!equal_vectors(f(s.unit()), t.unit())) rep.push_back({"unit preservation", {}, ""});
  for (Index i = 0; i < s.dim(); ++i) {
    for (Index j = 0; j < s.dim(); ++j) {
      SparseVector lhs = f(s.product(i, j));
      SparseVector rhs = t.multiply(f.matrix.column(i), f.matrix.column(j));
      if (!equal_vectors(lhs, rhs)) rep.push_back({"multiplicativity", {i, j}, ""});
    }
  }
  return rep;
}

Report verify_module(const ModuleRep& m, std::size_t exhaustive_limit) {
  Report rep;
  const Algebra& a = *m.algebra;
  if (m.action.size() != a.dim()) {
    rep.push_back({"shape", {}, "one action matrix per basis element required"});
    return rep;
  }
  for (Index i = 0; i < a.dim(); ++i) {
    if (m.action[i].rows() != m.dim || m.action[i].cols() != m.dim) {
      rep.push_back({"shape", {i}, "action matrix has wrong size"});
      return rep;
    }
  }
  if (m.act(a.unit()) != SparseMatrix::identity(m.dim)) rep.push_back({"unit acts as identity", {}, ""});
  std::vector<Index> left;
  if (a.dim() <= exhaustive_limit) {
    for (Index i = 0; i < a.dim(); ++i) left.push_back(i);
  } else {
    left = algebra_generators(a);
  }
  for (Index i : left) {
    for (Index j = 0; j < a.dim(); ++j) {
      SparseMatrix lhs = m.action[i] * m.action[j];
      SparseMatrix rhs = m.act(a.product(i, j));
      if (lhs != rhs) rep.push_back({"action respects products", {i, j}, ""});
    }
  }
  return rep;
}

// --------------------------------------------------------------- tensors

TensorElement tensor_mul(const Algebra& a, const TensorElement& x, const TensorElement& y) {
  if (x.dim() != a.dim() || y.dim() != a.dim() || x.degree() != y.degree()) {
    throw std::invalid_argument("tensor_mul: ambient or degree mismatch");
  }
  const std::size_t d = x.degree();
  const std::size_t n = a.dim();
  std::vector<std::vector<Index>> ydec;
  ydec.reserve(y.terms().size());
  for (const auto& t : y.terms()) ydec.push_back(y.decode(t.first));
  std::vector<Index> xi(d);
  std::vector<const SparseVector*> prods(d);
  std::vector<TensorElement::Term> terms;
  std::vector<std::size_t> pos(d);
  for (const auto& [kx, cx] : x.terms()) {
    x.decode(kx, xi);
    for (std::size_t t = 0; t < y.terms().size(); ++t) {
      const auto& yi = ydec[t];
      bool zero = false;
      for (std::size_t s = 0; s < d; ++s) {
        prods[s] = &a.product(xi[s], yi[s]);
        if (prods[s]->empty()) {
          zero = true;
          break;
        }
      }
      if (zero) continue;
      Rational base = cx * y.terms()[t].second;
      // Odometer over the product of the slotwise expansions.
      std::fill(pos.begin(), pos.end(), 0);
      while (true) {
        TensorElement::Key key = 0;
        Rational c = base;
        for (std::size_t s = 0; s < d; ++s) {
          const Entry& e = (*prods[s])[pos[s]];
          key = key * n + e.index;
          c *= e.value;
        }
        terms.emplace_back(key, std::move(c));
        bool done = true;
        for (std::size_t s = d; s-- > 0;) {
          if (++pos[s] < prods[s]->size()) {
            done = false;
            break;
          }
          pos[s] = 0;
        }
        if (done) break;
      }
    }
  }
  return TensorElement::from_terms(n, d, std::move(terms));
}

TensorElement tensor_unit(const Algebra& a, std::size_t d) {
  return TensorElement::pure(a.dim(), std::vector<SparseVector>(d, a.unit()));
}

TensorElement embed_slots(const Algebra& a, const TensorElement& u, std::size_t degree,
                          std::span<const std::size_t> slots) {
  const std::size_t d = u.degree();
  if (slots.size() != d || d > degree) throw std::invalid_argument("embed_slots: bad slot list");
  std::vector<bool> used(degree, false);
  std::vector<std::size_t> perm(degree);
  for (std::size_t s = 0; s < d; ++s) {
    if (slots[s] >= degree || used[slots[s]]) throw std::invalid_argument("embed_slots: bad slot list");
    used[slots[s]] = true;
    perm[s] = slots[s];
  }
  std::size_t next = d;
  for (std::size_t p = 0; p < degree; ++p) {
    if (!used[p]) perm[next++] = p;
  }
  TensorElement full = degree == d ? u : u.outer(tensor_unit(a, degree - d));
  return permute_slots(full, perm);
}

AlgebraPtr tensor_algebra(const Algebra& a, const Algebra& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& la : a.labels()) {
    for (const auto& lb : b.labels()) labels.push_back(la + "⊗" + lb);
  }
  std::vector<SparseVector> mult(n * n);
  for (Index i1 = 0; i1 < na; ++i1) {
    for (Index j1 = 0; j1 < nb; ++j1) {
      for (Index i2 = 0; i2 < na; ++i2) {
        const SparseVector& pa = a.product(i1, i2);
        if (pa.empty()) continue;
        for (Index j2 = 0; j2 < nb; ++j2) {
          const SparseVector& pb = b.product(j1, j2);
          if (pb.empty()) continue;
          SparseVector v;
          v.reserve(pa.size() * pb.size());
          for (const auto& ea : pa) {
            for (const auto& eb : pb) {
              v.push_back({static_cast<Index>(ea.index * nb + eb.index), ea.value * eb.value});
            }
          }
          mult[(i1 * nb + j1) * n + (i2 * nb + j2)] = std::move(v);
        }
      }
    }
  }
  SparseVector unit;
  for (const auto& ea : a.unit()) {
    for (const auto& eb : b.unit()) {
      unit.push_back({static_cast<Index>(ea.index * nb + eb.index), ea.value * eb.value});
    }
  }
  return std::make_shared<const Algebra>(std::move(labels), std::move(mult), std::move(unit));
}

AlgebraMap tensor_maps(const AlgebraMap& f, const AlgebraMap& g, AlgebraPtr source,
                       AlgebraPtr target) {
  return AlgebraMap{std::move(source), std::move(target), kron(f.matrix, g.matrix)};
}

// --------------------------------------------------------------- modules

ModuleRep regular_module(AlgebraPtr a) {
  ModuleRep m{a, a->dim(), {}};
  for (Index i = 0; i < a->dim(); ++i) m.action.push_back(a->left_mult(unit_vector(i)));
  return m;
}

ModuleRep restrict_module(const ModuleRep& m, const AlgebraMap& f) {
  if (!same_algebra(*f.target, *m.algebra)) {
    throw std::invalid_argument("restriction along a map into a different algebra");
  }
  ModuleRep r{f.source, m.dim, {}};
  for (Index i = 0; i < f.source->dim(); ++i) r.action.push_back(m.act(f.matrix.column(i)));
  return r;
}

ModuleRep tensor_modules(const ModuleRep& m, const ModuleRep& n, AlgebraPtr ab) {
  if (ab->dim() != m.algebra->dim() * n.algebra->dim()) {
    throw std::invalid_argument("tensor module over an algebra of the wrong dimension");
  }
  ModuleRep r{ab, m.dim * n.dim, {}};
  r.action.reserve(ab->dim());
  for (const auto& am : m.action) {
    for (const auto& an : n.action) r.action.push_back(kron(am, an));
  }
  return r;
}

ModuleRep direct_sum(const std::vector<const ModuleRep*>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct sum of nothing");
  AlgebraPtr a = parts.front()->algebra;
  std::vector<std::size_t> sizes;
  for (const auto* p : parts) {
    if (!same_algebra(*p->algebra, *a)) throw std::invalid_argument("direct sum over mixed algebras");
    sizes.push_back(p->dim);
  }
  ModuleRep r{a, 0, {}};
  for (auto s : sizes) r.dim += s;
  for (Index i = 0; i < a->dim(); ++i) {
    std::vector<std::vector<const SparseMatrix*>> blocks(parts.size(),
                                                         std::vector<const SparseMatrix*>(parts.size(), nullptr));
    for (std::size_t b = 0; b < parts.size(); ++b) blocks[b][b] = &parts[b]->action[i];
    r.action.push_back(block_matrix(sizes, sizes, blocks));
  }
  return r;
}

bool is_intertwiner(const SparseMatrix& f, const ModuleRep& m, const ModuleRep& n) {
  if (f.rows() != n.dim || f.cols() != m.dim) return false;
  for (Index i = 0; i < m.algebra->dim(); ++i) {
    if (f * m.action[i] != n.action[i] * f) return false;
  }
  return true;
}

std::vector<SparseMatrix> hom_space(const ModuleRep& m, const ModuleRep& n) {
  if (!same_algebra(*m.algebra, *n.algebra)) throw std::invalid_argument("hom_space: algebra mismatch");
  std::vector<const SparseMatrix*> ma, na;
  for (std::size_t a = 0; a < m.action.size(); ++a) {
    ma.push_back(&m.action[a]);
    na.push_back(&n.action[a]);
  }
  return hom_space_from_actions(ma, na, m.dim, n.dim);
}

std::vector<SparseMatrix> hom_space_from_actions(const std::vector<const SparseMatrix*>& m_actions,
                                                 const std::vector<const SparseMatrix*>& n_actions,
                                                 std::size_t dm, std::size_t dn) {
  if (m_actions.size() != n_actions.size()) throw std::invalid_argument("hom_space: action count mismatch");
  const std::size_t nvars = dm * dn;
  if (nvars >= (std::size_t{1} << 32)) throw std::overflow_error("hom_space too large");
  // Unknown (i, q) is entry f[i][q] with index i * dm + q.
  Echelon ech(static_cast<Index>(nvars));
  SparseVector row;
  for (std::size_t a = 0; a < m_actions.size() && ech.rank() < nvars; ++a) {
    check_deadline("hom_space");
    const SparseMatrix& rm = *m_actions[a];
    const SparseMatrix rnt = n_actions[a]->transpose();
    for (Index i = 0; i < dn; ++i) {
      const SparseVector& nrow = rnt.column(i);  // row i of ρ_N(a)
      for (Index j = 0; j < dm; ++j) {
        row.clear();
        for (const auto& e : rm.column(j)) row.push_back({static_cast<Index>(i * dm + e.index), e.value});
        for (const auto& e : nrow) row.push_back({static_cast<Index>(e.index * dm + j), -e.value});
        if (row.empty()) continue;
        canonicalize(row);
        if (!row.empty()) ech.insert(row);
      }
    }
  }
  ech.make_reduced();
  std::vector<SparseMatrix> out;
  for (const auto& v : ech.kernel()) {
    std::vector<SparseMatrix::Triplet> trip;
    trip.reserve(v.size());
    for (const auto& e : v) {
      trip.push_back({static_cast<Index>(e.index / dm), static_cast<Index>(e.index % dm), e.value});
    }
    out.push_back(SparseMatrix::from_triplets(dn, dm, trip));
  }
  return out;
}

// ------------------------------------------------------------- induction

struct Induction::Quotient {
  explicit Quotient(Index width) : ech(width), slot(width, -1) {}
  Echelon ech;
  std::vector<std::int32_t> slot;  // column -> quotient index or -1
};

Induction::~Induction() = default;
Induction::Induction(Induction&&) noexcept = default;
Induction& Induction::operator=(Induction&&) noexcept = default;

Induction::Induction(AlgebraMap iota, ModuleRep base) : iota_(std::move(iota)), base_(std::move(base)) {
  if (!same_algebra(*base_.algebra, *iota_.source)) {
    throw std::invalid_argument("induced module: V is not a module over the source algebra");
  }
  const Algebra& A = *iota_.target;
  const Algebra& B = *iota_.source;
  const std::size_t da = A.dim(), dv = base_.dim;
  const std::size_t width = da * dv;
  if (width >= (std::size_t{1} << 31)) throw std::overflow_error("induced module too large");
  q_ = std::make_unique<Quotient>(static_cast<Index>(width));
  // Right multiplication by ι(b) on A, one matrix per basis element of B.
  // Relations for a generating set of B span all relations: the relation for
  // b1 b2 is the sum of the b1-relation at v' = b2 v and the b2-relation at
  // a' = a ι(b1).
  const std::vector<Index> gens = algebra_generators(B);
  std::vector<SparseMatrix> right(B.dim());
  for (Index b : gens) right[b] = A.right_mult(iota_.matrix.column(b));
  SparseVector rel;
  for (Index b : gens) {
    check_deadline("induced module relations");
    const SparseMatrix& bv = base_.action[b];
    for (Index a = 0; a < da; ++a) {
      const SparseVector& aib = right[b].column(a);
      for (Index v = 0; v < dv; ++v) {
        rel.clear();
        for (const auto& e : aib) rel.push_back({static_cast<Index>(e.index * dv + v), e.value});
        for (const auto& e : bv.column(v)) rel.push_back({static_cast<Index>(a * dv + e.index), -e.value});
        canonicalize(rel);
        if (!rel.empty()) q_->ech.insert(rel);
      }
    }
  }
  for (Index c = 0; c < width; ++c) {
    if (!q_->ech.is_pivot(c)) {
      q_->slot[c] = static_cast<std::int32_t>(reps_.size());
      reps_.emplace_back(static_cast<Index>(c / dv), static_cast<Index>(c % dv));
    }
  }
}

std::pair<Index, Index> Induction::representative(Index q) const { return reps_.at(q); }

SparseVector Induction::reduce(const SparseVector& x) const {
  SparseVector r = q_->ech.reduce(x);
  for (auto& e : r) e.index = static_cast<Index>(q_->slot[e.index]);
  return r;
}

SparseVector Induction::class_of(const SparseVector& a, const SparseVector& v) const {
  const std::size_t dv = base_.dim;
  SparseVector x;
  x.reserve(a.size() * v.size());
  for (const auto& ea : a) {
    for (const auto& ev : v) x.push_back({static_cast<Index>(ea.index * dv + ev.index), ea.value * ev.value});
  }
  canonicalize(x);
  return reduce(x);
}

SparseVector Induction::act(const SparseVector& a, Index q) const {
  auto [ra, rv] = reps_.at(q);
  SparseVector prod = iota_.target->multiply(a, unit_vector(ra));
  return class_of(prod, unit_vector(rv));
}

SparseMatrix Induction::action_matrix(const SparseVector& a) const {
  std::vector<SparseVector> cols(dim());
  for (Index q = 0; q < dim(); ++q) cols[q] = act(a, q);
  return SparseMatrix::from_columns(dim(), std::move(cols));
}

ModuleRep Induction::module() const {
  ModuleRep m{iota_.target, dim(), {}};
  m.action.reserve(iota_.target->dim());
  for (Index a = 0; a < iota_.target->dim(); ++a) {
    check_deadline("induced module action");
    m.action.push_back(action_matrix(unit_vector(a)));
  }
  return m;
}

SparseMatrix Induction::unit_map() const {
  std::vector<SparseVector> cols(base_.dim);
  for (Index v = 0; v < base_.dim; ++v) cols[v] = class_of(iota_.target->unit(), unit_vector(v));
  return SparseMatrix::from_columns(dim(), std::move(cols));
}

SparseMatrix Induction::counit_map(const ModuleRep& x) const {
  if (x.dim != base_.dim || !same_algebra(*x.algebra, *iota_.target)) {
    throw std::invalid_argument("counit map: module does not restrict to the base");
  }
  std::vector<SparseVector> cols(dim());
  for (Index q = 0; q < dim(); ++q) {
    auto [ra, rv] = reps_[q];
    cols[q] = x.action[ra].column(rv);
  }
  return SparseMatrix::from_columns(x.dim, std::move(cols));
}

SparseMatrix Induction::induced_map(const SparseMatrix& f, const Induction& target) const {
  if (f.cols() != base_.dim || f.rows() != target.base_.dim) {
    throw std::invalid_argument("induced map: shape mismatch");
  }
  std::vector<SparseVector> cols(dim());
  for (Index q = 0; q < dim(); ++q) {
    auto [ra, rv] = reps_[q];
    cols[q] = target.class_of(unit_vector(ra), f.column(rv));
  }
  return SparseMatrix::from_columns(target.dim(), std::move(cols));
}

ModuleRep induced_module(const AlgebraMap& iota, const ModuleRep& v) {
  return Induction(iota, v).module();
}

// ---------------------------------------------------------------- kernels

SubspaceCoordinates::SubspaceCoordinates(std::vector<SparseVector> basis, std::size_t ambient)
    : basis_(std::move(basis)), ambient_(ambient), slot_(ambient, -1) {
  // Each basis vector needs a column where no other basis vector is nonzero;
  // kernel bases and reduced echelon rows both have one.
  std::vector<std::uint32_t> count(ambient_, 0);
  for (const auto& v : basis_) {
    if (!v.empty() && v.back().index >= ambient_) throw std::out_of_range("basis vector beyond ambient space");
    for (const auto& e : v) ++count[e.index];
  }
  pivot_.resize(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    bool found = false;
    for (const auto& e : basis_[i]) {
      if (count[e.index] == 1) {
        slot_[e.index] = static_cast<std::int64_t>(i);
        pivot_[i] = e.value;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("basis is not in reduced form");
  }
}

SparseVector SubspaceCoordinates::coordinates(const SparseVector& v) const {
  SparseVector c;
  VectorBuilder recon;
  for (const auto& e : v) {
    if (e.index >= ambient_) throw std::out_of_range("vector beyond ambient space");
    std::int64_t s = slot_[e.index];
    if (s >= 0) {
      Rational coef = e.value / pivot_[static_cast<std::size_t>(s)];
      recon.add_scaled(basis_[static_cast<std::size_t>(s)], coef);
      c.push_back({static_cast<Index>(s), std::move(coef)});
    }
  }
  canonicalize(c);
  if (!equal_vectors(recon.finish(), v)) throw ConsistencyFailure("vector is not in the subspace");
  return c;
}

bool SubspaceCoordinates::contains(const SparseVector& v) const {
  try {
    coordinates(v);
    return true;
  } catch (const ConsistencyFailure&) {
    return false;
  }
}

SparseMatrix SubspaceCoordinates::inclusion() const {
  return SparseMatrix::from_columns(ambient_, basis_);
}

ModuleKernel module_map_kernel(const SparseMatrix& f, const ModuleRep& m, const ModuleRep& n) {
  if (!is_intertwiner(f, m, n)) throw InvalidStructure("module_map_kernel: map is not an intertwiner");
  SubspaceCoordinates sub(kernel_basis(f), m.dim);
  ModuleRep k{m.algebra, sub.dim(), {}};
  for (const auto& a : m.action) {
    std::vector<SparseVector> cols(sub.dim());
    for (std::size_t i = 0; i < sub.dim(); ++i) cols[i] = sub.coordinates(a.apply(sub.basis()[i]));
    k.action.push_back(SparseMatrix::from_columns(sub.dim(), std::move(cols)));
  }
  return ModuleKernel{std::move(k), sub.inclusion()};
}

}  // namespace hopfdy
