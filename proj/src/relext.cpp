#include "hopfdy/relext.hpp"

#include <sstream>
#include <stdexcept>

#include "hopfdy/errors.hpp"
#include "hopfdy/exactlin.hpp"
#include "hopfdy/hopf.hpp"
#include "hopfdy/rmatrix.hpp"

namespace hopfdy {

// ------------------------------------------------------------------ pairs

ResolventPair ResolventPair::make(AlgebraMap inclusion) {
  Report rep = verify_algebra_map(inclusion);
  if (!rep.empty()) throw InvalidStructure("resolvent pair: " + format_report(rep));
  if (rank(inclusion.matrix) != inclusion.source->dim()) {
    throw InvalidStructure("resolvent pair: inclusion is not injective");
  }
  ResolventPair p{std::move(inclusion), {}, {}};
  p.big_generators = algebra_generators(*p.big());
  p.small_generators = algebra_generators(*p.small());
  return p;
}

ResolventPair double_pair(const DoubleAlgebra& d) { return ResolventPair::make(d.base_embedding()); }

ResolventPair double_tensor_pair(const DoubleAlgebra& d, AlgebraPtr dd) {
  AlgebraMap be = d.base_embedding();
  AlgebraPtr hh = tensor_algebra(d.base->algebra(), d.base->algebra());
  return ResolventPair::make(tensor_maps(be, be, std::move(hh), std::move(dd)));
}

ResolventPair tensor_pair(const ResolventPair& p, const ResolventPair& q, AlgebraPtr big,
                          AlgebraPtr small) {
  return ResolventPair::make(tensor_maps(p.inclusion, q.inclusion, std::move(small), std::move(big)));
}

// ---------------------------------------------------------------- modules

LazyModule::LazyModule(AlgebraPtr algebra, std::size_t dim, ColumnFn fn)
    : algebra_(std::move(algebra)), dim_(dim), fn_(std::move(fn)) {}

ModulePtr LazyModule::from_rep(ModuleRep m) {
  auto rep = std::make_shared<const ModuleRep>(std::move(m));
  return std::make_shared<LazyModule>(rep->algebra, rep->dim, [rep](const SparseVector& a, Index col) {
    VectorBuilder out;
    for (const auto& e : a) out.add_scaled(rep->action[e.index].column(col), e.value);
    return out.finish();
  });
}

ModulePtr LazyModule::induced(std::shared_ptr<const Induction> ind) {
  AlgebraPtr a = ind->map().target;
  const std::size_t dim = ind->dim();
  return std::make_shared<LazyModule>(std::move(a), dim, [ind](const SparseVector& x, Index col) {
    return ind->act(x, col);
  });
}

ModulePtr LazyModule::submodule(ModulePtr parent, std::vector<SparseVector> basis) {
  auto sub = std::make_shared<const SubspaceCoordinates>(std::move(basis), parent->dim());
  AlgebraPtr a = parent->algebra();
  const std::size_t dim = sub->dim();
  return std::make_shared<LazyModule>(std::move(a), dim, [parent, sub](const SparseVector& x, Index col) {
    VectorBuilder img;
    for (const auto& e : sub->basis()[col]) img.add_scaled(parent->act_column(x, e.index), e.value);
    return sub->coordinates(img.finish());
  });
}

ModulePtr LazyModule::tensor(ModulePtr m, ModulePtr n, AlgebraPtr ab) {
  if (ab->dim() != m->algebra()->dim() * n->algebra()->dim()) {
    throw std::invalid_argument("tensor module: algebra dimension mismatch");
  }
  const std::size_t dim = m->dim() * n->dim();
  return std::make_shared<LazyModule>(std::move(ab), dim, [m, n](const SparseVector& x, Index col) {
    const std::size_t dn = n->dim(), db = n->algebra()->dim();
    const Index c1 = static_cast<Index>(col / dn), c2 = static_cast<Index>(col % dn);
    VectorBuilder out;
    // Group the terms of x by their left index.
    std::size_t i = 0;
    while (i < x.size()) {
      const Index left = static_cast<Index>(x[i].index / db);
      SparseVector right;
      for (; i < x.size() && x[i].index / db == left; ++i) {
        right.push_back({static_cast<Index>(x[i].index % db), x[i].value});
      }
      SparseVector u = m->act_column(left, c1);
      if (u.empty()) continue;
      SparseVector v = n->act_column(right, c2);
      for (const auto& eu : u) {
        for (const auto& ev : v) out.add(static_cast<Index>(eu.index * dn + ev.index), eu.value * ev.value);
      }
    }
    return out.finish();
  });
}

ModulePtr LazyModule::direct_sum(std::vector<ModulePtr> parts) {
  if (parts.empty()) throw std::invalid_argument("direct sum of no modules");
  AlgebraPtr a = parts.front()->algebra();
  std::vector<std::size_t> offset{0};
  for (const auto& p : parts) {
    if (p->algebra()->dim() != a->dim()) throw std::invalid_argument("direct sum: algebra mismatch");
    offset.push_back(offset.back() + p->dim());
  }
  const std::size_t dim = offset.back();
  return std::make_shared<LazyModule>(std::move(a), dim, [parts, offset](const SparseVector& x, Index col) {
    std::size_t k = 0;
    while (offset[k + 1] <= col) ++k;
    SparseVector v = parts[k]->act_column(x, static_cast<Index>(col - offset[k]));
    for (auto& e : v) e.index = static_cast<Index>(e.index + offset[k]);
    return v;
  });
}

SparseVector LazyModule::act_column(const SparseVector& a, Index col) const {
  if (a.size() == 1) return scale(act_column(a.front().index, col), a.front().value);
  return fn_(a, col);
}

SparseVector LazyModule::act_column(Index a, Index col) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second->column(col);
  }
  return fn_(unit_vector(a), col);
}

SparseMatrix LazyModule::act(const SparseVector& a) const {
  std::vector<SparseVector> cols(dim_);
  for (Index q = 0; q < dim_; ++q) {
    if ((q & 1023) == 0) check_deadline("module action");
    cols[q] = act_column(a, q);
  }
  return SparseMatrix::from_columns(dim_, std::move(cols));
}

const SparseMatrix& LazyModule::action(Index a) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(a);
    if (it != cache_.end()) return *it->second;
  }
  auto m = std::make_shared<const SparseMatrix>(act(unit_vector(a)));
  std::lock_guard<std::mutex> lock(mu_);
  return *cache_.emplace(a, std::move(m)).first->second;
}

ModuleRep LazyModule::restrict_to(const AlgebraMap& iota) const {
  if (iota.target->dim() != algebra_->dim()) throw std::invalid_argument("restriction: algebra mismatch");
  ModuleRep m{iota.source, dim_, {}};
  for (Index b = 0; b < iota.source->dim(); ++b) m.action.push_back(act(iota.matrix.column(b)));
  return m;
}

ModuleRep LazyModule::materialize() const {
  ModuleRep m{algebra_, dim_, {}};
  for (Index a = 0; a < algebra_->dim(); ++a) m.action.push_back(action(a));
  return m;
}

// ------------------------------------------------------------ resolutions

std::string to_string(ResolutionKind k) {
  switch (k) {
    case ResolutionKind::Bar: return "bar";
    case ResolutionKind::Cover: return "cover";
    case ResolutionKind::Tensor: return "tensor";
  }
  return "?";
}

std::vector<std::size_t> Resolution::term_dims() const {
  std::vector<std::size_t> d;
  for (const auto& t : terms) d.push_back(t->dim());
  d.push_back(tail_dim);
  return d;
}

namespace {

struct Induced {
  std::shared_ptr<const Induction> ind;
  ModulePtr module;
  ModuleRep base;  // restriction of the induced-from module
};

Induced induce(const ResolventPair& pair, const LazyModule& x) {
  check_deadline("induction");
  ModuleRep base = x.restrict_to(pair.inclusion);
  auto ind = std::make_shared<const Induction>(pair.inclusion, base);
  return Induced{ind, LazyModule::induced(ind), std::move(base)};
}

// [a ⊗ x] ↦ a · x
SparseMatrix counit(const Induction& ind, const LazyModule& x) {
  std::vector<SparseVector> cols(ind.dim());
  for (Index q = 0; q < ind.dim(); ++q) {
    auto [ra, rv] = ind.representative(q);
    cols[q] = x.act_column(ra, rv);
  }
  return SparseMatrix::from_columns(x.dim(), std::move(cols));
}

std::vector<SparseMatrix> small_actions(const ResolventPair& pair, const ModuleRep& restricted) {
  std::vector<SparseMatrix> out;
  for (Index b : pair.small_generators) out.push_back(restricted.action[b]);
  return out;
}

std::vector<SparseMatrix> small_actions(const ResolventPair& pair, const LazyModule& m) {
  std::vector<SparseMatrix> out;
  for (Index b : pair.small_generators) out.push_back(m.act(pair.inclusion.matrix.column(b)));
  return out;
}

void require_same_big(const ResolventPair& pair, const LazyModule& v) {
  if (v.algebra()->dim() != pair.big()->dim()) {
    throw std::invalid_argument("resolution: module is not over the larger algebra");
  }
}

}  // namespace

Resolution bar_resolution(const ResolventPair& pair, ModulePtr v, std::size_t maxdeg) {
  require_same_big(pair, *v);
  Resolution res;
  res.kind = ResolutionKind::Bar;
  res.target = v;
  std::vector<Induced> steps;
  steps.push_back(induce(pair, *v));
  res.target_small = small_actions(pair, steps[0].base);
  res.augmentation = counit(*steps[0].ind, *v);
  res.contraction.push_back(steps[0].ind->unit_map());
  res.terms.push_back(steps[0].module);
  for (std::size_t n = 1; n <= maxdeg + 1; ++n) {
    const LazyModule& prev = *res.terms.back();
    steps.push_back(induce(pair, prev));
    const Induced& cur = steps[n];
    const SparseMatrix& prev_d = n == 1 ? res.augmentation : res.differentials.back();
    SparseMatrix d = counit(*cur.ind, prev) - cur.ind->induced_map(prev_d, *steps[n - 1].ind);
    res.terms_small.push_back(small_actions(pair, cur.base));
    res.contraction.push_back(cur.ind->unit_map());
    if (n <= maxdeg) {
      res.terms.push_back(cur.module);
      res.differentials.push_back(std::move(d));
    } else {
      res.tail = std::move(d);
      res.tail_dim = cur.ind->dim();
      res.tail_small = small_actions(pair, *cur.module);
    }
    // Only the last two inductions are needed from here on.
    if (n >= 2) steps[n - 2] = Induced{};
  }
  return res;
}

Resolution iterated_cover_resolution(const ResolventPair& pair, ModulePtr v, std::size_t maxdeg) {
  require_same_big(pair, *v);
  Resolution res;
  res.kind = ResolutionKind::Cover;
  res.target = v;
  ModulePtr k = v;
  std::vector<SparseMatrix> eta;   // η_n : K_n → P_n
  std::vector<SparseMatrix> pi;    // [n] is π_{n+1} : P_n → K_{n+1}
  std::vector<SparseMatrix> incl;  // [n] is i_{n+1} : K_{n+1} → P_n
  for (std::size_t n = 0; n <= maxdeg; ++n) {
    Induced cur = induce(pair, *k);
    if (n == 0) res.target_small = small_actions(pair, cur.base);
    SparseMatrix e = counit(*cur.ind, *k);
    eta.push_back(cur.ind->unit_map());
    res.terms.push_back(cur.module);
    res.terms_small.push_back(small_actions(pair, *cur.module));
    if (n == 0) {
      res.augmentation = e;
    } else {
      res.differentials.push_back(incl.back() * e);
    }
    // K_{n+1} = ker ε_n, with π_{n+1}(p) = p − η ε_n p in K_{n+1} coordinates.
    std::vector<SparseVector> kb = kernel_basis(e);
    SubspaceCoordinates sub(kb, cur.module->dim());
    SparseMatrix retract = SparseMatrix::identity(cur.module->dim()) - eta.back() * e;
    std::vector<SparseVector> pcols(cur.module->dim());
    for (Index p = 0; p < cur.module->dim(); ++p) pcols[p] = sub.coordinates(retract.column(p));
    pi.push_back(SparseMatrix::from_columns(sub.dim(), std::move(pcols)));
    incl.push_back(sub.inclusion());
    k = LazyModule::submodule(cur.module, std::move(kb));
  }
  // s_{-1} = η_0, s_n = η_{n+1} π_{n+1}, and s_N = π_{N+1} into the tail.
  res.contraction.push_back(eta[0]);
  for (std::size_t n = 0; n < maxdeg; ++n) res.contraction.push_back(eta[n + 1] * pi[n]);
  res.contraction.push_back(pi[maxdeg]);
  res.tail = incl.back();
  res.tail_dim = k->dim();
  res.tail_small = small_actions(pair, *k);
  return res;
}

Resolution make_resolution(ResolutionKind kind, const ResolventPair& pair, ModulePtr v,
                           std::size_t maxdeg) {
  switch (kind) {
    case ResolutionKind::Bar: return bar_resolution(pair, std::move(v), maxdeg);
    case ResolutionKind::Cover: return iterated_cover_resolution(pair, std::move(v), maxdeg);
    case ResolutionKind::Tensor: break;
  }
  throw std::invalid_argument("make_resolution: tensor resolutions need two factors");
}

Resolution tensor_resolution(const Resolution& a, const Resolution& b, const ResolventPair& pair) {
  if (a.maxdeg() == 0 || b.maxdeg() == 0) {
    throw std::invalid_argument("tensor resolution: factors must reach degree 1");
  }
  const std::size_t top = std::min(a.maxdeg(), b.maxdeg()) - 1;
  const AlgebraPtr& big = pair.big();
  auto component_dims = [&](std::size_t n) {
    std::vector<std::size_t> d;
    for (std::size_t i = 0; i <= n; ++i) d.push_back(a.terms[i]->dim() * b.terms[n - i]->dim());
    return d;
  };
  auto total = [&](std::size_t n) {
    std::vector<ModulePtr> parts;
    for (std::size_t i = 0; i <= n; ++i) parts.push_back(LazyModule::tensor(a.terms[i], b.terms[n - i], big));
    return LazyModule::direct_sum(std::move(parts));
  };
  auto ident = [](const ModulePtr& m) { return SparseMatrix::identity(m->dim()); };
  // d : T_n → T_{n-1}; component (i, n-i) → (i-1, n-i) and (i, n-i-1).
  auto differential = [&](std::size_t n) {
    std::vector<std::vector<SparseMatrix>> blocks(n, std::vector<SparseMatrix>(n + 1));
    std::vector<std::vector<const SparseMatrix*>> grid(n, std::vector<const SparseMatrix*>(n + 1, nullptr));
    for (std::size_t i = 0; i <= n; ++i) {
      const std::size_t j = n - i;
      if (i >= 1) {
        blocks[i - 1][i] = kron(a.differentials[i - 1], ident(b.terms[j]));
        grid[i - 1][i] = &blocks[i - 1][i];
      }
      if (j >= 1) {
        SparseMatrix m = kron(ident(a.terms[i]), b.differentials[j - 1]);
        blocks[i][i] = i % 2 == 0 ? std::move(m) : m.scaled(Rational(-1));
        grid[i][i] = &blocks[i][i];
      }
    }
    return block_matrix(component_dims(n - 1), component_dims(n), grid);
  };
  // h : T_n → T_{n+1}; (i, j) → (i+1, j) by s_i ⊗ 1 and (0, j) → (0, j+1) by σ ⊗ s'_j.
  const SparseMatrix sigma = a.contraction[0] * a.augmentation;
  auto homotopy = [&](std::size_t n) {
    std::vector<std::vector<SparseMatrix>> blocks(n + 2, std::vector<SparseMatrix>(n + 1));
    std::vector<std::vector<const SparseMatrix*>> grid(n + 2, std::vector<const SparseMatrix*>(n + 1, nullptr));
    for (std::size_t i = 0; i <= n; ++i) {
      const std::size_t j = n - i;
      blocks[i + 1][i] = kron(a.contraction[i + 1], ident(b.terms[j]));
      grid[i + 1][i] = &blocks[i + 1][i];
    }
    blocks[0][0] = kron(sigma, b.contraction[n + 1]);
    grid[0][0] = &blocks[0][0];
    return block_matrix(component_dims(n + 1), component_dims(n), grid);
  };

  Resolution res;
  res.kind = ResolutionKind::Tensor;
  res.target = LazyModule::tensor(a.target, b.target, big);
  for (std::size_t n = 0; n <= top; ++n) {
    check_deadline("tensor resolution");
    res.terms.push_back(total(n));
    if (n >= 1) res.differentials.push_back(differential(n));
  }
  res.augmentation = kron(a.augmentation, b.augmentation);
  res.contraction.push_back(kron(a.contraction[0], b.contraction[0]));
  for (std::size_t n = 0; n <= top; ++n) res.contraction.push_back(homotopy(n));
  ModulePtr tail_module = total(top + 1);
  res.tail = differential(top + 1);
  res.tail_dim = tail_module->dim();
  res.target_small = small_actions(pair, *res.target);
  for (const auto& t : res.terms) res.terms_small.push_back(small_actions(pair, *t));
  res.tail_small = small_actions(pair, *tail_module);
  return res;
}

// ------------------------------------------------------------ verification

namespace {

bool intertwines(const SparseMatrix& f, const std::vector<SparseMatrix>& src,
                 const std::vector<SparseMatrix>& dst) {
  for (std::size_t g = 0; g < src.size(); ++g) {
    if (f * src[g] != dst[g] * f) return false;
  }
  return true;
}

std::vector<SparseMatrix> big_actions(const ResolventPair& pair, const LazyModule& m) {
  std::vector<SparseMatrix> out;
  for (Index g : pair.big_generators) out.push_back(m.action(g));
  return out;
}

}  // namespace

ResolutionCheck verify_resolution(const Resolution& res, const ResolventPair& pair) {
  const std::size_t top = res.maxdeg();
  ResolutionCheck c;
  std::ostringstream why;
  // maps[0] = ε, maps[n] = d_n, maps[N + 1] = tail
  std::vector<const SparseMatrix*> maps{&res.augmentation};
  for (const auto& d : res.differentials) maps.push_back(&d);
  maps.push_back(&res.tail);
  std::vector<std::size_t> dims{res.target->dim()};
  for (const auto& t : res.terms) dims.push_back(t->dim());
  dims.push_back(res.tail_dim);  // dims[n + 1] = dim P_n

  c.complex = true;
  for (std::size_t n = 0; n <= top; ++n) {
    check_deadline("verify resolution");
    if (!((*maps[n]) * (*maps[n + 1])).is_zero()) {
      c.complex = false;
      why << "d_" << n << " d_" << n + 1 << " != 0; ";
    }
  }

  c.module_maps = true;
  {
    std::vector<SparseMatrix> prev = big_actions(pair, *res.target);
    for (std::size_t n = 0; n <= top; ++n) {
      std::vector<SparseMatrix> cur = big_actions(pair, *res.terms[n]);
      if (!intertwines(*maps[n], cur, prev)) {
        c.module_maps = false;
        why << "d_" << n << " is not A-linear; ";
      }
      prev = std::move(cur);
    }
    if (!intertwines(res.tail, res.tail_small, res.terms_small[top])) {
      c.module_maps = false;
      why << "tail is not B-linear; ";
    }
  }

  c.exact = true;
  for (std::size_t n = 0; n <= top + 1; ++n) {
    check_deadline("resolution ranks");
    CheckedRank r = checked_rank(maps[n]->columns(), maps[n]->rows());
    c.ranks.push_back(r.exact);
  }
  if (c.ranks[0] != dims[0]) {
    c.exact = false;
    why << "augmentation not onto; ";
  }
  for (std::size_t n = 0; n <= top; ++n) {
    if (c.ranks[n] + c.ranks[n + 1] != dims[n + 1]) {
      c.exact = false;
      why << "not exact at P_" << n << "; ";
    }
  }

  c.b_linear_splitting = intertwines(res.contraction[0], res.target_small, res.terms_small[0]);
  for (std::size_t n = 0; n <= top; ++n) {
    const auto& dst = n == top ? res.tail_small : res.terms_small[n + 1];
    if (!intertwines(res.contraction[n + 1], res.terms_small[n], dst)) {
      c.b_linear_splitting = false;
      why << "s_" << n << " is not B-linear; ";
    }
  }

  c.homotopy = res.augmentation * res.contraction[0] == SparseMatrix::identity(dims[0]);
  if (!c.homotopy) why << "ε s_{-1} != 1; ";
  for (std::size_t n = 0; n <= top; ++n) {
    check_deadline("verify resolution");
    SparseMatrix lhs = res.contraction[n] * (*maps[n]) + (*maps[n + 1]) * res.contraction[n + 1];
    if (lhs != SparseMatrix::identity(dims[n + 1])) {
      c.homotopy = false;
      why << "ds + sd != 1 at P_" << n << "; ";
    }
  }
  c.detail = why.str();
  return c;
}

// -------------------------------------------------------------------- Ext

ExtResult relative_ext(const Resolution& res, const ResolventPair& pair, const LazyModule& w) {
  if (w.algebra()->dim() != pair.big()->dim()) throw std::invalid_argument("relative_ext: W is not over A");
  const std::size_t top = res.maxdeg();
  std::vector<const SparseMatrix*> wa;
  for (Index g : pair.big_generators) wa.push_back(&w.action(g));
  ExtResult out;
  for (std::size_t n = 0; n <= top; ++n) {
    check_deadline("relative ext");
    const LazyModule& p = *res.terms[n];
    std::vector<const SparseMatrix*> pa;
    for (Index g : pair.big_generators) pa.push_back(&p.action(g));
    std::vector<SparseMatrix> hom = hom_space_from_actions(pa, wa, p.dim(), w.dim());
    const SparseMatrix& next = n == top ? res.tail : res.differentials[n];
    // δ^n φ = φ ∘ d_{n+1}, flattened column-major.
    std::vector<SparseVector> images;
    images.reserve(hom.size());
    for (const auto& phi : hom) {
      SparseMatrix img = phi * next;
      SparseVector flat;
      for (Index col = 0; col < img.cols(); ++col) {
        for (const auto& e : img.column(col)) {
          flat.push_back({static_cast<Index>(col * w.dim() + e.index), e.value});
        }
      }
      images.push_back(std::move(flat));
    }
    const std::size_t width = w.dim() * next.cols();
    if (width >= (std::size_t{1} << 32)) throw UnsupportedDegree("relative_ext: cochain space too large");
    CheckedRank r = checked_rank(images, width);
    out.modular_agree = out.modular_agree && r.agree();
    const std::size_t rank_in = n == 0 ? 0 : out.ranks.back();
    if (r.exact + rank_in > hom.size()) throw ConsistencyFailure("relative_ext: rank exceeds Hom dimension");
    out.hom_dims.push_back(hom.size());
    out.ranks.push_back(r.exact);
    out.dims.push_back(hom.size() - r.exact - rank_in);
  }
  return out;
}

ExtResult relative_ext(const ResolventPair& pair, ModulePtr v, const LazyModule& w,
                       std::size_t maxdeg, ResolutionKind kind) {
  Resolution res = make_resolution(kind, pair, std::move(v), maxdeg);
  return relative_ext(res, pair, w);
}

// ------------------------------------------------------------ crosschecks

AdjunctionCheck adjunction_check_tensor(HopfPtr h, const TensorElement& r, std::size_t n,
                                        ResolutionKind kind) {
  VerifiedRMatrix vr = require_rmatrix(*h, r);
  AdjunctionCheck out;
  out.degree = n;
  out.cohomology = DYComplex::tensor_with_r(h, r).cohomology(n).dim;
  DoubleAlgebra d = drinfeld_double(h);
  AlgebraPtr dd = tensor_algebra(d.hopf->algebra(), d.hopf->algebra());
  ResolventPair pair = double_tensor_pair(d, dd);
  CoefficientModule w = coeff_tensor_product(d, dd, vr);
  ModulePtr triv = LazyModule::from_rep(trivial_module(*d.hopf));
  ModulePtr v = LazyModule::tensor(triv, triv, dd);
  Resolution res = make_resolution(kind, pair, v, n);
  out.resolution_verified = verify_resolution(res, pair).ok();
  out.ext = relative_ext(res, pair, *LazyModule::from_rep(w.module)).dims[n];
  return out;
}

AdjunctionCheck adjunction_check_restriction(HopfPtr h, HopfPtr k, const SparseMatrix& iota,
                                             std::size_t n, ResolutionKind kind) {
  AdjunctionCheck out;
  out.degree = n;
  out.cohomology = DYComplex::restriction(h, k, iota).cohomology(n).dim;
  DoubleAlgebra d = drinfeld_double(h);
  ResolventPair pair = double_pair(d);
  CoefficientModule w = coeff_restriction(d, *k, iota);
  Resolution res = make_resolution(kind, pair, LazyModule::from_rep(trivial_module(*d.hopf)), n);
  out.resolution_verified = verify_resolution(res, pair).ok();
  out.ext = relative_ext(res, pair, *LazyModule::from_rep(w.module)).dims[n];
  return out;
}

DimensionFormulaCheck dimension_formula_check(HopfPtr h, const TensorElement& r) {
  DimensionFormulaCheck out;
  out.h2_tensor = DYComplex::tensor_with_r(h, r).cohomology(2).dim;
  out.h2_id = DYComplex::identity(h).cohomology(2).dim;
  out.tangent_dim = tangent_space(*h, r).dim();
  return out;
}

KunnethCheck kunneth_check(const ResolventPair& p, ModulePtr v, ModulePtr w, const ResolventPair& q,
                           ModulePtr v2, ModulePtr w2, const ResolventPair& ab, std::size_t n,
                           ResolutionKind kind) {
  KunnethCheck out;
  out.degree = n;
  Resolution ra = make_resolution(kind, p, v, n + 1);
  Resolution rb = make_resolution(kind, q, v2, n + 1);
  out.factor_a = relative_ext(ra, p, *w).dims;
  out.factor_b = relative_ext(rb, q, *w2).dims;
  for (std::size_t i = 0; i <= n; ++i) out.product_sum += out.factor_a[i] * out.factor_b[n - i];
  ModulePtr vt = LazyModule::tensor(v, v2, ab.big());
  ModulePtr wt = LazyModule::tensor(w, w2, ab.big());
  out.direct = relative_ext(ab, vt, *wt, n, kind).dims[n];
  Resolution rt = tensor_resolution(ra, rb, ab);
  out.tensor_resolution_verified = verify_resolution(rt, ab).ok();
  out.tensor_resolution_ext = relative_ext(rt, ab, *wt).dims[n];
  return out;
}

}  // namespace hopfdy
