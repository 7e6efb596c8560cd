// Acceptance suite: one PASS/FAIL line per criterion; exits non-zero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hopfdy/catalog.hpp"
#include "hopfdy/double.hpp"
#include "hopfdy/dycomplex.hpp"
#include "hopfdy/exactlin.hpp"
#include "hopfdy/relext.hpp"
#include "hopfdy/rmatrix.hpp"

using namespace hopfdy;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  // Records a check; the first failures are kept in the detail line.
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "failed: ";
      else detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

void note(Outcome& o, const std::string& s) {
  if (o.ok) o.detail << s << ' ';
}

std::string count_list(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::vector<SparseVector> flats(const std::vector<TensorElement>& ts) {
  std::vector<SparseVector> out;
  for (const auto& t : ts) out.push_back(t.flat());
  return out;
}

bool in_span(const std::vector<TensorElement>& span, const TensorElement& u) {
  std::vector<TensorElement> all = span;
  all.push_back(u);
  auto [vecs, width] = compress(all);
  std::vector<SparseVector> base(vecs.begin(), vecs.end() - 1);
  return rank_of_vectors(base, width) == rank_of_vectors(vecs, width);
}

std::vector<std::vector<Rational>> random_lambda(std::mt19937& rng, int k) {
  std::uniform_int_distribution<long long> num(-9, 9), den(1, 7);
  std::vector<std::vector<Rational>> l(k, std::vector<Rational>(k));
  for (auto& row : l) {
    for (auto& c : row) c = Rational(num(rng), den(rng));
  }
  return l;
}

// Criterion 8/9 instances, shared with criterion 15.
struct ExtInstance {
  std::string name;
  ResolventPair pair;
  ModulePtr v;
  ModulePtr w;
  std::size_t maxdeg;
};

ExtInstance restriction_instance() {
  DoubleAlgebra d = drinfeld_double(build_bk(2));
  CoefficientModule w = coeff_restriction(d, *build_bk(1), bk::inclusion(1, 2));
  return {"restriction B_2 ⊃ B_1", double_pair(d), LazyModule::from_rep(trivial_module(*d.hopf)),
          LazyModule::from_rep(w.module), 3};
}

ExtInstance braiding_instance() {
  HopfPtr h = build_bk(1);
  DoubleAlgebra d = drinfeld_double(h);
  AlgebraPtr dd = tensor_algebra(d.hopf->algebra(), d.hopf->algebra());
  VerifiedRMatrix r = require_rmatrix(*h, bk_r0(1));
  ModulePtr triv = LazyModule::from_rep(trivial_module(*d.hopf));
  return {"braiding B_1", double_tensor_pair(d, dd), LazyModule::tensor(triv, triv, dd),
          LazyModule::from_rep(coeff_tensor_product(d, dd, r).module), 2};
}

// Ext dimensions and the resolution check, by resolution kind.
struct ExtRun {
  ExtResult ext;
  ResolutionCheck check;
};

ExtRun run_ext(const ExtInstance& inst, ResolutionKind kind) {
  Resolution res = make_resolution(kind, inst.pair, inst.v, inst.maxdeg);
  ExtRun out;
  out.check = verify_resolution(res, inst.pair);
  out.ext = relative_ext(res, inst.pair, *inst.w);
  return out;
}

// Bar runs from criteria 8 and 9, reused by criterion 15.
std::vector<std::pair<std::string, ExtRun>> g_bar_runs;
std::vector<std::pair<std::string, ExtRun>> g_cover_runs;

void criterion1(Outcome& o) {
  std::vector<std::pair<std::string, HopfPtr>> hs;
  for (int n = 1; n <= 4; ++n) hs.emplace_back("cyclic:" + std::to_string(n), build_cyclic(n));
  for (int k = 1; k <= 3; ++k) hs.emplace_back("bk:" + std::to_string(k), build_bk(k));
  const std::size_t base = hs.size();
  for (std::size_t i = 0; i < base; ++i) {
    hs.emplace_back(hs[i].first + "*", std::make_shared<const HopfAlgebra>(dual_hopf(*hs[i].second, false)));
    hs.emplace_back(hs[i].first + "*op", std::make_shared<const HopfAlgebra>(dual_hopf(*hs[i].second, true)));
  }
  HopfPtr b1 = build_bk(1);
  hs.emplace_back("B_1⊗B_1", std::make_shared<const HopfAlgebra>(tensor_hopf(*b1, *b1)));
  hs.emplace_back("D(B_1)", drinfeld_double(b1).hopf);
  hs.emplace_back("D(B_2)", drinfeld_double(build_bk(2)).hopf);
  for (const auto& [name, h] : hs) {
    Report r = verify_hopf(*h);
    o.require(r.empty(), name + ": " + (r.empty() ? "" : r.front().axiom));
  }
  note(o, std::to_string(hs.size()) + " Hopf algebras verified");
}

void criterion2(Outcome& o) {
  for (int k = 1; k <= 3; ++k) {
    HopfPtr h = build_bk(k);
    TensorElement r = bk_r0(k);
    o.require(check_rmatrix(*h, r).verified(), "R0 on bk:" + std::to_string(k));
    o.require(tensor_mul(h->algebra(), r, r) == tensor_unit(h->algebra(), 2),
              "R0^2 = 1⊗1 on bk:" + std::to_string(k));
  }
  note(o, "k = 1..3");
}

void criterion3(Outcome& o) {
  std::vector<std::size_t> dims;
  for (int k = 1; k <= 3; ++k) {
    HopfPtr h = build_bk(k);
    TangentBasis tb = tangent_space(*h, bk_r0(k));
    dims.push_back(tb.dim());
    o.require(tb.dim() == static_cast<std::size_t>(k * k), "dim at k = " + std::to_string(k));
    auto ref = bk_reference_tangent_basis(k);
    o.require(span_equal(flats(tb.vectors), flats(ref), h->dim() * h->dim()),
              "span equality at k = " + std::to_string(k));
  }
  note(o, "dims " + count_list(dims));
}

void criterion4(Outcome& o) {
  std::vector<std::size_t> dims;
  for (int k = 1; k <= 2; ++k) {
    std::size_t d = DYComplex::identity(build_bk(k)).cohomology_dim(2);
    dims.push_back(d);
    o.require(d == static_cast<std::size_t>(k * (k + 1) / 2), "H^2 at k = " + std::to_string(k));
  }
  note(o, "H^2 " + count_list(dims));
}

void criterion5(Outcome& o) {
  DYComplex c1 = DYComplex::tensor_with_r(build_bk(1), bk_r0(1));
  CohomologyInfo h2 = c1.cohomology(2), h3 = c1.cohomology(3);
  o.require(h2.dim == 3, "B_1 H^2 = " + std::to_string(h2.dim));
  o.require(h3.dim == 0, "B_1 H^3 = " + std::to_string(h3.dim));
  o.require(h2.modular_agree && h3.modular_agree, "modular rank cross-check");
  CohomologyInfo b2 = DYComplex::tensor_with_r(build_bk(2), bk_r0(2)).cohomology(2);
  o.require(b2.dim == 10, "B_2 H^2 = " + std::to_string(b2.dim));
  note(o, "B_1 H^2 = " + std::to_string(h2.dim) + ", H^3 = " + std::to_string(h3.dim) +
              "; B_2 H^2 = " + std::to_string(b2.dim));
}

void criterion6(Outcome& o) {
  for (int k = 1; k <= 2; ++k) {
    DimensionFormulaCheck c = dimension_formula_check(build_bk(k), bk_r0(k));
    const std::size_t lhs = static_cast<std::size_t>(k * k);
    o.require(c.consistent() && c.tangent_dim == lhs && c.h2_tensor == lhs + 2 * c.h2_id,
              "k = " + std::to_string(k));
    note(o, "k=" + std::to_string(k) + ": " + std::to_string(c.h2_tensor) + " - 2*" +
                std::to_string(c.h2_id) + " = " + std::to_string(lhs));
  }
}

std::vector<std::size_t> g_restriction_dy;

void criterion7(Outcome& o) {
  DYComplex c = DYComplex::restriction(build_bk(2), build_bk(1), bk::inclusion(1, 2));
  g_restriction_dy.clear();
  for (std::size_t n = 1; n <= 3; ++n) g_restriction_dy.push_back(c.cohomology_dim(n));
  o.require(g_restriction_dy == std::vector<std::size_t>{0, 3, 0}, "H^1..3 = " + count_list(g_restriction_dy));
  note(o, "H^1..3 " + count_list(g_restriction_dy));
}

void criterion8(Outcome& o) {
  ExtInstance inst = restriction_instance();
  ExtRun run = run_ext(inst, ResolutionKind::Bar);
  g_bar_runs.emplace_back(inst.name, run);
  std::vector<std::size_t> ext(run.ext.dims.begin() + 1, run.ext.dims.end());
  o.require(ext == std::vector<std::size_t>{0, 3, 0}, "Ext^1..3 = " + count_list(ext));
  o.require(g_restriction_dy.empty() || ext == g_restriction_dy, "matches the restriction cohomology");
  o.require(run.check.ok(), "bar resolution check: " + run.check.detail);
  note(o, "bar Ext^1..3 " + count_list(ext));
}

void criterion9(Outcome& o) {
  ExtInstance inst = braiding_instance();
  ExtRun run = run_ext(inst, ResolutionKind::Cover);
  g_cover_runs.emplace_back(inst.name, run);
  o.require(run.check.ok(), "cover resolution check: " + run.check.detail);
  const std::size_t e2 = run.ext.dims.at(2);
  o.require(e2 == 3, "Ext^2 = " + std::to_string(e2));

  DoubleAlgebra d = drinfeld_double(build_bk(1));
  ModulePtr triv = LazyModule::from_rep(trivial_module(*d.hopf));
  ExtResult kk = relative_ext(double_pair(d), triv, *triv, 2, ResolutionKind::Cover);
  const std::size_t tangent = tangent_space(*build_bk(1), bk_r0(1)).dim();
  const long long diff = static_cast<long long>(e2) - 2 * static_cast<long long>(kk.dims.at(2));
  o.require(diff == 1 && tangent == 1, "3 - 2*Ext^2(k,k) = " + std::to_string(diff) + ", tangent " +
                                           std::to_string(tangent));
  note(o, "cover Ext^2 = " + std::to_string(e2) + ", Ext^2(k,k) = " + std::to_string(kk.dims.at(2)) +
              ", difference " + std::to_string(diff) + " = tangent " + std::to_string(tangent));
}

void criterion10(Outcome& o) {
  HopfPtr h = build_bk(1);
  std::vector<DYComplex> cs;
  cs.push_back(DYComplex::identity(h));
  cs.push_back(DYComplex::tensor_with_r(h, bk_r0(1)));
  cs.push_back(DYComplex::restriction(h, build_cyclic(1), SparseMatrix::from_triplets(4, 1, {{0, 0, 1}})));
  const char* names[3] = {"identity", "tensor", "restriction"};
  std::size_t checks = 0;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const DYComplex& c = cs[k];
    const std::string tag = names[k];
    for (std::size_t n = 0; n <= 2; ++n) {
      for (const auto& u : c.cochain_basis(n)) {
        o.require(c.differential(n + 1, c.differential(n, u)).is_zero(), tag + " δδ at " + std::to_string(n));
        ++checks;
      }
    }
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& u : c.cochain_basis(n)) {
        TensorElement nu = c.normalize(n, u);
        o.require(c.normalize(n, nu) == nu, tag + " normalization idempotent at " + std::to_string(n));
        ++checks;
      }
    }
    for (const auto& u : c.cochain_basis(2)) {
      o.require(c.normalize(3, c.differential(2, u)) == c.differential(2, c.normalize(2, u)),
                tag + " normalization commutes with δ");
      ++checks;
    }
    std::vector<TensorElement> coboundaries;
    for (const auto& b : c.cochain_basis(1)) coboundaries.push_back(c.differential(1, b));
    for (const auto& z : c.cocycle_basis(2)) {
      TensorElement diff = c.normalize(2, z) - z;
      o.require(diff.is_zero() || in_span(coboundaries, diff), tag + " normalized cocycle cohomologous");
      ++checks;
    }
    for (std::size_t n = 1; n <= 2; ++n) {
      for (const auto& u : c.cochain_basis(n)) {
        for (std::size_t j = 0; j <= n; ++j) {
          for (std::size_t i = 0; i <= n + 1; ++i) {
            TensorElement lhs = c.codegeneracy(n + 1, j, c.coface(n, i, u));
            TensorElement rhs = (i == j || i == j + 1) ? u
                                : i < j ? c.coface(n - 1, i, c.codegeneracy(n, j - 1, u))
                                        : c.coface(n - 1, i - 1, c.codegeneracy(n, j, u));
            o.require(lhs == rhs, tag + " s_j ∂_i identity");
            ++checks;
          }
        }
      }
    }
  }
  note(o, std::to_string(checks) + " identities");
}

void criterion11(Outcome& o) {
  std::size_t count = 0;
  for (int k = 1; k <= 2; ++k) {
    HopfPtr h = build_bk(k);
    DYComplex c = DYComplex::tensor_with_r(h, bk_r0(k));
    for (const auto& t : bk_reference_tangent_basis(k)) {
      TensorElement u = cocycle_from_tangent(c, t);
      o.require(c.is_cochain(2, u) && c.differential(2, u).is_zero(), "cocycle at k = " + std::to_string(k));
      o.require(decompose_h2_tensor(c, u).t == t, "T recovered at k = " + std::to_string(k));
      ++count;
    }
  }
  note(o, std::to_string(count) + " tangent vectors");
}

void criterion12(Outcome& o) {
  std::mt19937 rng(20240901);
  for (int k = 1; k <= 2; ++k) {
    HopfPtr h = build_bk(k);
    const Algebra& a = h->algebra();
    for (int t = 0; t < 3; ++t) {
      auto l = random_lambda(rng, k), m = random_lambda(rng, k);
      TensorElement rl = bk_r_lambda(k, l);
      o.require(check_rmatrix(*h, rl).verified(), "R_lambda at k = " + std::to_string(k));
      auto sum = l;
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) sum[i][j] += m[i][j];
      }
      o.require(bk_r_lambda(k, sum) == tensor_mul(a, tensor_mul(a, rl, bk_r0(k)), bk_r_lambda(k, m)),
                "R_(lambda+mu) = R_lambda R0 R_mu at k = " + std::to_string(k));
      if (k == 1) o.require(tangent_space(*h, rl).dim() == 1, "tangent dim at R_lambda");
    }
  }
  note(o, "3 samples at k = 1, 2");
}

void criterion13(Outcome& o) {
  HopfPtr h = build_cyclic(2);
  const std::size_t t = tangent_space(*h, trivial_r(*h)).dim();
  const std::size_t h2 = DYComplex::identity(h).cohomology_dim(2);
  o.require(t == 0, "tangent dim " + std::to_string(t));
  o.require(h2 == 0, "H^2 " + std::to_string(h2));
  note(o, "tangent 0, H^2 0");
}

void criterion14(Outcome& o) {
  DoubleAlgebra d = drinfeld_double(build_bk(1));
  AlgebraPtr dd = tensor_algebra(d.hopf->algebra(), d.hopf->algebra());
  ResolventPair p = double_pair(d), ab = double_tensor_pair(d, dd);
  ModulePtr triv = LazyModule::from_rep(trivial_module(*d.hopf));
  KunnethCheck c = kunneth_check(p, triv, triv, p, triv, triv, ab, 2, ResolutionKind::Cover);
  o.require(c.direct == 2, "direct Ext^2 = " + std::to_string(c.direct));
  o.require(c.product_sum == 2, "product sum = " + std::to_string(c.product_sum));
  o.require(c.consistent(), "tensor resolution Ext^2 = " + std::to_string(c.tensor_resolution_ext));
  note(o, "direct " + std::to_string(c.direct) + " = sum " + std::to_string(c.product_sum) + " (factors " +
              count_list(c.factor_a) + ")");
}

void criterion15(Outcome& o) {
  std::vector<ExtInstance> insts;
  insts.push_back(restriction_instance());
  insts.push_back(braiding_instance());
  for (const auto& inst : insts) {
    auto find = [&](auto& runs, ResolutionKind kind) {
      for (auto& [name, run] : runs) {
        if (name == inst.name) return run;
      }
      ExtRun run = run_ext(inst, kind);
      runs.emplace_back(inst.name, run);
      return run;
    };
    ExtRun bar = find(g_bar_runs, ResolutionKind::Bar);
    ExtRun cover = find(g_cover_runs, ResolutionKind::Cover);
    o.require(bar.ext.dims == cover.ext.dims, inst.name + ": bar " + count_list(bar.ext.dims) + " vs cover " +
                                                  count_list(cover.ext.dims));
    o.require(bar.check.ok(), inst.name + " bar: " + bar.check.detail);
    o.require(cover.check.ok(), inst.name + " cover: " + cover.check.detail);
    note(o, inst.name + " " + count_list(bar.ext.dims) + ";");
  }
}

}  // namespace

int main() {
  const std::vector<std::function<void(Outcome&)>> criteria = {
      criterion1, criterion2,  criterion3,  criterion4,  criterion5,  criterion6,  criterion7, criterion8,
      criterion9, criterion10, criterion11, criterion12, criterion13, criterion14, criterion15};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i](o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string detail = o.detail.str();
    while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';')) detail.pop_back();
    std::printf("%s criterion %zu: %s (%.1f s)\n", o.ok ? "PASS" : "FAIL", i + 1, detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
