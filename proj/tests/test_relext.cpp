#include <doctest.h>

#include "hopfdy/catalog.hpp"
#include "hopfdy/errors.hpp"
#include "hopfdy/relext.hpp"
#include "test_util.hpp"

using namespace hopfdy;

namespace {

struct Setup {
  DoubleAlgebra d;
  ResolventPair pair;
  ModulePtr triv;
};

Setup setup(int k) {
  DoubleAlgebra d = drinfeld_double(build_bk(k));
  ResolventPair pair = double_pair(d);
  ModulePtr triv = LazyModule::from_rep(trivial_module(*d.hopf));
  return {std::move(d), std::move(pair), std::move(triv)};
}

}  // namespace

TEST_SUITE("relext") {
  TEST_CASE("ResolventPair rejects a non-injective map") {
    HopfPtr h = build_bk(1);
    AlgebraMap eps{h->algebra_ptr(), build_cyclic(1)->algebra_ptr(),
                   SparseMatrix::from_columns(1, {SparseVector{{0, 1}}, SparseVector{{0, 1}}, {}, {}})};
    CHECK_THROWS_AS(ResolventPair::make(eps), InvalidStructure);
  }

  TEST_CASE("lazy modules agree with their materialized forms") {
    Setup s = setup(1);
    ModuleRep m = s.triv->materialize();
    CHECK(verify_module(m).empty());
    auto ind = std::make_shared<const Induction>(s.pair.inclusion, regular_module(s.d.base->algebra_ptr()));
    ModulePtr g = LazyModule::induced(ind);
    CHECK(g->dim() == 16);
    ModuleRep gm = g->materialize();
    CHECK(verify_module(gm).empty());
    CHECK(verify_module(g->restrict_to(s.pair.inclusion)).empty());
    AlgebraPtr dd = tensor_algebra(s.d.hopf->algebra(), s.d.hopf->algebra());
    ModulePtr t = LazyModule::tensor(s.triv, s.triv, dd);
    CHECK(t->dim() == 1);
    CHECK(verify_module(t->materialize()).empty());
    ModulePtr sum = LazyModule::direct_sum({s.triv, g});
    CHECK(verify_module(sum->materialize()).empty());
  }

  TEST_CASE("bar resolution of the trivial D(B_1)-module") {
    Setup s = setup(1);
    Resolution res = bar_resolution(s.pair, s.triv, 2);
    CHECK(res.term_dims() == std::vector<std::size_t>{4, 16, 64, 256});
    ResolutionCheck chk = verify_resolution(res, s.pair);
    CHECK(chk.complex);
    CHECK(chk.module_maps);
    CHECK(chk.exact);
    CHECK(chk.b_linear_splitting);
    CHECK(chk.homotopy);
  }

  TEST_CASE("cover resolution: first kernel has dimension 3") {
    Setup s = setup(1);
    Resolution res = iterated_cover_resolution(s.pair, s.triv, 3);
    CHECK(res.term_dims()[0] == 4);
    CHECK(res.term_dims()[1] == 12);
    CHECK(verify_resolution(res, s.pair).ok());
  }

  TEST_CASE("Ext(k, k) over (D(B_1), B_1) is 1, 0, 1, 0 for both resolutions") {
    Setup s = setup(1);
    for (auto kind : {ResolutionKind::Cover, ResolutionKind::Bar}) {
      ExtResult e = relative_ext(s.pair, s.triv, *s.triv, 3, kind);
      CHECK(e.dims == std::vector<std::size_t>{1, 0, 1, 0});
      CHECK(e.modular_agree);
    }
  }

  TEST_CASE("property: relatively projective modules have no higher Ext") {
    Setup s = setup(1);
    auto ind = std::make_shared<const Induction>(s.pair.inclusion, trivial_module(*s.d.base));
    ModulePtr v = LazyModule::induced(ind);
    ModulePtr w = LazyModule::from_rep(build_c_pm(*s.d.base, s.d.hopf->algebra_ptr(), 1));
    for (ModulePtr coeff : {s.triv, w}) {
      ExtResult e = relative_ext(s.pair, v, *coeff, 2, ResolutionKind::Cover);
      CHECK(e.dims[1] == 0);
      CHECK(e.dims[2] == 0);
    }
  }

  TEST_CASE("adjunction: restriction with K = H") {
    HopfPtr h = build_bk(1);
    AdjunctionCheck c = adjunction_check_restriction(h, h, SparseMatrix::identity(4), 2, ResolutionKind::Cover);
    CHECK(c.ext == 1);
    CHECK(c.consistent());
  }

  TEST_CASE("adjunction: restriction along B_1 ⊂ B_2 in degree 2") {
    AdjunctionCheck c = adjunction_check_restriction(build_bk(2), build_bk(1), bk::inclusion(1, 2), 2,
                                                     ResolutionKind::Cover);
    CHECK(c.cohomology == 3);
    CHECK(c.consistent());
  }

  TEST_CASE("dimension formula on B_1") {
    DimensionFormulaCheck c = dimension_formula_check(build_bk(1), bk_r0(1));
    CHECK(c.h2_tensor == 3);
    CHECK(c.h2_id == 1);
    CHECK(c.tangent_dim == 1);
    CHECK(c.consistent());
  }

  TEST_CASE("Künneth in degrees 0, 1, 2") {
    Setup s = setup(1);
    AlgebraPtr dd = tensor_algebra(s.d.hopf->algebra(), s.d.hopf->algebra());
    ResolventPair ab = double_tensor_pair(s.d, dd);
    const std::size_t expect[3] = {1, 0, 2};
    for (std::size_t n = 0; n <= 2; ++n) {
      KunnethCheck c = kunneth_check(s.pair, s.triv, s.triv, s.pair, s.triv, s.triv, ab, n, ResolutionKind::Cover);
      CHECK(c.direct == expect[n]);
      CHECK(c.consistent());
    }
  }

  TEST_CASE("to_string of resolution kinds") {
    CHECK(to_string(ResolutionKind::Bar) == "bar");
    CHECK(to_string(ResolutionKind::Cover) == "cover");
    CHECK(to_string(ResolutionKind::Tensor) == "tensor");
  }
}
