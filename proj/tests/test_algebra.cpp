#include <doctest.h>

#include "hopfdy/catalog.hpp"
#include "hopfdy/errors.hpp"
#include "hopfdy/exactlin.hpp"
#include "hopfdy/hopf.hpp"
#include "test_util.hpp"

using namespace hopfdy;

TEST_SUITE("algcore") {
  TEST_CASE("catalog algebras satisfy the algebra axioms") {
    for (int n = 1; n <= 4; ++n) CHECK(verify_algebra(build_cyclic(n)->algebra()).empty());
    for (int k = 1; k <= 3; ++k) CHECK(verify_algebra(build_bk(k)->algebra()).empty());
  }

  TEST_CASE("a broken product is reported with its axiom") {
    HopfPtr h = build_bk(1);
    const Algebra& a = h->algebra();
    std::vector<SparseVector> mult = a.mult_table();
    mult[2 * 4 + 2] = unit_vector(0);  // x1 x1 = 1 breaks associativity with g
    Algebra bad(a.labels(), mult, a.unit());
    Report r = verify_algebra(bad);
    REQUIRE_FALSE(r.empty());
    CHECK(r.front().axiom == "associativity");
  }

  TEST_CASE("Hom from the regular module has the module's dimension") {
    AlgebraPtr a = build_bk(1)->algebra_ptr();
    ModuleRep reg = regular_module(a);
    CHECK(hom_space(reg, reg).size() == a->dim());
    ModuleRep triv = trivial_module(*build_bk(1));
    CHECK(hom_space(reg, triv).size() == 1);
    CHECK(hom_space(triv, reg).size() == 1);  // left integrals of B_1
  }

  TEST_CASE("property: every hom_space element intertwines") {
    HopfPtr h = build_bk(2);
    ModuleRep reg = regular_module(h->algebra_ptr());
    ModuleRep triv = trivial_module(*h);
    for (const auto& f : hom_space(triv, reg)) CHECK(is_intertwiner(f, triv, reg));
    for (const auto& f : hom_space(reg, triv)) CHECK(is_intertwiner(f, reg, triv));
  }

  TEST_CASE("induction from the unit subalgebra gives the regular module") {
    HopfPtr h = build_bk(1);
    HopfPtr k = build_cyclic(1);
    AlgebraMap iota{k->algebra_ptr(), h->algebra_ptr(), SparseMatrix::from_triplets(4, 1, {{0, 0, 1}})};
    ModuleRep ind = induced_module(iota, trivial_module(*k));
    CHECK(ind.dim == 4);
    CHECK(verify_module(ind).empty());
  }

  TEST_CASE("induction along B_1 ⊂ B_2 has dimension [B_2 : B_1] dim V") {
    HopfPtr h = build_bk(2), k = build_bk(1);
    AlgebraMap iota{k->algebra_ptr(), h->algebra_ptr(), bk::inclusion(1, 2)};
    CHECK(verify_algebra_map(iota).empty());
    Induction ind(iota, trivial_module(*k));
    CHECK(ind.dim() == 2);
    ModuleRep m = ind.module();
    CHECK(verify_module(m).empty());
    ModuleRep regk = regular_module(k->algebra_ptr());
    Induction ind2(iota, regk);
    CHECK(ind2.dim() == 8);
  }

  TEST_CASE("module_map_kernel of the augmentation") {
    HopfPtr h = build_bk(1);
    ModuleRep reg = regular_module(h->algebra_ptr());
    ModuleRep triv = trivial_module(*h);
    SparseMatrix eps = SparseMatrix::from_columns(1, {SparseVector{{0, 1}}, SparseVector{{0, 1}}, {}, {}});
    ModuleKernel k = module_map_kernel(eps, reg, triv);
    CHECK(k.module.dim == 3);
    CHECK(verify_module(k.module).empty());
    CHECK((eps * k.inclusion).is_zero());
    SparseMatrix not_map = SparseMatrix::from_columns(1, {{}, {}, SparseVector{{0, 1}}, {}});
    CHECK_THROWS_AS(module_map_kernel(not_map, reg, triv), InvalidStructure);
  }

  TEST_CASE("tensor algebra and external tensor modules") {
    HopfPtr h = build_bk(1);
    AlgebraPtr aa = tensor_algebra(h->algebra(), h->algebra());
    CHECK(aa->dim() == 16);
    CHECK(verify_algebra(*aa).empty());
    ModuleRep reg = regular_module(h->algebra_ptr());
    ModuleRep t = tensor_modules(reg, trivial_module(*h), aa);
    CHECK(t.dim == 4);
    CHECK(verify_module(t).empty());
  }

  TEST_CASE("algebra_generators generate") {
    HopfPtr h = build_bk(3);
    auto gens = algebra_generators(h->algebra());
    CHECK(gens.size() <= 5);
  }

  TEST_CASE("SubspaceCoordinates reconstructs members and rejects others") {
    SparseMatrix m = SparseMatrix::from_triplets(1, 3, {{0, 0, 1}, {0, 1, 1}, {0, 2, 1}});
    SubspaceCoordinates sub(kernel_basis(m), 3);
    CHECK(sub.dim() == 2);
    CHECK(sub.contains(SparseVector{{0, 1}, {1, -1}}));
    CHECK_FALSE(sub.contains(SparseVector{{0, 1}}));
  }
}

TEST_SUITE("hopfcore") {
  TEST_CASE("catalog Hopf algebras and their duals verify") {
    for (int n = 1; n <= 4; ++n) {
      HopfPtr h = build_cyclic(n);
      CHECK(verify_hopf(*h).empty());
      CHECK(verify_hopf(dual_hopf(*h, false)).empty());
      CHECK(verify_hopf(dual_hopf(*h, true)).empty());
    }
    for (int k = 1; k <= 3; ++k) {
      HopfPtr h = build_bk(k);
      CHECK(h->dim() == (std::size_t{2} << k));
      CHECK(verify_hopf(*h).empty());
      CHECK(verify_hopf(dual_hopf(*h, false)).empty());
      CHECK(verify_hopf(dual_hopf(*h, true)).empty());
    }
  }

  TEST_CASE("B_k presentation: x_i^2 = 0, g x_i = -x_i g, x_i x_j = -x_j x_i") {
    HopfPtr h = build_bk(2);
    const Algebra& a = h->algebra();
    SparseVector x1 = unit_vector(bk::x(1)), x2 = unit_vector(bk::x(2)), g = unit_vector(bk::g());
    CHECK(a.multiply(x1, x1).empty());
    CHECK(a.multiply(g, x1) == scale(a.multiply(x1, g), -1));
    CHECK(a.multiply(x1, x2) == scale(a.multiply(x2, x1), -1));
    CHECK(a.multiply(g, g) == a.unit());
    // Δ(x1) = 1 ⊗ x1 + x1 ⊗ g
    TensorElement d = h->coproduct_of(x1);
    const Index i1[2] = {0, bk::x(1)}, i2[2] = {bk::x(1), bk::g()};
    CHECK(d == TensorElement::basis(h->dim(), i1) + TensorElement::basis(h->dim(), i2));
  }

  TEST_CASE("B_1 ⊂ B_2 is a Hopf map") {
    CHECK(verify_hopf_map(*build_bk(1), *build_bk(2), bk::inclusion(1, 2)).empty());
    CHECK(verify_hopf_map(*build_bk(2), *build_bk(3), bk::inclusion(2, 3)).empty());
  }

  TEST_CASE("tensor_hopf of B_1 with itself") {
    HopfPtr h = build_bk(1);
    CHECK(verify_hopf(tensor_hopf(*h, *h)).empty());
  }

  TEST_CASE("property: iterated coproducts are coassociative in every slot") {
    HopfPtr h = build_bk(2);
    for (Index b = 0; b < h->dim(); ++b) {
      TensorElement d = h->coproduct_of(unit_vector(b));
      CHECK(iterated_coproduct(*h, d, 0, 1) == iterated_coproduct(*h, d, 1, 1));
      CHECK(coproduct_power(*h, unit_vector(b), 3) == iterated_coproduct(*h, d, 0, 1));
      CHECK(apply_counit_at(*h, d, 0) == TensorElement::from_vector(h->dim(), unit_vector(b)));
    }
  }

  TEST_CASE("property: coregular actions are a left and a right module structure") {
    HopfPtr h = build_bk(1);
    const Algebra& a = h->algebra();
    std::mt19937 rng(17);
    for (int t = 0; t < 10; ++t) {
      SparseVector x = test::random_vector(rng, 4, 0.6), y = test::random_vector(rng, 4, 0.6);
      SparseVector f = test::random_vector(rng, 4, 0.8);
      CHECK(coregular_left(*h, a.multiply(x, y), f) == coregular_left(*h, x, coregular_left(*h, y, f)));
      CHECK(coregular_right(*h, f, a.multiply(x, y)) == coregular_right(*h, coregular_right(*h, f, x), y));
    }
  }

  TEST_CASE("antipode squared on B_k is conjugation by g") {
    HopfPtr h = build_bk(2);
    const Algebra& a = h->algebra();
    SparseMatrix s2 = h->antipode() * h->antipode();
    SparseVector g = unit_vector(bk::g());
    for (Index b = 0; b < h->dim(); ++b) {
      CHECK(s2.column(b) == a.multiply(a.multiply(g, unit_vector(b)), g));
    }
  }

  TEST_CASE("catalog keys parse and print") {
    auto k = CatalogKey::parse("bk:3");
    REQUIRE(k.has_value());
    CHECK(k->str() == "bk:3");
    CHECK(CatalogKey::parse("cminus:2").has_value());
    CHECK_FALSE(CatalogKey::parse("bk:").has_value());
    CHECK_FALSE(CatalogKey::parse("foo:1").has_value());
  }
}
