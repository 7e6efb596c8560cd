#include <doctest.h>

#include "hopfdy/catalog.hpp"
#include "hopfdy/errors.hpp"
#include "hopfdy/double.hpp"
#include "hopfdy/exactlin.hpp"
#include "hopfdy/rmatrix.hpp"
#include "test_util.hpp"

using namespace hopfdy;

namespace {

std::vector<std::vector<Rational>> random_lambda(std::mt19937& rng, int k) {
  std::vector<std::vector<Rational>> l(k, std::vector<Rational>(k));
  for (auto& row : l) {
    for (auto& c : row) c = test::random_rational(rng);
  }
  return l;
}

std::vector<SparseVector> flats(const std::vector<TensorElement>& ts) {
  std::vector<SparseVector> out;
  for (const auto& t : ts) out.push_back(t.flat());
  return out;
}

}  // namespace

TEST_SUITE("rmatrix") {
  TEST_CASE("R0 on B_1 has the expected coordinates") {
    TensorElement r = bk_r0(1);
    const Rational h(1, 2);
    const Index a[2] = {0, 0}, b[2] = {1, 0}, c[2] = {0, 1}, d[2] = {1, 1};
    TensorElement expect = TensorElement::basis(4, a, h) + TensorElement::basis(4, b, h) +
                           TensorElement::basis(4, c, h) + TensorElement::basis(4, d, -h);
    CHECK(r == expect);
    CHECK(flip(r) == r);
  }

  TEST_CASE("R0 verifies and is triangular for k <= 3") {
    for (int k = 1; k <= 3; ++k) {
      HopfPtr h = build_bk(k);
      TensorElement r = bk_r0(k);
      RMatrixReport rep = check_rmatrix(*h, r);
      CHECK(rep.verified());
      CHECK(tensor_mul(h->algebra(), r, r) == tensor_unit(h->algebra(), 2));
      REQUIRE(rep.inverse.has_value());
      CHECK(tensor_mul(h->algebra(), r, *rep.inverse) == tensor_unit(h->algebra(), 2));
      CHECK(tensor_mul(h->algebra(), *rep.inverse, r) == tensor_unit(h->algebra(), 2));
    }
  }

  TEST_CASE("1 ⊗ 1 fails on B_1 and passes on a cyclic group") {
    HopfPtr b1 = build_bk(1);
    RMatrixReport rep = check_rmatrix(*b1, trivial_r(*b1));
    CHECK_FALSE(rep.verified());
    REQUIRE_FALSE(rep.quasi_cocommutativity.empty());
    CHECK_THROWS_AS(require_rmatrix(*b1, trivial_r(*b1)), InvalidRMatrix);
    HopfPtr c2 = build_cyclic(2);
    CHECK(check_rmatrix(*c2, trivial_r(*c2)).verified());
  }

  TEST_CASE("tangent space at R0 has dimension k^2 and the reference basis") {
    for (int k = 1; k <= 3; ++k) {
      HopfPtr h = build_bk(k);
      TangentBasis tb = tangent_space(*h, bk_r0(k));
      CHECK(tb.dim() == static_cast<std::size_t>(k * k));
      auto ref = bk_reference_tangent_basis(k);
      for (const auto& t : ref) CHECK(is_tangent(*h, bk_r0(k), t));
      CHECK(span_equal(flats(tb.vectors), flats(ref), h->dim() * h->dim()));
      const SparseVector& eps = h->counit();
      for (const auto& t : tb.vectors) {
        CHECK(contract_at(t, 0, eps).is_zero());
        CHECK(contract_at(t, 1, eps).is_zero());
      }
    }
  }

  TEST_CASE("semisimple sanity: tangent space of cyclic:2 at 1 ⊗ 1 is zero") {
    HopfPtr h = build_cyclic(2);
    CHECK(tangent_space(*h, trivial_r(*h)).dim() == 0);
  }

  TEST_CASE("property: tangent dimension is invariant under permuting the basis") {
    std::mt19937 rng(99);
    HopfPtr h = build_bk(2);
    for (int t = 0; t < 3; ++t) {
      std::vector<Index> perm(h->dim());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      HopfPtr p = test::permute_basis(*h, perm);
      CHECK(verify_hopf(*p).empty());
      TensorElement r = test::permute_tensor(bk_r0(2), perm);
      CHECK(check_rmatrix(*p, r).verified());
      CHECK(tangent_space(*p, r).dim() == 4);
    }
  }

  TEST_CASE("property: R_lambda family") {
    std::mt19937 rng(4242);
    for (int k = 1; k <= 2; ++k) {
      HopfPtr h = build_bk(k);
      const Algebra& a = h->algebra();
      std::vector<std::vector<Rational>> zero(k, std::vector<Rational>(k));
      CHECK(bk_r_lambda(k, zero) == bk_r0(k));
      for (int t = 0; t < 3; ++t) {
        auto l = random_lambda(rng, k), m = random_lambda(rng, k);
        TensorElement rl = bk_r_lambda(k, l);
        CHECK(check_rmatrix(*h, rl).verified());
        auto sum = l;
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) sum[i][j] += m[i][j];
        }
        CHECK(bk_r_lambda(k, sum) == tensor_mul(a, tensor_mul(a, rl, bk_r0(k)), bk_r_lambda(k, m)));
        if (k == 1 && t < 2) CHECK(tangent_space(*h, rl).dim() == 1);
      }
    }
  }

  TEST_CASE("a malformed R is rejected with named axioms") {
    HopfPtr h = build_bk(1);
    TensorElement r = bk_r0(1) + TensorElement::basis(4, std::vector<Index>{2, 2});
    RMatrixReport rep = check_rmatrix(*h, r);
    CHECK_FALSE(rep.verified());
    CHECK_FALSE(rep.all().empty());
  }
}

TEST_SUITE("double") {
  TEST_CASE("D(B_1) and D(B_2) are Hopf algebras with algebra embeddings") {
    for (int k = 1; k <= 2; ++k) {
      DoubleAlgebra d = drinfeld_double(build_bk(k));
      CHECK(d.hopf->dim() == d.base_dim() * d.base_dim());
      CHECK(verify_hopf(*d.hopf).empty());
      CHECK(verify_algebra_map(d.dual_embedding()).empty());
      CHECK(verify_hopf_map(*d.base, *d.hopf, d.base_embedding().matrix).empty());
    }
  }

  TEST_CASE("the double of cyclic:3 has dimension 9") {
    DoubleAlgebra d = drinfeld_double(build_cyclic(3));
    CHECK(d.hopf->dim() == 9);
    CHECK(verify_hopf(*d.hopf).empty());
  }

  TEST_CASE("ell maps of R0 are algebra maps D(B_k) → B_k") {
    for (int k = 1; k <= 2; ++k) {
      HopfPtr h = build_bk(k);
      DoubleAlgebra d = drinfeld_double(h);
      VerifiedRMatrix r = require_rmatrix(*h, bk_r0(k));
      CHECK(verify_algebra_map(ell_plus_map(d, r)).empty());
      CHECK(verify_algebra_map(ell_minus_map(d, r)).empty());
    }
  }

  TEST_CASE("coefficient modules") {
    HopfPtr h = build_bk(1);
    DoubleAlgebra d = drinfeld_double(h);
    VerifiedRMatrix r = require_rmatrix(*h, bk_r0(1));
    AlgebraPtr dd = tensor_algebra(d.hopf->algebra(), d.hopf->algebra());
    CoefficientModule w = coeff_tensor_product(d, dd, r);
    CHECK(w.module.dim == 4);
    CHECK(verify_module(w.module).empty());
    CoefficientModule self = coeff_restriction(d, *h, SparseMatrix::identity(4));
    CHECK(self.module.dim == 1);
    HopfPtr b2 = build_bk(2);
    DoubleAlgebra d2 = drinfeld_double(b2);
    CoefficientModule res = coeff_restriction(d2, *h, bk::inclusion(1, 2));
    CHECK(res.module.dim == 2);
    CHECK(verify_module(res.module).empty());
  }

  TEST_CASE("C_plus and C_minus") {
    for (int k = 1; k <= 2; ++k) {
      HopfPtr h = build_bk(k);
      DoubleAlgebra d = drinfeld_double(h);
      for (int sign : {1, -1}) {
        ModuleRep m = build_c_pm(*h, d.hopf->algebra_ptr(), sign);
        CHECK(m.dim == (std::size_t{1} << k));
        CHECK(verify_module(m).empty());
      }
    }
  }

  TEST_CASE("center modules from R0 in all three variants") {
    HopfPtr h = build_bk(1);
    DoubleAlgebra d = drinfeld_double(h);
    VerifiedRMatrix r = require_rmatrix(*h, bk_r0(1));
    ModuleRep reg = regular_module(h->algebra_ptr());
    for (auto v : {CenterVariant::Braiding, CenterVariant::InverseBraiding, CenterVariant::DualBraiding}) {
      ModuleRep m = center_module_from_rmatrix(d, r, reg, v);
      CHECK(verify_module(m).empty());
    }
  }

  TEST_CASE("only the trivial twist is accepted") {
    HopfPtr h = build_bk(1);
    CHECK_NOTHROW(require_trivial_twist(*h, tensor_unit(h->algebra(), 2)));
    CHECK_THROWS_AS(require_trivial_twist(*h, bk_r0(1)), std::invalid_argument);
  }
}
