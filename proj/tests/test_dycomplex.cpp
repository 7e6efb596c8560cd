#include <doctest.h>

#include "hopfdy/catalog.hpp"
#include "hopfdy/errors.hpp"
#include "hopfdy/dycomplex.hpp"
#include "hopfdy/exactlin.hpp"
#include "test_util.hpp"

using namespace hopfdy;

namespace {

std::vector<DYComplex> b1_complexes() {
  HopfPtr h = build_bk(1);
  std::vector<DYComplex> out;
  out.push_back(DYComplex::identity(h));
  out.push_back(DYComplex::tensor_with_r(h, bk_r0(1)));
  out.push_back(DYComplex::restriction(h, build_cyclic(1),
                                       SparseMatrix::from_triplets(4, 1, {{0, 0, 1}})));
  return out;
}

// Random element of C^n as a combination of basis cochains.
TensorElement random_cochain(const DYComplex& c, std::size_t n, std::mt19937& rng) {
  const auto& basis = c.cochain_basis(n);
  TensorElement u = basis.front().scaled(0);
  for (const auto& b : basis) u += b.scaled(test::random_rational(rng));
  return u;
}

bool in_span(const std::vector<TensorElement>& span, const TensorElement& u) {
  std::vector<TensorElement> all = span;
  all.push_back(u);
  auto [vecs, width] = compress(all);
  std::vector<SparseVector> base(vecs.begin(), vecs.end() - 1);
  return rank_of_vectors(base, width) == rank_of_vectors(vecs, width);
}

}  // namespace

TEST_SUITE("dycomplex") {
  TEST_CASE("property: δδ = 0 for every complex kind on B_1") {
    std::mt19937 rng(5);
    for (const auto& c : b1_complexes()) {
      for (std::size_t n = 0; n <= 2; ++n) {
        for (int t = 0; t < 3; ++t) {
          TensorElement u = random_cochain(c, n, rng);
          CHECK(c.differential(n + 1, c.differential(n, u)).is_zero());
        }
      }
      CHECK((c.differential_matrix(2) * c.differential_matrix(1)).is_zero());
    }
  }

  TEST_CASE("property: cofaces land in the next cochain space") {
    std::mt19937 rng(6);
    for (const auto& c : b1_complexes()) {
      for (std::size_t n = 1; n <= 2; ++n) {
        TensorElement u = random_cochain(c, n, rng);
        for (std::size_t i = 0; i <= n + 1; ++i) CHECK(c.is_cochain(n + 1, c.coface(n, i, u)));
      }
    }
  }

  TEST_CASE("property: cosimplicial identities") {
    std::mt19937 rng(8);
    for (const auto& c : b1_complexes()) {
      for (std::size_t n = 1; n <= 2; ++n) {
        TensorElement u = random_cochain(c, n, rng);
        // ∂_j ∂_i = ∂_i ∂_{j-1} for i < j
        for (std::size_t j = 1; j <= n + 2; ++j) {
          for (std::size_t i = 0; i < j; ++i) {
            CHECK(c.coface(n + 1, j, c.coface(n, i, u)) == c.coface(n + 1, i, c.coface(n, j - 1, u)));
          }
        }
        // s_j ∂_i on C^n, with s_j : C^{n+1} → C^n
        for (std::size_t j = 0; j <= n; ++j) {
          for (std::size_t i = 0; i <= n + 1; ++i) {
            TensorElement lhs = c.codegeneracy(n + 1, j, c.coface(n, i, u));
            if (i == j || i == j + 1) {
              CHECK(lhs == u);
            } else if (i < j) {
              CHECK(lhs == c.coface(n - 1, i, c.codegeneracy(n, j - 1, u)));
            } else {
              CHECK(lhs == c.coface(n - 1, i - 1, c.codegeneracy(n, j, u)));
            }
          }
        }
      }
    }
  }

  TEST_CASE("property: normalization is idempotent and commutes with δ") {
    std::mt19937 rng(9);
    for (const auto& c : b1_complexes()) {
      for (std::size_t n = 1; n <= 3; ++n) {
        TensorElement u = random_cochain(c, n, rng);
        TensorElement nu = c.normalize(n, u);
        CHECK(c.is_cochain(n, nu));
        CHECK(c.normalize(n, nu) == nu);
      }
      TensorElement u = random_cochain(c, 2, rng);
      CHECK(c.normalize(3, c.differential(2, u)) == c.differential(2, c.normalize(2, u)));
    }
  }

  TEST_CASE("property: a normalized cocycle is cohomologous to the original") {
    for (const auto& c : b1_complexes()) {
      std::vector<TensorElement> coboundaries;
      for (const auto& b : c.cochain_basis(1)) coboundaries.push_back(c.differential(1, b));
      for (const auto& z : c.cocycle_basis(2)) {
        TensorElement nz = c.normalize(2, z);
        CHECK(c.differential(2, nz).is_zero());
        TensorElement diff = nz - z;
        if (!diff.is_zero()) CHECK(in_span(coboundaries, diff));
      }
    }
  }

  TEST_CASE("cohomology of B_1 in low degrees") {
    auto cs = b1_complexes();
    CHECK(cs[0].cohomology_dim(0) == 1);
    CHECK(cs[0].cohomology_dim(1) == 0);
    CHECK(cs[0].cohomology_dim(2) == 1);
    CHECK(cs[0].cohomology_dim(3) == 0);
    CohomologyInfo t2 = cs[1].cohomology(2);
    CHECK(t2.dim == 3);
    CHECK(t2.cochain_dim == 68);
    CHECK(t2.modular_agree);
    CHECK(cs[1].cohomology_dim(3) == 0);
    CHECK(cs[2].cohomology_dim(0) == 1);
  }

  TEST_CASE("identity complex of B_2 has H^2 = 3") {
    CHECK(DYComplex::identity(build_bk(2)).cohomology_dim(2) == 3);
  }

  TEST_CASE("restriction along B_1 ⊂ B_2") {
    DYComplex c = DYComplex::restriction(build_bk(2), build_bk(1), bk::inclusion(1, 2));
    CHECK(c.cohomology_dim(1) == 0);
    CHECK(c.cohomology_dim(2) == 3);
  }

  TEST_CASE("tangent vectors give cocycles that decompose back") {
    HopfPtr h = build_bk(1);
    DYComplex c = DYComplex::tensor_with_r(h, bk_r0(1));
    for (const auto& t : tangent_space(*h, bk_r0(1)).vectors) {
      TensorElement u = cocycle_from_tangent(c, t);
      CHECK(c.is_cochain(2, u));
      CHECK(c.differential(2, u).is_zero());
      H2Decomposition d = decompose_h2_tensor(c, u);
      CHECK(d.t == t);
    }
    CHECK_THROWS_AS(cocycle_from_tangent(c, tensor_unit(h->algebra(), 2)), std::invalid_argument);
  }

  TEST_CASE("invalid inputs are rejected") {
    HopfPtr h = build_bk(1);
    CHECK_THROWS_AS(DYComplex::tensor_with_r(h, trivial_r(*h)), InvalidRMatrix);
    CHECK_THROWS_AS(DYComplex::restriction(
                        build_bk(2), h, SparseMatrix::from_triplets(8, 4, {{0, 0, 1}, {0, 1, 1}, {2, 2, 1}, {3, 3, 1}})),
                    InvalidStructure);
    CHECK_THROWS_AS(DYComplex::identity(build_bk(3)).cochain_basis(6), UnsupportedDegree);
  }
}
