#include <doctest.h>

#include "hopfdy/catalog.hpp"
#include "hopfdy/io.hpp"
#include "hopfdy/rmatrix.hpp"
#include "test_util.hpp"

using namespace hopfdy;

namespace {

bool same_hopf(const HopfAlgebra& a, const HopfAlgebra& b) {
  if (a.dim() != b.dim() || !same_algebra(a.algebra(), b.algebra())) return false;
  if (!(a.counit() == b.counit()) || !(a.antipode() == b.antipode())) return false;
  for (Index i = 0; i < a.dim(); ++i) {
    if (!(a.coproduct(i) == b.coproduct(i))) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("property: Hopf files round-trip exactly") {
    std::vector<HopfPtr> hs{build_cyclic(3), build_bk(1), build_bk(2)};
    hs.push_back(std::make_shared<const HopfAlgebra>(dual_hopf(*build_bk(2), true)));
    for (const auto& h : hs) {
      Json j = hopf_to_json(*h);
      HopfPtr back = hopf_from_json(Json::parse(j.dump()));
      CHECK(same_hopf(*h, *back));
      CHECK(hopf_to_json(*back) == j);
      CHECK(digest(hopf_to_json(*back)) == digest(j));
    }
  }

  TEST_CASE("property: tensors, vectors and matrices round-trip") {
    std::mt19937 rng(31);
    for (int t = 0; t < 10; ++t) {
      TensorElement u = test::random_tensor(rng, 4, 2, 6);
      CHECK(tensor_from_json(Json::parse(to_json(u).dump()), 4, 2) == u);
      SparseVector v = test::random_vector(rng, 7, 0.5);
      CHECK(vector_from_json(to_json(v), 7) == v);
      SparseMatrix m = test::random_matrix(rng, 5, 3, 0.5, false);
      CHECK(matrix_from_json(to_json(m), 5, 3) == m);
    }
    CHECK(tensor_from_json(to_json(bk_r0(2)), 8, 2) == bk_r0(2));
  }

  TEST_CASE("rationals serialize canonically") {
    CHECK(to_json(Rational(3)) == Json("3"));
    CHECK(to_json(Rational(-2, 4)) == Json("-1/2"));
    CHECK(rational_from_json(Json("6/4")) == Rational(3, 2));
    CHECK(rational_from_json(Json(5)) == Rational(5));
  }

  TEST_CASE("malformed input raises ParseError") {
    Json j = hopf_to_json(*build_bk(1));
    Json bad = j;
    bad["dim"] = 0;
    CHECK_THROWS_AS(hopf_from_json(bad), ParseError);
    bad = j;
    bad["mult"].push_back(Json::array({9, 0, 0, "1"}));
    CHECK_THROWS_AS(hopf_from_json(bad), ParseError);
    bad = j;
    bad.erase("counit");
    CHECK_THROWS_AS(hopf_from_json(bad), ParseError);
    CHECK_THROWS_AS(tensor_from_json(Json::parse(R"([[[0], "1"]])"), 4, 2), ParseError);
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), ParseError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ParseError);
  }

  TEST_CASE("lambda accepts a bare matrix or an object") {
    auto a = lambda_from_json(Json::parse(R"([["1", "1/2"], ["0", "-3"]])"), 2);
    auto b = lambda_from_json(Json::parse(R"({"lambda": [["1", "1/2"], ["0", "-3"]]})"), 2);
    CHECK(a == b);
    CHECK(a[0][1] == Rational(1, 2));
    CHECK_THROWS_AS(lambda_from_json(Json::parse(R"([["1"]])"), 2), ParseError);
  }

  TEST_CASE("digests are deterministic and sensitive") {
    Json a = hopf_to_json(*build_bk(1));
    CHECK(digest(a) == digest(hopf_to_json(*build_bk(1))));
    CHECK(digest(a).size() == 16);
    CHECK(digest(a) != digest(hopf_to_json(*build_cyclic(4))));
    CHECK(digest_text("") == "cbf29ce484222325");
  }
}
