#include <catch2/catch_amalgamated.hpp>

#include "quiverdt/json_io.hpp"
#include "test_helpers.hpp"

using namespace quiverdt;
using namespace quiverdt::testing;

TEST_CASE("parse a loop quiver document") {
  const auto spec = parse_quiver_spec(R"({"vertices":["x"],"arrows":[[2]]})");
  CHECK(spec.quiver.size() == 1);
  CHECK(spec.quiver.arrow_count(0, 0) == 2);
  CHECK(!spec.theta.has_value());
}

TEST_CASE("parse a Kronecker document with stability") {
  const auto spec =
      parse_quiver_spec(R"({"vertices":["1","2"],"arrows":[[0,2],[0,0]],"theta":[1,0]})");
  CHECK(spec.quiver.size() == 2);
  CHECK(spec.quiver.arrow_count(0, 1) == 2);
  REQUIRE(spec.theta.has_value());
  CHECK((*spec.theta)[0] == 1);
  CHECK((*spec.theta)[1] == 0);
}

TEST_CASE("parse rejects malformed documents") {
  CHECK_THROWS_AS(parse_quiver_spec("{"), QuiverInputError);
  CHECK_THROWS_AS(parse_quiver_spec(R"({"vertices":["1"],"arrows":[[1,0]]})"), QuiverInputError);
  CHECK_THROWS_AS(parse_quiver_spec(R"({"vertices":["1"],"arrows":[[-1]]})"), QuiverInputError);
  CHECK_THROWS_AS(parse_quiver_spec(R"({"vertices":["a","a"],"arrows":[[0,0],[0,0]]})"),
                  QuiverInputError);
  CHECK_THROWS_AS(parse_quiver_spec(R"({"vertices":["a"],"arrows":[[0]],"theta":[1,2]})"),
                  QuiverInputError);
  CHECK_THROWS_AS(parse_quiver_spec(R"({"arrows":[[0]]})"), QuiverInputError);
  CHECK_THROWS_AS(parse_quiver_spec(R"({"vertices":["a"],"arrows":[[0.5]]})"), QuiverInputError);
}

TEST_CASE("polynomial JSON round trip") {
  std::mt19937 rng(73);
  for (int i = 0; i < 50; ++i) {
    const VPolynomial p = random_poly(rng);
    CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
  }
}

TEST_CASE("fraction JSON round trip") {
  std::mt19937 rng(79);
  for (int i = 0; i < 50; ++i) {
    const CoeffFraction f = random_fraction(rng);
    CHECK(fraction_from_json(fraction_to_json(f)) == f);
  }
}

TEST_CASE("polynomial JSON layout") {
  const Json j = polynomial_to_json(vpow(5));
  CHECK(j["coeffs"]["5"] == "1");
  CHECK(j["pretty"] == "v^5");
  CHECK(j["latex"] == "v^{5}");
}

TEST_CASE("huge coefficients survive the decimal-string encoding") {
  const BigInt huge = BigInt("123456789012345678901234567890123456789");
  const VPolynomial p = VPolynomial::monomial(huge, -7);
  CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
}

TEST_CASE("pretty and latex renderings") {
  CHECK(to_pretty(vpow(1) + vpow(-1)) == "v + v^-1");
  CHECK(to_latex(vpow(1) + vpow(-1)) == "v + v^{-1}");
  CHECK(to_pretty(VPolynomial()) == "0");
  CHECK(to_pretty(vpow(2).scaled(BigInt(3)) - VPolynomial(BigInt(4))) == "3*v^2 - 4");
  CHECK(to_pretty(frac(lpow(1), {1})) == "v^2 / ((L - 1))");
  CHECK(to_latex(frac(lpow(1), {1})) == "\\frac{v^{2}}{(L - 1)}");
  CHECK(to_pretty(frac(vpow(1) + vpow(-1), {1, 1, 2})) ==
        "(v + v^-1) / ((L - 1)^2*(L^2 - 1))");
}

TEST_CASE("result documents carry the declared fields") {
  const Json doc = make_result_document(true, "dt", Json::object(), {"note"});
  CHECK(doc["ok"] == true);
  CHECK(doc["command"] == "dt");
  CHECK(doc["warnings"].size() == 1);
}
