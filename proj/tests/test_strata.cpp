#include <catch2/catch_amalgamated.hpp>

#include "quiverdt/strata.hpp"
#include "test_helpers.hpp"

using namespace quiverdt;
using namespace quiverdt::testing;

namespace {

DecompositionType type_of(std::vector<std::pair<DimVector, long long>> parts) {
  return DecompositionType{std::move(parts)};
}

}  // namespace

TEST_CASE("decomposition types of the 2-loop quiver at d=2") {
  const auto types = enumerate_types(loop_quiver(2), Stability({0}), dims({2}));
  REQUIRE(types.size() == 3);
  // sorted canonically: ((1),1)+((1),1), ((1),2), ((2),1)
  CHECK(types[0] == type_of({{dims({1}), 1}, {dims({1}), 1}}));
  CHECK(types[1] == type_of({{dims({1}), 2}}));
  CHECK(types[2] == type_of({{dims({2}), 1}}));
}

TEST_CASE("decomposition types of the Kronecker quiver at (1,1)") {
  const auto types = enumerate_types(kronecker(2), Stability({1, 0}), dims({1, 1}));
  REQUIRE(types.size() == 1);
  CHECK(types[0] == type_of({{dims({1, 1}), 1}}));
  CHECK_THROWS_AS(enumerate_types(kronecker(2), Stability({1, 0}), dims({0, 0})), ZeroDimension);
}

TEST_CASE("the dense type is always present when (d,d) <= 1") {
  const auto types = enumerate_types(loop_quiver(3), Stability({0}), dims({3}));
  bool found = false;
  for (const auto& t : types) found = found || t == type_of({{dims({3}), 1}});
  CHECK(found);
}

TEST_CASE("stratum codimension") {
  const Quiver two = loop_quiver(2);
  CHECK(codim_stratum(two, type_of({{dims({2}), 1}})) == 0);
  CHECK(codim_stratum(two, type_of({{dims({1}), 1}, {dims({1}), 1}})) == 1);
  CHECK(codim_stratum(two, type_of({{dims({1}), 2}})) == 3);
}

TEST_CASE("codimension of the dense type vanishes") {
  for (long long m = 2; m <= 3; ++m)
    for (long long d = 1; d <= 4; ++d)
      CHECK(codim_stratum(loop_quiver(m), type_of({{dims({d}), 1}})) == 0);
}

TEST_CASE("nullcone bound") {
  CHECK(nullcone_bound(loop_quiver(2), dims({2})) == Rational(-1));
  CHECK(nullcone_bound(loop_quiver(1), dims({3})) == Rational(-3));
  CHECK(nullcone_bound(Quiver({"a", "b"}, {{0, 2}, {2, 0}}), dims({0, 0})) == Rational(0));
  CHECK_THROWS_AS(nullcone_bound(kronecker(2), dims({1, 1})), NotSymmetric);
}

TEST_CASE("virtual smallness for the 2-loop quiver at d=2") {
  const auto report =
      verify_virtual_smallness(loop_quiver(2), Stability({0}), dims({2}), dims({2}));
  REQUIRE(report.rows.size() == 3);
  CHECK(report.all_pass);
  CHECK(report.equality_only_at_dense);
  for (const auto& row : report.rows) {
    const bool dense = row.xi == DecompositionType{{{dims({2}), 1}}};
    CHECK(row.equality == dense);
  }
}

TEST_CASE("virtual smallness with a single type is the equality case") {
  const auto report =
      verify_virtual_smallness(kronecker(2), Stability({1, 0}), dims({1, 1}), dims({2, 2}));
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows.front().equality);
  CHECK(report.all_pass);
  CHECK(report.equality_only_at_dense);
}

TEST_CASE("virtual smallness across loop quivers") {
  for (long long m = 2; m <= 3; ++m) {
    for (long long d = 1; d <= 3; ++d) {
      const auto report =
          verify_virtual_smallness(loop_quiver(m), Stability({0}), dims({d}), dims({2}));
      CHECK(report.all_pass);
      CHECK(report.equality_only_at_dense);
      long long equalities = 0;
      for (const auto& row : report.rows) equalities += row.equality ? 1 : 0;
      CHECK(equalities == 1);
    }
  }
}

TEST_CASE("virtual smallness rejects zero framing") {
  CHECK_THROWS_AS(
      verify_virtual_smallness(loop_quiver(2), Stability({0}), dims({2}), dims({0})),
      std::invalid_argument);
}
