/// @file test_group.cpp
/// @brief Cayley-table group validation, derived identity/inverse data,
///        element orders, and generated subgroups.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfpi/group.hpp"

using namespace hopfpi;

namespace {

GroupError::Kind error_kind(const std::vector<std::vector<int>>& table) {
  auto res = make_group(table);
  REQUIRE(std::holds_alternative<GroupError>(res));
  return std::get<GroupError>(res).kind;
}

}  // namespace

TEST_CASE("cyclic groups validate and derive id and inverses") {
  for (int n : {1, 2, 3, 4, 6}) {
    auto res = make_group(cyclic_table(n));
    REQUIRE(std::holds_alternative<FiniteGroup>(res));
    const FiniteGroup g = std::get<FiniteGroup>(res);
    CHECK(g.n == n);
    CHECK(g.id == 0);
    for (int a = 0; a < n; ++a) {
      CHECK(g.op(a, g.invof(a)) == g.id);
      CHECK(g.op(g.invof(a), a) == g.id);
    }
  }
}

TEST_CASE("the symmetric group on three letters") {
  const FiniteGroup g = symmetric3();
  CHECK(g.n == 6);
  // non-abelian: some pair fails to commute
  bool noncomm = false;
  for (int a = 0; a < 6 && !noncomm; ++a) {
    for (int b = 0; b < 6; ++b) {
      if (g.op(a, b) != g.op(b, a)) {
        noncomm = true;
        break;
      }
    }
  }
  CHECK(noncomm);
  // element orders are 1, 2, or 3 and both occur
  bool saw2 = false, saw3 = false;
  for (int a = 0; a < 6; ++a) {
    const int d = element_order(g, a);
    CHECK((d == 1 || d == 2 || d == 3));
    saw2 = saw2 || d == 2;
    saw3 = saw3 || d == 3;
  }
  CHECK(saw2);
  CHECK(saw3);
  // conjugation is an inner automorphism: conj(b, a1 a2) = conj(b,a1) conj(b,a2)
  for (int b = 0; b < 6; ++b) {
    for (int a1 = 0; a1 < 6; ++a1) {
      for (int a2 = 0; a2 < 6; ++a2) {
        CHECK(g.conj(b, g.op(a1, a2)) == g.op(g.conj(b, a1), g.conj(b, a2)));
      }
    }
  }
}

TEST_CASE("generated subgroups") {
  const FiniteGroup z6 = cyclic_group(6);
  CHECK(generated_subgroup(z6, 2) == std::set<int>{0, 2, 4});
  CHECK(generated_subgroup(z6, 1).size() == 6);
  CHECK(generated_subgroup(z6, 0) == std::set<int>{0});
  CHECK(element_order(z6, 3) == 2);
}

TEST_CASE("each validation failure is reported with its own kind") {
  CHECK(error_kind({{0, 1}, {1}}) == GroupError::Kind::NotSquare);
  CHECK(error_kind({{0, 1}, {1, 7}}) == GroupError::Kind::OutOfRange);
  // constant table: no identity element
  CHECK(error_kind({{0, 0}, {0, 0}}) == GroupError::Kind::NoIdentity);
  // identity exists but 1 has no inverse: 1*x never hits 0
  CHECK(error_kind({{0, 1, 2}, {1, 1, 1}, {2, 1, 2}}) == GroupError::Kind::NoInverse);
  // the smallest non-associative loop (order 5): identity and two-sided
  // inverses exist, but (1*1)*2 = 2 while 1*(1*2) = 4
  CHECK(error_kind({{0, 1, 2, 3, 4},
                    {1, 0, 3, 4, 2},
                    {2, 4, 0, 1, 3},
                    {3, 2, 4, 0, 1},
                    {4, 3, 1, 2, 0}}) == GroupError::Kind::NotAssociative);
}
