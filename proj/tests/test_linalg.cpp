/// @file test_linalg.cpp
/// @brief Exact scalar and dense linear-algebra tests: field arithmetic,
///        the tensor flattening convention, rank/nullspace/solve/inverse,
///        structure-constant products, and zero-dimensional edge cases.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfpi/linalg.hpp"

using namespace hopfpi;

namespace {

const Field Q = Field::rationals();

LinearMap from_rows(Field f, int rows, int cols, std::vector<long long> vals) {
  LinearMap m(f, rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      m.at(r, c) = Scalar::of(vals[static_cast<std::size_t>(r) * cols + c], f);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("rational scalars are exact and normalized") {
  const Scalar a = Scalar::frac(1, 3, Q);
  const Scalar b = Scalar::frac(1, 6, Q);
  CHECK((a + b) == Scalar::frac(1, 2, Q));
  CHECK((a - a).is_zero());
  CHECK((a * Scalar::of(3, Q)).is_one());
  CHECK((a / b) == Scalar::of(2, Q));
  CHECK(a.inverse() == Scalar::of(3, Q));
  CHECK((-a + a).is_zero());
  CHECK(Scalar::frac(2, 4, Q).str() == "1/2");
  CHECK(Scalar::of(-7, Q).str() == "-7");
}

TEST_CASE("prime field scalars reduce and invert") {
  const Field f5 = Field::gf(5);
  CHECK(Scalar::of(7, f5) == Scalar::of(2, f5));
  CHECK(Scalar::frac(1, 2, f5) == Scalar::of(3, f5));  // 2 * 3 = 6 = 1 mod 5
  CHECK(Scalar::of(4, f5).inverse() == Scalar::of(4, f5));
  CHECK((Scalar::of(3, f5) + Scalar::of(3, f5)) == Scalar::of(1, f5));
  CHECK_THROWS_AS((void)Field::gf(6), std::domain_error);
}

TEST_CASE("scalar parse accepts canonical forms and rejects garbage") {
  CHECK(Scalar::parse("-3/4", Q) == Scalar::frac(-3, 4, Q));
  CHECK(Scalar::parse("12", Q) == Scalar::of(12, Q));
  CHECK_FALSE(Scalar::parse("1/0", Q).has_value());
  CHECK_FALSE(Scalar::parse("a", Q).has_value());
  CHECK_FALSE(Scalar::parse("", Q).has_value());
  CHECK_FALSE(Scalar::parse("1.5", Q).has_value());
  // round trip through str
  const Scalar s = Scalar::frac(-22, 7, Q);
  CHECK(Scalar::parse(s.str(), Q) == s);
}

TEST_CASE("tensor flattening is left-major and flip transposes it") {
  Vector a(Q, 2);
  a[0] = Scalar::of(1, Q);
  a[1] = Scalar::of(2, Q);
  Vector b(Q, 3);
  b[0] = Scalar::of(5, Q);
  b[2] = Scalar::of(7, Q);
  const Vector t = tensor(a, b);
  REQUIRE(t.dim() == 6);
  CHECK(t[0 * 3 + 0] == Scalar::of(5, Q));
  CHECK(t[0 * 3 + 2] == Scalar::of(7, Q));
  CHECK(t[1 * 3 + 0] == Scalar::of(10, Q));
  CHECK(t[1 * 3 + 2] == Scalar::of(14, Q));
  CHECK(t[0 * 3 + 1].is_zero());

  const Vector swapped = apply(flip(Q, 2, 3), t);
  CHECK(swapped == tensor(b, a));
  // flip is an involution up to the shape swap
  CHECK(flip(Q, 3, 2) * flip(Q, 2, 3) == LinearMap::identity(Q, 6));
}

TEST_CASE("kron matches the flattening convention") {
  const LinearMap a = from_rows(Q, 2, 2, {1, 2, 3, 4});
  const LinearMap b = from_rows(Q, 2, 2, {0, 1, 1, 0});
  Vector x(Q, 2), y(Q, 2);
  x[0] = Scalar::of(2, Q);
  x[1] = Scalar::of(-1, Q);
  y[0] = Scalar::of(1, Q);
  y[1] = Scalar::of(3, Q);
  CHECK(apply(kron(a, b), tensor(x, y)) == tensor(apply(a, x), apply(b, y)));
  // mixed-shape kron keeps shapes consistent
  const LinearMap c = from_rows(Q, 1, 3, {1, 0, 2});
  CHECK(kron(a, c).rows == 2);
  CHECK(kron(a, c).cols == 6);
}

TEST_CASE("rank, nullspace, solve, inverse agree on a singular system") {
  // rows: (1,2,3), (2,4,6), (1,0,1) -- rank 2
  const LinearMap m = from_rows(Q, 3, 3, {1, 2, 3, 2, 4, 6, 1, 0, 1});
  CHECK(rank(m) == 2);
  const auto ker = nullspace(m);
  REQUIRE(ker.size() == 1);
  CHECK(apply(m, ker[0]).is_zero());
  // first nonzero coordinate of the canonical kernel basis is 1
  int i0 = 0;
  while (ker[0][i0].is_zero()) ++i0;
  CHECK(ker[0][i0].is_one());
  CHECK_FALSE(inverse(m).has_value());

  Vector b(Q, 3);
  b[0] = Scalar::of(6, Q);
  b[1] = Scalar::of(12, Q);
  b[2] = Scalar::of(2, Q);
  const auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK(apply(m, *x) == b);
  // inconsistent right-hand side
  b[1] = Scalar::of(11, Q);
  CHECK_FALSE(solve(m, b).has_value());
}

TEST_CASE("inverse round-trips on an invertible rational matrix") {
  const LinearMap m = from_rows(Q, 3, 3, {2, 1, 0, 1, 1, 1, 0, 3, 1});
  const auto mi = inverse(m);
  REQUIRE(mi.has_value());
  CHECK(*mi * m == LinearMap::identity(Q, 3));
  CHECK(m * *mi == LinearMap::identity(Q, 3));
  CHECK(matrix_power(m, 0) == LinearMap::identity(Q, 3));
  CHECK(matrix_power(m, 3) == m * m * m);
}

TEST_CASE("linear algebra over GF(3)") {
  const Field f3 = Field::gf(3);
  const LinearMap m = from_rows(f3, 2, 2, {1, 2, 2, 1});
  // det = 1 - 4 = -3 = 0 mod 3
  CHECK(rank(m) == 1);
  REQUIRE(nullspace(m).size() == 1);
  const LinearMap u = from_rows(f3, 2, 2, {1, 1, 0, 1});
  REQUIRE(inverse(u).has_value());
  CHECK(*inverse(u) * u == LinearMap::identity(f3, 2));
}

TEST_CASE("zero-dimensional maps compose and solve") {
  const LinearMap a(Q, 0, 3);
  const LinearMap b(Q, 3, 0);
  CHECK((a * b).rows == 0);
  CHECK((a * b).cols == 0);
  CHECK((b * a).rows == 3);
  CHECK(rank(a) == 0);
  CHECK(nullspace(b).empty());          // k^0 has no kernel directions
  CHECK(nullspace(a).size() == 3);      // everything maps to zero
  const Vector empty(Q, 0);
  CHECK(apply(a, Vector(Q, 3)) == empty);
  CHECK(solve(b, Vector(Q, 3)).has_value());
  CHECK(LinearMap::identity(Q, 0) == LinearMap::zero(Q, 0, 0));
}

TEST_CASE("vstack stacks row blocks") {
  const LinearMap a = from_rows(Q, 1, 2, {1, 2});
  const LinearMap b = from_rows(Q, 2, 2, {3, 4, 5, 6});
  const LinearMap s = vstack(a, b);
  REQUIRE(s.rows == 3);
  CHECK(s.at(0, 1) == Scalar::of(2, Q));
  CHECK(s.at(2, 0) == Scalar::of(5, Q));
}

TEST_CASE("bilinear structure constants multiply as written") {
  // complex numbers as a 2-dimensional algebra: e0 = 1, e1 = i
  Bilinear m(Q, 2, 2, 2);
  m.at(0, 0, 0) = Scalar::one(Q);
  m.at(1, 0, 1) = Scalar::one(Q);
  m.at(1, 1, 0) = Scalar::one(Q);
  m.at(0, 1, 1) = -Scalar::one(Q);
  Vector i = Vector::basis(Q, 2, 1);
  CHECK(bilinear_apply(m, i, i) == (-Scalar::one(Q)) * Vector::basis(Q, 2, 0));
  // as_map agrees with apply on the flattened square
  CHECK(apply(bilinear_as_map(m), tensor(i, i)) == bilinear_apply(m, i, i));
  // structure multiplications
  CHECK(apply(structure_left_mul(m, i), i) == bilinear_apply(m, i, i));
  CHECK(apply(structure_right_mul(m, i), i) == bilinear_apply(m, i, i));
  // opposite algebra swaps arguments
  Vector x(Q, 2), y(Q, 2);
  x[0] = Scalar::of(1, Q);
  x[1] = Scalar::of(2, Q);
  y[0] = Scalar::of(-1, Q);
  y[1] = Scalar::of(5, Q);
  CHECK(bilinear_apply(bilinear_opposite(m), x, y) == bilinear_apply(m, y, x));

  // algebra inverse of 3 + 4i is (3 - 4i)/25
  Vector unit = Vector::basis(Q, 2, 0);
  Vector z(Q, 2);
  z[0] = Scalar::of(3, Q);
  z[1] = Scalar::of(4, Q);
  const auto zi = algebra_inverse(m, unit, z);
  REQUIRE(zi.has_value());
  CHECK((*zi)[0] == Scalar::frac(3, 25, Q));
  CHECK((*zi)[1] == Scalar::frac(-4, 25, Q));
  CHECK_FALSE(algebra_inverse(m, unit, Vector(Q, 2)).has_value());
}

TEST_CASE("bilinear_tensor is the componentwise product algebra") {
  // k[t]/(t^2) tensored with itself: (t (x) 1)(t (x) 1) = 0, (t (x) 1)(1 (x) t) = t (x) t
  Bilinear m(Q, 2, 2, 2);
  m.at(0, 0, 0) = Scalar::one(Q);
  m.at(1, 0, 1) = Scalar::one(Q);
  m.at(1, 1, 0) = Scalar::one(Q);
  const Bilinear mm = bilinear_tensor(m, m);
  const Vector t1 = tensor(Vector::basis(Q, 2, 1), Vector::basis(Q, 2, 0));
  const Vector one_t = tensor(Vector::basis(Q, 2, 0), Vector::basis(Q, 2, 1));
  CHECK(bilinear_apply(mm, t1, t1).is_zero());
  CHECK(bilinear_apply(mm, t1, one_t) ==
        tensor(Vector::basis(Q, 2, 1), Vector::basis(Q, 2, 1)));
}

TEST_CASE("mixed-field operations throw") {
  const Scalar a = Scalar::one(Q);
  const Scalar b = Scalar::one(Field::gf(5));
  CHECK_THROWS_AS((void)(a + b), std::logic_error);
}
