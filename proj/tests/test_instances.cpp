/// @file test_instances.cpp
/// @brief Instance-builder contracts: validation of constant-family actions,
///        field restrictions, the degenerate-support example, and agreement
///        between the programmatic zoo and the golden files.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfpi/instances.hpp"
#include "hopfpi/pipeline.hpp"
#include "test_util.hpp"

using namespace hopfpi;
using namespace hopfpi_test;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("builders reproduce the golden files exactly") {
  // The golden files were emitted from these builders; parse them back and
  // compare the underlying data so the files cannot drift from the code.
  const HopfPi sw = sweedler(Q);
  const Instance golden = load_golden("sweedler");
  CHECK(golden.h.m(0) == sw.m(0));
  CHECK(golden.h.cp(0, 0) == sw.cp(0, 0));
  CHECK(golden.h.S(0) == sw.S(0));
  CHECK(golden.h.co.counit == sw.co.counit);

  const Instance triv = trivial_instance(symmetric3(), Q);
  const Instance gt = load_golden("trivial_s3");
  CHECK(gt.h.co.dims == triv.h.co.dims);
  CHECK(gt.h.group().mul == triv.h.group().mul);
}

TEST_CASE("characteristic two is rejected where division by two occurs") {
  CHECK_THROWS_AS((void)sweedler(Field::gf(2)), std::domain_error);
  CHECK_THROWS_AS((void)sweedler_R(Scalar::one(Field::gf(2))), std::domain_error);
  CHECK_NOTHROW((void)sweedler(Field::gf(5)));
}

TEST_CASE("the four-dimensional fixture works over odd prime fields too") {
  const HopfPi h = sweedler(Field::gf(5));
  CHECK(verify_hopf(h).pass());
}

TEST_CASE("constant families validate their actions") {
  const FiniteGroup z2 = cyclic_group(2);
  const FiniteGroup z3 = cyclic_group(3);
  const HopfPi base = group_algebra(z3, Q);

  // the inversion action is accepted
  CHECK_NOTHROW((void)constant_family("ok", base, z2,
                                      {LinearMap::identity(Q, 3),
                                       inversion_automorphism(z3, Q)}));
  // a non-multiplicative map is rejected
  LinearMap bad = LinearMap::identity(Q, 3);
  bad.at(0, 1) = Scalar::one(Q);
  CHECK_THROWS_AS((void)constant_family("bad", base, z2, {LinearMap::identity(Q, 3), bad}),
                  std::domain_error);
  // an involution requirement: assigning inversion to the identity element
  // breaks the homomorphism property
  CHECK_THROWS_AS((void)constant_family("bad", base, z2,
                                        {inversion_automorphism(z3, Q),
                                         LinearMap::identity(Q, 3)}),
                  std::domain_error);
  // a singular matrix is rejected as non-bijective
  CHECK_THROWS_AS((void)constant_family("bad", base, z2,
                                        {LinearMap::identity(Q, 3), LinearMap::zero(Q, 3, 3)}),
                  std::domain_error);
  // a base with nontrivial grading is rejected
  CHECK_THROWS_AS((void)constant_family("bad", trivial_instance(z2, Q).h, z2),
                  std::domain_error);
}

TEST_CASE("group and function algebras are dual semisimple fixtures") {
  const FiniteGroup s3 = symmetric3();
  const HopfPi kg = group_algebra(s3, Q);
  const HopfPi fg = function_algebra(s3, Q);
  CHECK(verify_hopf(kg).pass());
  CHECK(verify_hopf(fg).pass());
  const HopfPi dual = dual_hopf(kg);
  CHECK(dual.m(0) == fg.m(0));
  CHECK(dual.cp(0, 0) == fg.cp(0, 0));
}

TEST_CASE("the degenerate-support instance has proper support and still verifies") {
  const Instance inst = proper_support_instance(Q);
  CHECK(verify_instance(inst).pass());
  Report rep;
  CHECK(support_subgroup(inst.h, rep) == std::set<int>{0});
  CHECK(rep.pass());
}

TEST_CASE("constant element and R-matrix placement reject ragged dimensions") {
  const Instance ps = proper_support_instance(Q);
  Vector v(Q, 1);
  v[0] = Scalar::one(Q);
  CHECK_THROWS_AS((void)constant_element(ps.h, v), std::domain_error);
  CHECK_THROWS_AS((void)constant_rmatrix(ps.h, tensor(v, v)), std::domain_error);
}
