/// @file test_hopf_core.cpp
/// @brief Coalgebra/Hopf axiom verification across the zoo, the op/cop and
///        duality constructions, packing/unpacking along the grading, the
///        support subgroup, and targeted forced failures.

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

TEST_CASE("every zoo instance passes the structural verifiers") {
  for (const auto& name : zoo_names()) {
    CAPTURE(name);
    const Instance inst = load_golden(name);
    const Report rep = verify_instance(inst);
    CHECK(rep.pass());
    CHECK(check_antipode_properties(inst.h).pass());
  }
}

TEST_CASE("support is a subgroup, proper on the degenerate instance") {
  const Instance full = load_golden("trivial_s3");
  Report rep;
  CHECK(support_subgroup(full.h, rep).size() == 6);
  const Instance prop = load_golden("proper_support");
  CHECK(support_subgroup(prop.h, rep) == std::set<int>{0});
  CHECK(rep.pass());
}

TEST_CASE("opposite, coopposite, and op-cop all verify") {
  for (const auto& name : {"sweedler", "c_h4_z2_r0", "kz3_gf3", "trivial_s3"}) {
    CAPTURE(name);
    const HopfPi h = load_golden(name).h;
    CHECK(verify_hopf(opposite(h)).pass());
    CHECK(verify_hopf(coopposite(h)).pass());
    CHECK(verify_hopf(op_cop(h)).pass());
  }
}

TEST_CASE("the opposite reverses products and inverts the antipode") {
  const HopfPi h = sweedler(Q);
  const HopfPi o = opposite(h);
  const Vector g = Vector::basis(Q, 4, 1);
  const Vector x = Vector::basis(Q, 4, 2);
  CHECK(o.mul(0, x, g) == h.mul(0, g, x));
  CHECK(o.S(0) * h.S(0) == LinearMap::identity(Q, 4));
}

TEST_CASE("packing a graded family gives an ordinary Hopf algebra") {
  const HopfPi t2 = load_golden("trivial_z2").h;
  const HopfPi packed = pack_finite(t2);
  REQUIRE(packed.n() == 1);
  REQUIRE(packed.d(0) == 2);
  CHECK(verify_hopf(packed).pass());
  // the packed object is the functions on Z/2: idempotent basis,
  // coproduct summing over factorizations
  CHECK(packed.mul(0, Vector::basis(Q, 2, 0), Vector::basis(Q, 2, 0)) ==
        Vector::basis(Q, 2, 0));
  CHECK(packed.mul(0, Vector::basis(Q, 2, 0), Vector::basis(Q, 2, 1)).is_zero());
  const HopfPi funcs = function_algebra(cyclic_group(2), Q);
  CHECK(packed.m(0) == funcs.m(0));
  CHECK(packed.cp(0, 0) == funcs.cp(0, 0));

  // unpack recovers the graded family
  Report rep;
  auto back = unpack_graded(packed, cyclic_group(2), {{0}, {1}}, rep);
  REQUIRE(std::holds_alternative<HopfPi>(back));
  CHECK(rep.pass());
  const HopfPi& b = std::get<HopfPi>(back);
  CHECK(b.co.dims == t2.co.dims);
  CHECK(b.cp(0, 1) == t2.cp(0, 1));

  // an inconsistent partition is reported as a grading violation
  Report bad;
  auto wrong = unpack_graded(pack_finite(load_golden("proper_support").h), cyclic_group(2),
                             {{}, {0}}, bad);
  CHECK((std::holds_alternative<std::string>(wrong) || !bad.pass()));
}

TEST_CASE("the dual of a group algebra is the function algebra") {
  const FiniteGroup z3 = cyclic_group(3);
  const HopfPi dual = dual_hopf(group_algebra(z3, Q));
  const HopfPi funcs = function_algebra(z3, Q);
  CHECK(verify_hopf(dual).pass());
  CHECK(dual.m(0) == funcs.m(0));
  CHECK(dual.one(0) == funcs.one(0));
  CHECK(dual.cp(0, 0) == funcs.cp(0, 0));
  CHECK(dual.co.counit == funcs.co.counit);
  CHECK(dual.S(0) == funcs.S(0));
}

TEST_CASE("grouplike detection and inversion") {
  const HopfPi h = sweedler(Q);
  GradedVector g{std::vector<Vector>{Vector::basis(Q, 4, 1)}};
  CHECK(is_pi_grouplike(h, g).pass());
  CHECK(grouplike_inverse(h, g) == g);  // g has order two
  GradedVector notg{std::vector<Vector>{Vector::basis(Q, 4, 2)}};
  CHECK_FALSE(is_pi_grouplike(h, notg).pass());
}

TEST_CASE("forced failure: a scaled comultiplication breaks the counit law first") {
  Instance inst = load_golden("sweedler");
  inst.h.co.cp(0, 0) = Scalar::of(2, Q) * inst.h.co.cp(0, 0);
  const Report rep = verify_instance(inst);
  REQUIRE_FALSE(rep.pass());
  CHECK(rep.has_failure_with_prefix("coalg.counit"));
  // nothing upstream of the coalgebra axioms can be blamed
  for (const auto& id : rep.failing_ids()) {
    CHECK((id.rfind("coalg.", 0) == 0 || id.rfind("hopf.", 0) == 0));
  }
}

TEST_CASE("forced failure: a tampered antipode breaks only the antipode law") {
  Instance inst = load_golden("sweedler");
  inst.h.antipode[0].at(3, 2) = Scalar::one(Q);  // S(x) = gx instead of -gx
  const Report rep = verify_instance(inst);
  REQUIRE_FALSE(rep.pass());
  CHECK(rep.failing_ids() == std::vector<std::string>{"hopf.antipode"});
}
