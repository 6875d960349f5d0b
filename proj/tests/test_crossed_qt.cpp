/// @file test_crossed_qt.cpp
/// @brief Crossings, the rescaling character, R-matrix axioms and derived
///        identities, Drinfeld elements against the oracle, twists and the
///        grouplike G, the g-from-R identity, mirror/coopposite structures,
///        and forced failures for the decorated layers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfpi/instances.hpp"
#include "hopfpi/integrals.hpp"
#include "hopfpi/pipeline.hpp"
#include "test_util.hpp"

using namespace hopfpi;
using namespace hopfpi_test;

namespace {
const Field Q = Field::rationals();

std::vector<std::string> decorated() {
  return {"trivial_z1", "trivial_z2", "trivial_s3", "c_h4_z2_r0", "c_h4_z2_r1",
          "c_kz3_z2_trivial"};
}
}  // namespace

TEST_CASE("crossings verify, including the nontrivial inversion action") {
  for (const auto& name : zoo_names()) {
    const Instance inst = load_golden(name);
    if (!inst.crossing) continue;
    CAPTURE(name);
    CHECK(verify_crossing(inst.h, *inst.crossing).pass());
  }
  // the inversion crossing genuinely acts
  const Instance invc = load_golden("c_kz3_z2_inversion");
  REQUIRE(invc.crossing.has_value());
  CHECK_FALSE(invc.crossing->phi(1, 0) == LinearMap::identity(Q, 3));
}

TEST_CASE("the rescaling character is trivial on the zoo and respects integrals") {
  for (const auto& name : zoo_names()) {
    const Instance inst = load_golden(name);
    if (!inst.crossing) continue;
    CAPTURE(name);
    const PhiHat ph = phi_hat(inst.h, *inst.crossing);
    CHECK(ph.rep.pass());
    for (const Scalar& v : ph.value) {
      CHECK(v.is_one());
    }
    CHECK(check_marre(inst.h, *inst.crossing).pass());
  }
}

TEST_CASE("R-matrix axioms and derived identities hold on the decorated zoo") {
  for (const auto& name : decorated()) {
    CAPTURE(name);
    const Instance inst = load_golden(name);
    REQUIRE(inst.crossing.has_value());
    REQUIRE(inst.rmatrix.has_value());
    CHECK(verify_R(inst.h, *inst.crossing, *inst.rmatrix).pass());
    CHECK(check_B1(inst.h, *inst.crossing, *inst.rmatrix).pass());
    CHECK(check_B2(inst.h, *inst.crossing, *inst.rmatrix).pass());
  }
}

TEST_CASE("the Drinfeld element matches the oracle and its two inverse forms agree") {
  const auto oracle = oracle_constants().at("sweedler");
  for (int t : {0, 1}) {
    CAPTURE(t);
    const Instance inst = load_golden("c_h4_z2_r" + std::to_string(t));
    const Drinfeld du = drinfeld_u(inst.h, *inst.crossing, *inst.rmatrix);
    CHECK(du.rep.pass());
    const Vector u_expect = oracle_vector(oracle.at("drinfeld_u").at(std::to_string(t)), Q);
    const Vector ui_expect =
        oracle_vector(oracle.at("drinfeld_u_inverse").at(std::to_string(t)), Q);
    for (int a = 0; a < inst.h.n(); ++a) {
      CHECK(du.u[a] == u_expect);
      CHECK(du.u_inv[a] == ui_expect);
    }
  }
}

TEST_CASE("g = phihat^{-1} ell h on every decorated instance") {
  for (const auto& name : decorated()) {
    CAPTURE(name);
    const Instance inst = load_golden(name);
    CHECK(ell_element(inst.h, *inst.crossing, *inst.rmatrix).rep.pass());
    CHECK(g_from_R(inst.h, *inst.crossing, *inst.rmatrix, inst.twist).pass());
  }
  // undecorated variant: the identity still holds without a twist
  Instance nt = load_golden("c_h4_z2_r0");
  CHECK(g_from_R(nt.h, *nt.crossing, *nt.rmatrix, std::nullopt).pass());
}

TEST_CASE("twists verify and the grouplike G carries its fact suite") {
  for (const auto& name : decorated()) {
    CAPTURE(name);
    const Instance inst = load_golden(name);
    REQUIRE(inst.twist.has_value());
    CHECK(verify_twist(inst.h, *inst.crossing, *inst.rmatrix, *inst.twist).pass());
    const GElement ge = G_element(inst.h, *inst.crossing, *inst.rmatrix, *inst.twist);
    CHECK(ge.rep.pass());
    CHECK(is_pi_grouplike(inst.h, ge.g).pass());
  }
  // on the four-dimensional family, G = theta u = u = the grouplike basis vector
  const Instance r1 = load_golden("c_h4_z2_r1");
  const GElement ge = G_element(r1.h, *r1.crossing, *r1.rmatrix, *r1.twist);
  CHECK(ge.g[0] == Vector::basis(Q, 4, 1));
}

TEST_CASE("mirror and coopposite structures are internally consistent") {
  for (const auto& name : decorated()) {
    CAPTURE(name);
    const Instance inst = load_golden(name);
    const DerivedInstance mir = mirror(inst);
    CHECK(mir.rep.pass());
    CHECK(verify_instance(mir.inst).pass());
    const DerivedInstance cop = coop_qt(inst);
    CHECK(cop.rep.pass());
    CHECK(verify_instance(cop.inst).pass());
  }
}

TEST_CASE("claimed R-matrix inverses are recomputed, never trusted") {
  Instance inst = load_golden("c_h4_z2_r0");
  REQUIRE(inst.rmatrix_inverse_claim.has_value());
  CHECK(verify_instance(inst).pass());
  inst.rmatrix_inverse_claim->r(0, 0)[0] = Scalar::of(7, Q);
  const Report rep = verify_instance(inst);
  REQUIRE_FALSE(rep.pass());
  CHECK(rep.has_failure_with_prefix("rmatrix.claimed-inverse"));
}

TEST_CASE("forced failure: a non-homomorphic crossing fails composition and nothing earlier") {
  // assign the inversion automorphism to the identity of the grading group
  const FiniteGroup z3 = cyclic_group(3);
  Instance inst = load_golden("c_kz3_z2_trivial");
  Crossing bad = *inst.crossing;
  for (int a = 0; a < 2; ++a) bad.phi(0, a) = inversion_automorphism(z3, Q);
  inst.crossing = bad;
  inst.rmatrix.reset();
  inst.rmatrix_inverse_claim.reset();
  inst.twist.reset();
  const Report rep = verify_instance(inst);
  REQUIRE_FALSE(rep.pass());
  CHECK(rep.has_failure_with_prefix("crossing.composition"));
  // the Hopf layer beneath is untouched
  CHECK_FALSE(rep.has_failure_with_prefix("coalg."));
  CHECK_FALSE(rep.has_failure_with_prefix("hopf."));
  CHECK_FALSE(rep.has_failure_with_prefix("alg."));
}

TEST_CASE("forced failure: a sign tamper in R breaks the intertwining axiom first") {
  Instance inst = load_golden("c_h4_z2_r1");
  inst.rmatrix->r(0, 0)[2 * 4 + 2] = -inst.rmatrix->r(0, 0)[2 * 4 + 2];
  inst.rmatrix_inverse_claim.reset();
  inst.twist.reset();
  const Report rep = verify_instance(inst);
  REQUIRE_FALSE(rep.pass());
  CHECK(rep.has_failure_with_prefix("rmatrix."));
  CHECK_FALSE(rep.has_failure_with_prefix("crossing."));
  CHECK_FALSE(rep.has_failure_with_prefix("hopf."));
}

TEST_CASE("forced failure: a non-invertible R component is refused up front") {
  Instance inst = load_golden("c_h4_z2_r0");
  inst.rmatrix->r(0, 0) = Vector(Q, 16);
  inst.rmatrix_inverse_claim.reset();
  inst.twist.reset();
  const Report rep = verify_instance(inst);
  REQUIRE_FALSE(rep.pass());
  CHECK(rep.has_failure_with_prefix("rmatrix.invertible"));
}

TEST_CASE("forced failure: a grouplike twist that does not realize the crossing") {
  Instance inst = load_golden("c_h4_z2_r1");
  // theta = g is invertible, counital, S-fixed -- but conjugation by it is
  // not the (trivial) crossing, and its coproduct law fails
  GradedVector theta = zero_graded_vector(inst.h);
  for (int a = 0; a < inst.h.n(); ++a) theta[a] = Vector::basis(Q, 4, 1);
  inst.twist = theta;
  const Report rep = verify_instance(inst);
  REQUIRE_FALSE(rep.pass());
  CHECK(rep.has_failure_with_prefix("twist."));
  CHECK_FALSE(rep.has_failure_with_prefix("rmatrix."));
  CHECK_FALSE(rep.has_failure_with_prefix("crossing."));
}
