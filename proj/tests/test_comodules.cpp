/// @file test_comodules.cpp
/// @brief Comodule axioms, coinvariants, the fundamental decomposition on
///        three base instances, the integral/coinvariant correspondence, and
///        the module/comodule data round trip.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfpi/comodules.hpp"
#include "hopfpi/instances.hpp"
#include "hopfpi/integrals.hpp"
#include "test_util.hpp"

using namespace hopfpi;
using namespace hopfpi_test;

namespace {
const Field Q = Field::rationals();

std::vector<std::string> decomposition_bases() {
  return {"trivial_z2", "sweedler", "c_h4_z2_r0"};
}
}  // namespace

TEST_CASE("the regular comodule and its Hopf structure verify") {
  for (const auto& name : zoo_names()) {
    CAPTURE(name);
    const HopfPi h = load_golden(name).h;
    CHECK(verify_comodule(h.co, regular_comodule(h)).pass());
    CHECK(verify_hopf_comodule(h, regular_hopf_comodule(h)).pass());
  }
}

TEST_CASE("trivial coactions and their induced Hopf comodules verify") {
  for (const auto& name : decomposition_bases()) {
    CAPTURE(name);
    const HopfPi h = load_golden(name).h;
    for (int c : {0, 1, 2}) {
      const PiComodule triv = trivial_coaction_comodule(h, c);
      CHECK(verify_comodule(h.co, triv).pass());
      CHECK(verify_hopf_comodule(h, trivial_hopf_comodule(h, triv)).pass());
    }
  }
}

TEST_CASE("the fundamental decomposition is an exact isomorphism") {
  for (const auto& name : decomposition_bases()) {
    CAPTURE(name);
    const HopfPi h = load_golden(name).h;
    // M = H over itself
    const Decomposition reg = fundamental_decomposition(h, regular_hopf_comodule(h));
    CHECK(reg.rep.pass());
    // M = (two-dimensional trivial comodule) (x) H
    const Decomposition ind = fundamental_decomposition(
        h, trivial_hopf_comodule(h, trivial_coaction_comodule(h, 2)));
    CHECK(ind.rep.pass());
  }
}

TEST_CASE("coinvariants of M (x) H recover M") {
  for (const auto& name : decomposition_bases()) {
    CAPTURE(name);
    const HopfPi h = load_golden(name).h;
    for (int c : {1, 3}) {
      const HopfPiComodule mh = trivial_hopf_comodule(h, trivial_coaction_comodule(h, c));
      const auto coinv = coinvariants(h, mh.co);
      CHECK(static_cast<int>(coinv.size()) == c);
    }
  }
}

TEST_CASE("degree-one coinvariants of the dual comodule are the left integrals") {
  for (const auto& name : {"sweedler", "c_h4_z2_r0"}) {
    CAPTURE(name);
    const HopfPi h = load_golden(name).h;
    const PiComodule dual = dual_comodule(h);
    CHECK(verify_comodule(h.co, dual).pass());
    const auto coinv = coinvariants(h, dual);
    REQUIRE(coinv.size() == 1);
    // the tuple's component at the neutral degree spans the left integral line
    const auto lam = pi_integral(h, Side::Left);
    REQUIRE(lam.has_value());
    const int e = h.group().id;
    CHECK(normalize_line(coinv.front()[static_cast<std::size_t>(e)]) ==
          normalize_line((*lam)[e]));
  }
}

TEST_CASE("comodule and dual-module data convert back and forth exactly") {
  for (const auto& name : {"sweedler", "c_h4_z2_r0", "trivial_s3"}) {
    CAPTURE(name);
    const HopfPi h = load_golden(name).h;
    const PiComodule m = regular_comodule(h);
    const PiModuleOverDual mod = module_from_comodule(m);
    const PiComodule back = comodule_from_module(h.co, mod);
    REQUIRE(back.mdims == m.mdims);
    for (int a = 0; a < h.n(); ++a) {
      for (int b = 0; b < h.n(); ++b) {
        CHECK(back.r(a, b) == m.r(a, b));
      }
    }
  }
}

TEST_CASE("forced failure: a sign-flipped coaction breaks coassociativity or the counit") {
  const HopfPi h = sweedler(Q);
  PiComodule m = regular_comodule(h);
  m.r(0, 0).at(2 * 4 + 0, 2) = -Scalar::one(Q);  // x |-> -x (x) 1 + g (x) x
  const Report rep = verify_comodule(h.co, m);
  REQUIRE_FALSE(rep.pass());
  for (const auto& id : rep.failing_ids()) {
    CHECK(id.rfind("comodule.", 0) == 0);
  }
}

TEST_CASE("forced failure: a non-unital action is caught by the action axioms") {
  const HopfPi h = sweedler(Q);
  HopfPiComodule m = regular_hopf_comodule(h);
  m.action[0] = Scalar::of(2, Q) * m.action[0];
  const Report rep = verify_hopf_comodule(h, m);
  REQUIRE_FALSE(rep.pass());
  CHECK(rep.has_failure_with_prefix("action."));
  // the underlying coaction is untouched, so no comodule axiom fails
  CHECK_FALSE(rep.has_failure_with_prefix("comodule."));
}
