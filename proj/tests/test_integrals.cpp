/// @file test_integrals.cpp
/// @brief Integral existence/uniqueness across the zoo, the distinguished
///        grouplike and modular function against frozen oracle values, the
///        integral-identity suite, antipode order bounds, and the
///        (co)semisimplicity classification.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfpi/instances.hpp"
#include "hopfpi/integrals.hpp"
#include "test_util.hpp"

using namespace hopfpi;
using namespace hopfpi_test;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("the space of group-integrals is a line on every nonzero zoo instance") {
  for (const auto& name : zoo_names()) {
    CAPTURE(name);
    const HopfPi h = load_golden(name).h;
    for (Side s : {Side::Left, Side::Right}) {
      const auto space = integral_space(h, s);
      REQUIRE(space.size() == 1);
      CHECK(is_integral(h, space.front(), s).pass());
      CHECK(integral_nonzero_everywhere(h, space.front()).pass());
      CHECK(check_integral_freeness(h, space.front()).pass());
    }
  }
}

TEST_CASE("the computed integral forms match the independent oracle") {
  const HopfPi h = sweedler(Q);
  const auto oracle = oracle_constants().at("sweedler");
  const auto left = pi_integral(h, Side::Left);
  const auto right = pi_integral(h, Side::Right);
  REQUIRE(left.has_value());
  REQUIRE(right.has_value());
  CHECK(normalize_line((*left)[0]) == oracle_vector(oracle.at("integral_form_left"), Q));
  CHECK(normalize_line((*right)[0]) == oracle_vector(oracle.at("integral_form_right"), Q));
}

TEST_CASE("the classical integral elements match the independent oracle") {
  const HopfPi h = sweedler(Q);
  const auto oracle = oracle_constants().at("sweedler");
  const auto left = h1_integral(h, Side::Left);
  const auto right = h1_integral(h, Side::Right);
  REQUIRE(left.has_value());
  REQUIRE(right.has_value());
  CHECK(normalize_line(*left) == oracle_vector(oracle.at("integral_element_left"), Q));
  CHECK(normalize_line(*right) == oracle_vector(oracle.at("integral_element_right"), Q));
}

TEST_CASE("distinguished grouplike and modular function against the oracle") {
  const HopfPi h = sweedler(Q);
  const auto oracle = oracle_constants().at("sweedler");

  const DistinguishedG dg = distinguished_g(h);
  CHECK(dg.rep.pass());
  CHECK(dg.g[0] == oracle_vector(oracle.at("distinguished_g"), Q));

  const DistinguishedNu dn = distinguished_nu(h);
  CHECK(dn.rep.pass());
  CHECK(dn.nu == oracle_vector(oracle.at("nu"), Q));
  // nu has order two here, so it equals its inverse
  CHECK(dn.nu_inv == dn.nu);
}

TEST_CASE("the distinguished data is trivial exactly on the unimodular instances") {
  for (const auto& name : {"trivial_s3", "kz3_q", "kz3_gf3", "c_kz3_z2_trivial"}) {
    CAPTURE(name);
    const HopfPi h = load_golden(name).h;
    CHECK(is_unimodular(h));
    const DistinguishedNu dn = distinguished_nu(h);
    CHECK(dn.rep.pass());
    // nu = eps on a unimodular instance
    CHECK(dn.nu == h.co.counit);
  }
  CHECK_FALSE(is_unimodular(sweedler(Q)));
  CHECK_FALSE(is_unimodular(load_golden("c_h4_z2_r0").h));
}

TEST_CASE("the integral identity suite holds on all zoo instances") {
  for (const auto& name : zoo_names()) {
    CAPTURE(name);
    const HopfPi h = load_golden(name).h;
    CHECK(check_radford(h).pass());
    CHECK(check_lemuni(h).pass());
    CHECK(check_lambda_coeff(h).pass());
    CHECK(check_s4_formula(h).pass());
  }
}

TEST_CASE("antipode bijectivity and the order bound hold everywhere") {
  for (const auto& name : zoo_names()) {
    CAPTURE(name);
    const HopfPi h = load_golden(name).h;
    for (int a = 0; a < h.n(); ++a) {
      CHECK(rank(h.S(a)) == h.d(a));
    }
    CHECK(check_antipode_order(h).pass());
  }
}

TEST_CASE("the order bound is not vacuous: S has exact order four here") {
  const HopfPi h = sweedler(Q);
  const LinearMap s2 = h.S(0) * h.S(0);
  CHECK_FALSE(s2 == LinearMap::identity(Q, 4));
  CHECK(s2 * s2 == LinearMap::identity(Q, 4));
}

TEST_CASE("semisimplicity and cosemisimplicity classification") {
  // group algebra over Q: everything
  const HopfPi kz3 = load_golden("kz3_q").h;
  CHECK(is_semisimple(kz3));
  CHECK(is_cosemisimple(kz3));
  CHECK(is_unimodular(kz3));
  // the four-dimensional fixture: none of the three
  const HopfPi sw = sweedler(Q);
  CHECK_FALSE(is_semisimple(sw));
  CHECK_FALSE(is_cosemisimple(sw));
  CHECK_FALSE(is_unimodular(sw));
  // modular case: |Z/3| = 0 in GF(3) kills semisimplicity but not the dual
  const HopfPi mod = load_golden("kz3_gf3").h;
  CHECK_FALSE(is_semisimple(mod));
  CHECK(is_cosemisimple(mod));
  // the one-dimensional family: everything
  const HopfPi triv = load_golden("trivial_s3").h;
  CHECK(is_semisimple(triv));
  CHECK(is_cosemisimple(triv));
  CHECK(is_unimodular(triv));
}

TEST_CASE("hit actions implement the dual module structure") {
  const HopfPi h = sweedler(Q);
  const auto lam = pi_integral(h, Side::Right);
  REQUIRE(lam.has_value());
  // (f -> x) evaluated against the counit direction: hitting with eps is the identity
  const Vector x = Vector::basis(Q, 4, 2);
  CHECK(hit_left(h, h.co.counit, 0, x) == x);
  CHECK(hit_right(h, 0, x, h.co.counit) == x);
}
