/// @file pipeline.cpp
/// @brief Verification and identity pipelines.

#include "hopfpi/pipeline.hpp"

#include "hopfpi/checkutil.hpp"
#include "hopfpi/integrals.hpp"
#include "hopfpi/traces.hpp"

namespace hopfpi {

Report verify_instance(const Instance& inst) {
  Report rep = verify_coalgebra(inst.h.co);
  if (!rep.pass()) {
    rep.sort();
    return rep;
  }
  // verify_hopf re-includes the coalgebra items, so replace rather than merge.
  rep = verify_hopf(inst.h);
  if (!rep.pass()) {
    rep.sort();
    return rep;
  }
  if (inst.crossing) {
    rep.merge(verify_crossing(inst.h, *inst.crossing));
    if (!rep.pass()) {
      rep.sort();
      return rep;
    }
    if (inst.rmatrix) {
      rep.merge(verify_R(inst.h, *inst.crossing, *inst.rmatrix));
      if (inst.rmatrix_inverse_claim) {
        auto computed = rmatrix_inverses(inst.h, *inst.rmatrix);
        if (computed) {
          const int n = inst.h.n();
          for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
              check_equal(rep, "rmatrix.claimed-inverse", {a, b},
                          inst.rmatrix_inverse_claim->r(a, b), computed->r(a, b));
            }
          }
        }
      }
      if (!rep.pass()) {
        rep.sort();
        return rep;
      }
      if (inst.twist) {
        rep.merge(verify_twist(inst.h, *inst.crossing, *inst.rmatrix, *inst.twist));
      }
    }
  }
  rep.sort();
  return rep;
}

Report identity_suite(const Instance& inst) {
  const HopfPi& h = inst.h;
  Report rep;
  rep.merge(check_antipode_properties(h));
  for (Side side : {Side::Left, Side::Right}) {
    auto lam = pi_integral(h, side);
    if (lam) {
      rep.merge(is_integral(h, *lam, side));
      rep.merge(integral_nonzero_everywhere(h, *lam));
      rep.merge(check_integral_freeness(h, *lam));
    }
  }
  rep.merge(distinguished_g(h).rep);
  rep.merge(distinguished_nu(h).rep);
  rep.merge(check_radford(h));
  rep.merge(check_lemuni(h));
  rep.merge(check_lambda_coeff(h));
  rep.merge(check_s4_formula(h));
  rep.merge(check_antipode_order(h));
  if (inst.crossing) {
    rep.merge(phi_hat(h, *inst.crossing).rep);
    rep.merge(check_marre(h, *inst.crossing));
    if (inst.rmatrix) {
      rep.merge(check_B1(h, *inst.crossing, *inst.rmatrix));
      rep.merge(check_B2(h, *inst.crossing, *inst.rmatrix));
      rep.merge(ell_element(h, *inst.crossing, *inst.rmatrix).rep);
      rep.merge(g_from_R(h, *inst.crossing, *inst.rmatrix, inst.twist));
      if (inst.twist) {
        rep.merge(G_element(h, *inst.crossing, *inst.rmatrix, *inst.twist).rep);
      }
    }
  }
  rep.sort();
  return rep;
}

}  // namespace hopfpi
