/// @file crossed.cpp
/// @brief Crossings, R-matrices, Drinfeld elements, twists, and the mirror /
///        coopposite constructions, all as exact matrix identities.

#include "hopfpi/crossed.hpp"

#include <stdexcept>

#include "hopfpi/checkutil.hpp"

namespace hopfpi {

namespace {

/// Product in the tensor algebra H_a (x) H_b.
Vector pair_mul(const Bilinear& pair, const Vector& x, const Vector& y) {
  return bilinear_apply(pair, x, y);
}

Bilinear pair_bilinear(const HopfPi& h, int a, int b) {
  return bilinear_tensor(h.m(a), h.m(b));
}

Bilinear triple_bilinear(const HopfPi& h, int a, int b, int c) {
  return bilinear_tensor(bilinear_tensor(h.m(a), h.m(b)), h.m(c));
}

}  // namespace

Crossing trivial_crossing(const HopfPi& h) {
  const int n = h.n();
  Crossing x;
  x.stride = n;
  x.maps.reserve(static_cast<std::size_t>(n) * n);
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      const int c = h.group().conj(b, a);
      if (h.d(c) != h.d(a)) {
        throw std::domain_error("trivial_crossing: conjugate components differ in dimension");
      }
      x.maps.push_back(LinearMap::identity(h.field(), h.d(a)));
    }
  }
  return x;
}

// ------------------------------------------------------ insertion helpers

Vector insert_12c(const Vector& r, const Vector& one_c) { return tensor(r, one_c); }

Vector insert_a23(const Vector& one_a, const Vector& r) { return tensor(one_a, r); }

Vector insert_1b3(const Vector& r, int left_dim, int right_dim, const Vector& one_b) {
  const int db = one_b.dim();
  Vector out(r.field, left_dim * db * right_dim);
  for (int i = 0; i < left_dim; ++i) {
    for (int j = 0; j < right_dim; ++j) {
      const Scalar& v = r[i * right_dim + j];
      if (v.is_zero()) continue;
      for (int k = 0; k < db; ++k) out[(i * db + k) * right_dim + j] = v * one_b[k];
    }
  }
  return out;
}

// ------------------------------------------------------------- crossings

Report verify_crossing(const HopfPi& h, const Crossing& x) {
  Report rep;
  const int n = h.n();
  const FiniteGroup& g = h.group();
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      const int c = g.conj(b, a);
      const LinearMap& phi = x.phi(b, a);
      // Bijective linear map between components of equal dimension.
      rep.add("crossing.iso", {b, a}, h.d(c) == h.d(a) && rank(phi) == h.d(a),
              "phi_b|H_a is not a linear isomorphism");
      check_equal(rep, "crossing.mult-hom", {b, a}, phi * h.mult_map(a),
                  h.mult_map(c) * kron(phi, phi));
      check_equal(rep, "crossing.unit", {b, a}, apply(phi, h.one(a)), h.one(c));
      // (phi (x) phi) D_{a,c'} = D_{bab^{-1},bc'b^{-1}} phi  on H_{ac'}.
      for (int c2 = 0; c2 < n; ++c2) {
        const int ac2 = g.op(a, c2);
        check_equal(rep, "crossing.comul", {b, a, c2},
                    kron(phi, x.phi(b, c2)) * h.cp(a, c2),
                    h.cp(c, g.conj(b, c2)) * x.phi(b, ac2));
      }
      // phi_{bb'} = phi_b . phi_{b'} componentwise.
      for (int b2 = 0; b2 < n; ++b2) {
        check_equal(rep, "crossing.composition", {b, b2, a},
                    x.phi(g.op(b, b2), a), x.phi(b, g.conj(b2, a)) * x.phi(b2, a));
      }
    }
    check_equal(rep, "crossing.counit", {b},
                LinearMap::row(h.co.counit) * x.phi(b, g.id), LinearMap::row(h.co.counit));
  }
  // Derived facts: consequences of the axioms above.
  for (int a = 0; a < n; ++a) {
    check_equal(rep, "crossing.identity", {a}, x.phi(g.id, a),
                LinearMap::identity(h.field(), h.d(a)), Severity::TheoremViolation);
  }
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      const int c = g.conj(b, a);
      check_equal(rep, "crossing.inverse", {b, a}, x.phi(g.invof(b), c) * x.phi(b, a),
                  LinearMap::identity(h.field(), h.d(a)), Severity::TheoremViolation);
      check_equal(rep, "crossing.antipode", {b, a}, x.phi(b, h.inv(a)) * h.S(a),
                  h.S(c) * x.phi(b, a), Severity::TheoremViolation);
    }
  }
  rep.sort();
  return rep;
}

PhiHat phi_hat(const HopfPi& h, const Crossing& x) {
  const int n = h.n();
  const FiniteGroup& g = h.group();
  PhiHat res;
  res.value.assign(static_cast<std::size_t>(n), Scalar::one(h.field()));
  auto lam_r = pi_integral(h, Side::Right);
  auto lam_l = pi_integral(h, Side::Left);
  if (!lam_r || !lam_l) {
    res.rep.add_fail("phihat.integral", {}, "integral spaces are not one-dimensional",
                     Severity::TheoremViolation);
    res.rep.sort();
    return res;
  }
  auto extract = [&](const GradedCovector& lam, int b) -> std::optional<Scalar> {
    for (int a = 0; a < n; ++a) {
      for (int i = 0; i < h.d(a); ++i) {
        if (lam[a][i].is_zero()) continue;
        Vector w = apply(transpose(x.phi(b, a)), lam[g.conj(b, a)]);
        return w[i] / lam[a][i];
      }
    }
    return std::nullopt;
  };
  for (int b = 0; b < n; ++b) {
    auto vr = extract(*lam_r, b);
    auto vl = extract(*lam_l, b);
    if (!vr || !vl) {
      res.rep.add_fail("phihat.extractable", {b}, "integral vanishes identically",
                       Severity::TheoremViolation);
      continue;
    }
    res.value[static_cast<std::size_t>(b)] = *vr;
    check_equal(res.rep, "phihat.left-right", {b}, *vr, *vl, Severity::TheoremViolation);
    for (int a = 0; a < n; ++a) {
      check_equal(res.rep, "phihat.consistent", {b, a},
                  LinearMap::row((*lam_r)[g.conj(b, a)]) * x.phi(b, a),
                  *vr * LinearMap::row((*lam_r)[a]), Severity::TheoremViolation);
    }
  }
  for (int b = 0; b < n; ++b) {
    for (int b2 = 0; b2 < n; ++b2) {
      check_equal(res.rep, "phihat.morphism", {b, b2}, res.value[static_cast<std::size_t>(g.op(b, b2))],
                  res.value[static_cast<std::size_t>(b)] * res.value[static_cast<std::size_t>(b2)],
                  Severity::TheoremViolation);
    }
  }
  res.rep.sort();
  return res;
}

Report check_marre(const HopfPi& h, const Crossing& x) {
  Report rep;
  const int n = h.n();
  const int e = h.group().id;
  PhiHat ph = phi_hat(h, x);
  auto lam_l = h1_integral(h, Side::Left);
  auto lam_r = h1_integral(h, Side::Right);
  DistinguishedNu dn = distinguished_nu(h);
  DistinguishedG dg = distinguished_g(h);
  if (!lam_l || !lam_r || !ph.rep.pass() || !dn.rep.pass() || !dg.rep.pass()) {
    rep.add_fail("marre.prerequisites", {}, "integral data could not be established",
                 Severity::TheoremViolation);
    rep.sort();
    return rep;
  }
  for (int b = 0; b < n; ++b) {
    const Scalar& hat = ph.value[static_cast<std::size_t>(b)];
    check_equal(rep, "marre.integral.left", {b}, apply(x.phi(b, e), *lam_l), hat * (*lam_l),
                Severity::TheoremViolation);
    check_equal(rep, "marre.integral.right", {b}, apply(x.phi(b, e), *lam_r), hat * (*lam_r),
                Severity::TheoremViolation);
    check_equal(rep, "marre.nu", {b}, LinearMap::row(dn.nu) * x.phi(b, e),
                LinearMap::row(dn.nu), Severity::TheoremViolation);
    for (int a = 0; a < n; ++a) {
      check_equal(rep, "marre.grouplike", {b, a}, apply(x.phi(b, a), dg.g[a]),
                  dg.g[h.group().conj(b, a)], Severity::TheoremViolation);
    }
  }
  rep.sort();
  return rep;
}

// ------------------------------------------------------------- R-matrices

std::optional<RMatrixFamily> rmatrix_inverses(const HopfPi& h, const RMatrixFamily& r) {
  const int n = h.n();
  RMatrixFamily out;
  out.stride = n;
  out.comp.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Bilinear pair = pair_bilinear(h, a, b);
      auto inv = algebra_inverse(pair, tensor(h.one(a), h.one(b)), r.r(a, b));
      if (!inv) return std::nullopt;
      out.comp.push_back(std::move(*inv));
    }
  }
  return out;
}

Report verify_R(const HopfPi& h, const Crossing& x, const RMatrixFamily& r) {
  Report rep;
  const int n = h.n();
  const FiniteGroup& g = h.group();
  const Field fld = h.field();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Bilinear pair = pair_bilinear(h, a, b);
      rep.add("rmatrix.invertible", {a, b},
              algebra_inverse(pair, tensor(h.one(a), h.one(b)), r.r(a, b)).has_value(),
              "R_{a,b} is not invertible in H_a (x) H_b");
      // R D_{a,b}(z) = sigma (phi_{a^{-1}} (x) id) D_{aba^{-1},a}(z) R.
      const int c = g.conj(a, b);  // a b a^{-1}
      LinearMap lhs = structure_left_mul(pair, r.r(a, b)) * h.cp(a, b);
      LinearMap rhs = structure_right_mul(pair, r.r(a, b)) * flip(fld, h.d(b), h.d(a)) *
                      kron(x.phi(g.invof(a), c), LinearMap::identity(fld, h.d(a))) * h.cp(c, a);
      check_equal(rep, "rmatrix.intertwine", {a, b}, lhs, rhs);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        Bilinear triple = triple_bilinear(h, a, b, c);
        // (id (x) D_{b,c})(R_{a,bc}) = (R_{a,c})_{1b3} (R_{a,b})_{12c}.
        Vector lhs_r =
            apply(kron(LinearMap::identity(fld, h.d(a)), h.cp(b, c)), r.r(a, g.op(b, c)));
        Vector rhs_r = pair_mul(triple, insert_1b3(r.r(a, c), h.d(a), h.d(c), h.one(b)),
                                insert_12c(r.r(a, b), h.one(c)));
        check_equal(rep, "rmatrix.hexagon.right", {a, b, c}, lhs_r, rhs_r);
        // (D_{a,b} (x) id)(R_{ab,c})
        //   = [(id (x) phi_{b^{-1}})(R_{a,bcb^{-1}})]_{1b3} (R_{b,c})_{a23}.
        Vector lhs_l =
            apply(kron(h.cp(a, b), LinearMap::identity(fld, h.d(c))), r.r(g.op(a, b), c));
        const int bc = g.conj(b, c);
        Vector twisted =
            apply(kron(LinearMap::identity(fld, h.d(a)), x.phi(g.invof(b), bc)), r.r(a, bc));
        Vector rhs_l = pair_mul(triple, insert_1b3(twisted, h.d(a), h.d(c), h.one(b)),
                                insert_a23(h.one(a), r.r(b, c)));
        check_equal(rep, "rmatrix.hexagon.left", {a, b, c}, lhs_l, rhs_l);
      }
    }
  }
  // (phi_b (x) phi_b)(R_{a,c}) = R_{bab^{-1},bcb^{-1}}.
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      for (int c = 0; c < n; ++c) {
        check_equal(rep, "rmatrix.conj", {b, a, c},
                    apply(kron(x.phi(b, a), x.phi(b, c)), r.r(a, c)),
                    r.r(g.conj(b, a), g.conj(b, c)));
      }
    }
  }
  rep.sort();
  return rep;
}

Report check_B1(const HopfPi& h, const Crossing& x, const RMatrixFamily& r) {
  Report rep;
  const int n = h.n();
  const FiniteGroup& g = h.group();
  const Field fld = h.field();
  const int e = g.id;
  auto rinv = rmatrix_inverses(h, r);
  if (!rinv) {
    rep.add_fail("b1.invertible", {}, "some R component is not invertible",
                 Severity::TheoremViolation);
    rep.sort();
    return rep;
  }
  for (int a = 0; a < n; ++a) {
    const LinearMap id_a = LinearMap::identity(fld, h.d(a));
    check_equal(rep, "b1.counit.left", {a},
                apply(kron(LinearMap::row(h.co.counit), id_a), r.r(e, a)), h.one(a),
                Severity::TheoremViolation);
    check_equal(rep, "b1.counit.right", {a},
                apply(kron(id_a, LinearMap::row(h.co.counit)), r.r(a, e)), h.one(a),
                Severity::TheoremViolation);
  }
  for (int a = 0; a < n; ++a) {
    const int ai = g.invof(a);
    for (int b = 0; b < n; ++b) {
      // (S_{a^{-1}} phi_a (x) id)(R_{a^{-1},b}) = R_{a,b}^{-1}
      check_equal(rep, "b1.antipode-left", {a, b},
                  apply(kron(h.S(ai) * x.phi(a, ai), LinearMap::identity(fld, h.d(b))),
                        r.r(ai, b)),
                  rinv->r(a, b), Severity::TheoremViolation);
      // (id (x) S_b)(R_{a,b}^{-1}) = R_{a,b^{-1}}
      check_equal(rep, "b1.antipode-right", {a, b},
                  apply(kron(LinearMap::identity(fld, h.d(a)), h.S(b)), rinv->r(a, b)),
                  r.r(a, g.invof(b)), Severity::TheoremViolation);
      // (S_a (x) S_b)(R_{a,b}) = (phi_a (x) id)(R_{a^{-1},b^{-1}})
      check_equal(rep, "b1.antipode-both", {a, b},
                  apply(kron(h.S(a), h.S(b)), r.r(a, b)),
                  apply(kron(x.phi(a, ai), LinearMap::identity(fld, h.d(g.invof(b)))),
                        r.r(ai, g.invof(b))),
                  Severity::TheoremViolation);
    }
  }
  // Yang-Baxter family equality with the phi_{b^{-1}}-twisted middle factor.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        Bilinear triple = triple_bilinear(h, a, b, c);
        Vector fa = insert_a23(h.one(a), r.r(b, c));
        Vector fb = insert_1b3(r.r(a, c), h.d(a), h.d(c), h.one(b));
        Vector fc = insert_12c(r.r(a, b), h.one(c));
        const int bc = g.conj(b, c);
        Vector twisted = apply(
            kron(LinearMap::identity(fld, h.d(a)), x.phi(g.invof(b), bc)), r.r(a, bc));
        Vector mid = insert_1b3(twisted, h.d(a), h.d(c), h.one(b));
        Vector lhs = pair_mul(triple, pair_mul(triple, fa, fb), fc);
        Vector rhs = pair_mul(triple, pair_mul(triple, fc, mid), fa);
        check_equal(rep, "b1.yang-baxter", {a, b, c}, lhs, rhs, Severity::TheoremViolation);
      }
    }
  }
  rep.sort();
  return rep;
}

Drinfeld drinfeld_u(const HopfPi& h, const Crossing& x, const RMatrixFamily& r) {
  Drinfeld res{zero_graded_vector(h), zero_graded_vector(h), {}};
  const Field fld = h.field();
  for (int a = 0; a < h.n(); ++a) {
    const int ai = h.inv(a);
    // u_a = m_a (S_{a^{-1}} phi_a (x) id) sigma(R_{a,a^{-1}}).
    res.u[a] = apply(h.mult_map(a) *
                         kron(h.S(ai) * x.phi(a, ai), LinearMap::identity(fld, h.d(a))) *
                         flip(fld, h.d(a), h.d(ai)),
                     r.r(a, ai));
    // Closed inverse: u_a^{-1} = m_a (id (x) S_{a^{-1}} S_a) sigma(R_{a,a}).
    res.u_inv[a] = apply(h.mult_map(a) *
                             kron(LinearMap::identity(fld, h.d(a)), ss_map(h, a)) *
                             flip(fld, h.d(a), h.d(a)),
                         r.r(a, a));
    if (h.d(a) == 0) continue;
    check_equal(res.rep, "drinfeld.inverse", {a}, h.mul(a, res.u[a], res.u_inv[a]), h.one(a),
                Severity::TheoremViolation);
    check_equal(res.rep, "drinfeld.inverse", {a, 1}, h.mul(a, res.u_inv[a], res.u[a]),
                h.one(a), Severity::TheoremViolation);
    auto solved = algebra_inverse(h.m(a), h.one(a), res.u[a]);
    if (!solved) {
      res.rep.add_fail("drinfeld.inverse-forms", {a}, "u_a has no linear-system inverse",
                       Severity::TheoremViolation);
    } else {
      check_equal(res.rep, "drinfeld.inverse-forms", {a}, res.u_inv[a], *solved,
                  Severity::TheoremViolation);
    }
  }
  res.rep.sort();
  return res;
}

Report check_B2(const HopfPi& h, const Crossing& x, const RMatrixFamily& r) {
  Report rep;
  const int n = h.n();
  const FiniteGroup& g = h.group();
  const Field fld = h.field();
  Drinfeld dr = drinfeld_u(h, x, r);
  rep.merge(dr.rep);
  for (int a = 0; a < n; ++a) {
    if (h.d(a) == 0) continue;
    // (b) S_{a^{-1}} S_a (phi_a(z)) = u_a z u_a^{-1}.
    check_equal(rep, "b2.conjugation", {a}, ss_map(h, a) * x.phi(a, a),
                left_mul_map(h, a, dr.u[a]) * right_mul_map(h, a, dr.u_inv[a]),
                Severity::TheoremViolation);
    // (c) each antipode component is bijective.
    rep.add("b2.bijective", {a}, h.d(a) == h.d(h.inv(a)) && rank(h.S(a)) == h.d(a),
            "antipode component is not bijective", Severity::TheoremViolation);
    // (e) c_a = S_{a^{-1}}(u_{a^{-1}}) u_a, both orders, and its commutation.
    Vector su = apply(h.S(h.inv(a)), dr.u[h.inv(a)]);
    Vector c = h.mul(a, su, dr.u[a]);
    check_equal(rep, "b2.central-forms", {a}, c, h.mul(a, dr.u[a], su),
                Severity::TheoremViolation);
    check_equal(rep, "b2.central", {a}, left_mul_map(h, a, c) * x.phi(g.invof(a), a),
                right_mul_map(h, a, c) * x.phi(a, a), Severity::TheoremViolation);
  }
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      // (d) phi_b(u_a) = u_{bab^{-1}}.
      check_equal(rep, "b2.phi", {b, a}, apply(x.phi(b, a), dr.u[a]), dr.u[g.conj(b, a)],
                  Severity::TheoremViolation);
    }
  }
  // (f) D_{a,b}(u_{ab}) via both closed product formulas.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = g.op(a, b);
      if (h.d(a) * h.d(b) == 0) continue;
      Bilinear pair = pair_bilinear(h, a, b);
      Vector pair_unit = tensor(h.one(a), h.one(b));
      Vector lhs = apply(h.cp(a, b), dr.u[ab]);
      const LinearMap sw = flip(fld, h.d(b), h.d(a));
      // F1 = sigma (id (x) phi_a)(R_{b,a}) . R_{a,b}
      Vector f1 = pair_mul(
          pair,
          apply(sw, apply(kron(LinearMap::identity(fld, h.d(b)), x.phi(a, a)), r.r(b, a))),
          r.r(a, b));
      auto f1_inv = algebra_inverse(pair, pair_unit, f1);
      if (!f1_inv) {
        rep.add_fail("b2.comul.left", {a, b}, "product form is not invertible",
                     Severity::TheoremViolation);
      } else {
        check_equal(rep, "b2.comul.left", {a, b}, lhs,
                    pair_mul(pair, *f1_inv, tensor(dr.u[a], dr.u[b])),
                    Severity::TheoremViolation);
      }
      // F2 = sigma (phi_{b^{-1}} (x) id)(R_{b,a}) . (phi_{a^{-1}} (x) phi_{b^{-1}})(R_{a,b})
      Vector f2 = pair_mul(
          pair,
          apply(sw, apply(kron(x.phi(g.invof(b), b), LinearMap::identity(fld, h.d(a))),
                          r.r(b, a))),
          apply(kron(x.phi(g.invof(a), a), x.phi(g.invof(b), b)), r.r(a, b)));
      auto f2_inv = algebra_inverse(pair, pair_unit, f2);
      if (!f2_inv) {
        rep.add_fail("b2.comul.right", {a, b}, "product form is not invertible",
                     Severity::TheoremViolation);
      } else {
        check_equal(rep, "b2.comul.right", {a, b}, lhs,
                    pair_mul(pair, tensor(dr.u[a], dr.u[b]), *f2_inv),
                    Severity::TheoremViolation);
      }
    }
  }
  // (g) eps(u_1) = 1.
  check_equal(rep, "b2.counit", {}, h.eps(dr.u[g.id]), Scalar::one(fld),
              Severity::TheoremViolation);
  rep.sort();
  return rep;
}

EllElement ell_element(const HopfPi& h, const Crossing& x, const RMatrixFamily& r) {
  EllElement res{zero_graded_vector(h), {}};
  Drinfeld dr = drinfeld_u(h, x, r);
  const FiniteGroup& g = h.group();
  for (int a = 0; a < h.n(); ++a) {
    if (h.d(a) == 0) continue;
    Vector su = apply(h.S(h.inv(a)), dr.u[h.inv(a)]);
    auto su_inv = algebra_inverse(h.m(a), h.one(a), su);
    if (!su_inv) {
      res.rep.add_fail("ell.defined", {a}, "S(u) is not invertible",
                       Severity::TheoremViolation);
      res.ell[a] = h.one(a);
      continue;
    }
    res.ell[a] = h.mul(a, *su_inv, dr.u[a]);
  }
  for (int a = 0; a < h.n(); ++a) {
    for (int b = 0; b < h.n(); ++b) {
      check_equal(res.rep, "ell.grouplike", {a, b}, apply(h.cp(a, b), res.ell[g.op(a, b)]),
                  tensor(res.ell[a], res.ell[b]), Severity::TheoremViolation);
    }
  }
  if (h.d(g.id) > 0) {
    check_equal(res.rep, "ell.counit", {}, h.eps(res.ell[g.id]), Scalar::one(h.field()),
                Severity::TheoremViolation);
  }
  for (int a = 0; a < h.n(); ++a) {
    if (h.d(a) == 0) continue;
    auto ell_inv = algebra_inverse(h.m(a), h.one(a), res.ell[a]);
    if (!ell_inv) {
      res.rep.add_fail("ell.s4", {a}, "ell_a is not invertible", Severity::TheoremViolation);
      continue;
    }
    check_equal(res.rep, "ell.s4", {a}, matrix_power(ss_map(h, a), 2),
                left_mul_map(h, a, res.ell[a]) * right_mul_map(h, a, *ell_inv),
                Severity::TheoremViolation);
  }
  res.rep.sort();
  return res;
}

// ------------------------------------------------------------------ twists

Report verify_twist(const HopfPi& h, const Crossing& x, const RMatrixFamily& r,
                    const GradedVector& theta) {
  Report rep;
  const int n = h.n();
  const FiniteGroup& g = h.group();
  const Field fld = h.field();
  GradedVector theta_inv = zero_graded_vector(h);
  for (int a = 0; a < n; ++a) {
    if (h.d(a) == 0) {
      rep.add_ok("twist.invertible", {a});
      continue;
    }
    auto inv = algebra_inverse(h.m(a), h.one(a), theta[a]);
    rep.add("twist.invertible", {a}, inv.has_value(), "theta_a is not invertible");
    if (!inv) {
      rep.sort();
      return rep;
    }
    theta_inv[a] = std::move(*inv);
  }
  for (int a = 0; a < n; ++a) {
    if (h.d(a) == 0) continue;
    // phi_a(z) = theta_a^{-1} z theta_a.
    check_equal(rep, "twist.crossing", {a}, x.phi(a, a),
                left_mul_map(h, a, theta_inv[a]) * right_mul_map(h, a, theta[a]));
    // S_a(theta_a) = theta_{a^{-1}}.
    check_equal(rep, "twist.antipode", {a}, apply(h.S(a), theta[a]), theta[h.inv(a)]);
  }
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      check_equal(rep, "twist.conj", {b, a}, apply(x.phi(b, a), theta[a]),
                  theta[g.conj(b, a)]);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = g.op(a, b);
      Bilinear pair = pair_bilinear(h, a, b);
      // D_{a,b}(theta_{ab})
      //   = (theta_a (x) theta_b) sigma (phi_{a^{-1}} (x) id)(R_{aba^{-1},a}) R_{a,b}.
      const int c = g.conj(a, b);
      Vector mid = apply(flip(fld, h.d(b), h.d(a)),
                         apply(kron(x.phi(g.invof(a), c), LinearMap::identity(fld, h.d(a))),
                               r.r(c, a)));
      Vector rhs =
          pair_mul(pair, pair_mul(pair, tensor(theta[a], theta[b]), mid), r.r(a, b));
      check_equal(rep, "twist.comul", {a, b}, apply(h.cp(a, b), theta[ab]), rhs);
    }
  }
  // Derived facts.
  Drinfeld dr = drinfeld_u(h, x, r);
  for (int a = 0; a < n; ++a) {
    if (h.d(a) == 0) continue;
    check_equal(rep, "ribbon.crossing-inverse", {a}, x.phi(g.invof(a), a),
                left_mul_map(h, a, theta[a]) * right_mul_map(h, a, theta_inv[a]),
                Severity::TheoremViolation);
    // theta_a^{order(a)} is central.
    Vector pw = h.one(a);
    const int ord = element_order(g, a);
    for (int i = 0; i < ord; ++i) pw = h.mul(a, pw, theta[a]);
    check_equal(rep, "ribbon.power-central", {a}, left_mul_map(h, a, pw),
                right_mul_map(h, a, pw), Severity::TheoremViolation);
    check_equal(rep, "ribbon.u-commute", {a}, h.mul(a, theta[a], dr.u[a]),
                h.mul(a, dr.u[a], theta[a]), Severity::TheoremViolation);
  }
  if (h.d(g.id) > 0) {
    check_equal(rep, "ribbon.counit", {}, h.eps(theta[g.id]), Scalar::one(fld),
                Severity::TheoremViolation);
  }
  rep.sort();
  return rep;
}

GElement G_element(const HopfPi& h, const Crossing& x, const RMatrixFamily& r,
                   const GradedVector& theta) {
  GElement res{zero_graded_vector(h), {}};
  Drinfeld dr = drinfeld_u(h, x, r);
  const FiniteGroup& g = h.group();
  for (int a = 0; a < h.n(); ++a) {
    if (h.d(a) == 0) continue;
    res.g[a] = h.mul(a, theta[a], dr.u[a]);
  }
  for (int a = 0; a < h.n(); ++a) {
    for (int b = 0; b < h.n(); ++b) {
      check_equal(res.rep, "zig.grouplike", {a, b}, apply(h.cp(a, b), res.g[g.op(a, b)]),
                  tensor(res.g[a], res.g[b]), Severity::TheoremViolation);
    }
  }
  if (h.d(g.id) > 0) {
    check_equal(res.rep, "zig.counit", {}, h.eps(res.g[g.id]), Scalar::one(h.field()),
                Severity::TheoremViolation);
  }
  for (int b = 0; b < h.n(); ++b) {
    for (int a = 0; a < h.n(); ++a) {
      check_equal(res.rep, "zig.phi", {b, a}, apply(x.phi(b, a), res.g[a]),
                  res.g[g.conj(b, a)], Severity::TheoremViolation);
    }
  }
  for (int a = 0; a < h.n(); ++a) {
    if (h.d(a) == 0) continue;
    const int ai = h.inv(a);
    auto gi_inv = algebra_inverse(h.m(ai), h.one(ai), res.g[ai]);
    auto ga_inv = algebra_inverse(h.m(a), h.one(a), res.g[a]);
    if (!gi_inv || !ga_inv) {
      res.rep.add_fail("zig.invertible", {a}, "G component is not invertible",
                       Severity::TheoremViolation);
      continue;
    }
    // S_a(G_a) = G_{a^{-1}}^{-1}.
    check_equal(res.rep, "zig.antipode", {a}, apply(h.S(a), res.g[a]), *gi_inv,
                Severity::TheoremViolation);
    // theta_a^{-2} = c_a, i.e. theta_a^2 c_a = 1.
    Vector su = apply(h.S(ai), dr.u[ai]);
    Vector c = h.mul(a, su, dr.u[a]);
    Vector theta_sq = h.mul(a, theta[a], theta[a]);
    check_equal(res.rep, "zig.theta-square", {a}, h.mul(a, theta_sq, c), h.one(a),
                Severity::TheoremViolation);
    // S_a(u_a) = G_{a^{-1}}^{-1} u_{a^{-1}} G_{a^{-1}}^{-1}.
    check_equal(res.rep, "zig.antipode-u", {a}, apply(h.S(a), dr.u[a]),
                h.mul(ai, h.mul(ai, *gi_inv, dr.u[ai]), *gi_inv),
                Severity::TheoremViolation);
    // S_{a^{-1}} S_a = conjugation by G_a.
    check_equal(res.rep, "zig.s2", {a}, ss_map(h, a),
                left_mul_map(h, a, res.g[a]) * right_mul_map(h, a, *ga_inv),
                Severity::TheoremViolation);
  }
  res.rep.sort();
  return res;
}

Report g_from_R(const HopfPi& h, const Crossing& x, const RMatrixFamily& r,
                const std::optional<GradedVector>& theta) {
  Report rep;
  const int n = h.n();
  const FiniteGroup& g = h.group();
  const Field fld = h.field();
  DistinguishedNu dn = distinguished_nu(h);
  DistinguishedG dg = distinguished_g(h);
  PhiHat ph = phi_hat(h, x);
  EllElement ell = ell_element(h, x, r);
  if (!dn.rep.pass() || !dg.rep.pass() || !ph.rep.pass() || !ell.rep.pass()) {
    rep.add_fail("calcg.prerequisites", {}, "distinguished data could not be established",
                 Severity::TheoremViolation);
    rep.sort();
    return rep;
  }
  // h_a = (id (x) nu)(R_{a,1}).
  GradedVector hfam = zero_graded_vector(h);
  for (int a = 0; a < n; ++a) {
    hfam[a] = apply(kron(LinearMap::identity(fld, h.d(a)), LinearMap::row(dn.nu)),
                    r.r(a, g.id));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      check_equal(rep, "calcg.h-grouplike", {a, b}, apply(h.cp(a, b), hfam[g.op(a, b)]),
                  tensor(hfam[a], hfam[b]), Severity::TheoremViolation);
    }
  }
  if (h.d(g.id) > 0) {
    check_equal(rep, "calcg.h-counit", {}, h.eps(hfam[g.id]), Scalar::one(fld),
                Severity::TheoremViolation);
  }
  for (int a = 0; a < n; ++a) {
    if (h.d(a) == 0) continue;
    // g_a = phi-hat(a)^{-1} ell_a h_a.
    check_equal(rep, "calcg.identity", {a}, dg.g[a],
                ph.value[static_cast<std::size_t>(a)].inverse() *
                    h.mul(a, ell.ell[a], hfam[a]),
                Severity::TheoremViolation);
  }
  if (theta) {
    GElement ge = G_element(h, x, r, *theta);
    for (int a = 0; a < n; ++a) {
      if (h.d(a) == 0) continue;
      // phi-hat(a) g_a = G_a^2 h_a.
      check_equal(rep, "calcg.ribbon", {a}, ph.value[static_cast<std::size_t>(a)] * dg.g[a],
                  h.mul(a, h.mul(a, ge.g[a], ge.g[a]), hfam[a]), Severity::TheoremViolation);
    }
  }
  rep.sort();
  return rep;
}

// ----------------------------------------------- mirror and coopposite

DerivedInstance mirror(const Instance& inst) {
  if (!inst.crossing) throw std::domain_error("mirror: needs a crossing");
  const HopfPi& h = inst.h;
  const Crossing& x = *inst.crossing;
  const FiniteGroup& g = h.group();
  const int n = h.n();
  const Field fld = h.field();
  DerivedInstance out;
  out.inst.name = inst.name + "^mirror";

  HopfPi m;
  m.co.field = fld;
  m.co.group = g;
  m.co.dims.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) m.co.dims[static_cast<std::size_t>(a)] = h.d(g.invof(a));
  m.co.counit = h.co.counit;
  m.co.comul.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      // D-bar_{a,b} = (phi_b (x) id) D_{b^{-1}a^{-1}b, b^{-1}}.
      const int c = g.conj(g.invof(b), g.invof(a));
      m.co.comul.push_back(kron(x.phi(b, c), LinearMap::identity(fld, h.d(g.invof(b)))) *
                           h.cp(c, g.invof(b)));
    }
  }
  for (int a = 0; a < n; ++a) {
    m.mult.push_back(h.m(g.invof(a)));
    m.unit.push_back(h.one(g.invof(a)));
  }
  for (int a = 0; a < n; ++a) {
    // S-bar_a = phi_a S_{a^{-1}} : H_{a^{-1}} -> H_a.
    m.antipode.push_back(x.phi(a, a) * h.S(g.invof(a)));
  }
  out.inst.h = std::move(m);

  Crossing mx;
  mx.stride = n;
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) mx.maps.push_back(x.phi(b, g.invof(a)));
  }
  out.inst.crossing = std::move(mx);

  if (inst.rmatrix) {
    auto rinv = rmatrix_inverses(h, *inst.rmatrix);
    if (!rinv) {
      out.rep.add_fail("mirror.r-invertible", {}, "some R component is not invertible");
    } else {
      RMatrixFamily mr;
      mr.stride = n;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          // R-bar_{a,b} = sigma(R^{-1}_{b^{-1},a^{-1}}).
          const int bi = g.invof(b);
          const int ai = g.invof(a);
          mr.comp.push_back(apply(flip(fld, h.d(bi), h.d(ai)), rinv->r(bi, ai)));
        }
      }
      out.inst.rmatrix = std::move(mr);
      // u-bar_a = S_a(u_a)^{-1}.
      Drinfeld dr = drinfeld_u(h, x, *inst.rmatrix);
      Drinfeld mdr = drinfeld_u(out.inst.h, *out.inst.crossing, *out.inst.rmatrix);
      for (int a = 0; a < n; ++a) {
        if (h.d(g.invof(a)) == 0) continue;
        Vector su = apply(h.S(a), dr.u[a]);
        auto su_inv = algebra_inverse(h.m(g.invof(a)), h.one(g.invof(a)), su);
        if (!su_inv) {
          out.rep.add_fail("mirror.drinfeld", {a}, "S(u) is not invertible",
                           Severity::TheoremViolation);
          continue;
        }
        check_equal(out.rep, "mirror.drinfeld", {a}, mdr.u[a], *su_inv,
                    Severity::TheoremViolation);
      }
    }
  }
  if (inst.twist) {
    GradedVector mt = zero_graded_vector(out.inst.h);
    bool ok = true;
    for (int a = 0; a < n; ++a) {
      const int ai = g.invof(a);
      if (h.d(ai) == 0) continue;
      auto inv = algebra_inverse(h.m(ai), h.one(ai), (*inst.twist)[ai]);
      if (!inv) {
        out.rep.add_fail("mirror.twist-invertible", {a}, "theta component is not invertible");
        ok = false;
        break;
      }
      mt[a] = std::move(*inv);  // theta-bar_a = theta_{a^{-1}}^{-1}
    }
    if (ok) out.inst.twist = std::move(mt);
  }
  out.rep.sort();
  return out;
}

DerivedInstance coop_qt(const Instance& inst) {
  if (!inst.crossing) throw std::domain_error("coop_qt: needs a crossing");
  const HopfPi& h = inst.h;
  const Crossing& x = *inst.crossing;
  const FiniteGroup& g = h.group();
  const int n = h.n();
  const Field fld = h.field();
  DerivedInstance out;
  out.inst.name = inst.name + "^cop";
  out.inst.h = coopposite(h);

  Crossing cx;
  cx.stride = n;
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) cx.maps.push_back(x.phi(b, g.invof(a)));
  }
  out.inst.crossing = std::move(cx);

  if (inst.rmatrix) {
    auto rinv = rmatrix_inverses(h, *inst.rmatrix);
    RMatrixFamily cr;
    cr.stride = n;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int bi = g.invof(b);
        // R^cop_{a,b} = (S_a (x) id)(R_{a,b^{-1}}).
        Vector v = apply(kron(h.S(a), LinearMap::identity(fld, h.d(bi))),
                         inst.rmatrix->r(a, bi));
        if (rinv) {
          // Alternate closed form: (phi_a (x) id)(R^{-1}_{a^{-1},b^{-1}}).
          const int ai = g.invof(a);
          Vector alt = apply(kron(x.phi(a, ai), LinearMap::identity(fld, h.d(bi))),
                             rinv->r(ai, bi));
          check_equal(out.rep, "coop.r-forms", {a, b}, v, alt, Severity::TheoremViolation);
        }
        cr.comp.push_back(std::move(v));
      }
    }
    out.inst.rmatrix = std::move(cr);
    // u^cop_a = u_{a^{-1}}^{-1}.
    Drinfeld dr = drinfeld_u(h, x, *inst.rmatrix);
    Drinfeld cdr = drinfeld_u(out.inst.h, *out.inst.crossing, *out.inst.rmatrix);
    for (int a = 0; a < n; ++a) {
      const int ai = g.invof(a);
      if (h.d(ai) == 0) continue;
      check_equal(out.rep, "coop.drinfeld", {a}, cdr.u[a], dr.u_inv[ai],
                  Severity::TheoremViolation);
    }
  }
  if (inst.twist) {
    GradedVector ct = zero_graded_vector(out.inst.h);
    bool ok = true;
    for (int a = 0; a < n; ++a) {
      const int ai = g.invof(a);
      if (h.d(ai) == 0) continue;
      auto inv = algebra_inverse(h.m(ai), h.one(ai), (*inst.twist)[ai]);
      if (!inv) {
        out.rep.add_fail("coop.twist-invertible", {a}, "theta component is not invertible");
        ok = false;
        break;
      }
      ct[a] = std::move(*inv);  // theta^cop_a = theta_{a^{-1}}^{-1}
    }
    if (ok) out.inst.twist = std::move(ct);
  }
  out.rep.sort();
  return out;
}

}  // namespace hopfpi
