/// @file integrals.cpp
/// @brief Exact computation of group-integrals and the identities they obey.

#include "hopfpi/integrals.hpp"

#include <string>

#include "hopfpi/checkutil.hpp"
#include "hopfpi/convolution.hpp"

namespace hopfpi {

namespace {

/// Offsets of the concatenated unknowns (lam_a coordinates in degree order).
std::vector<int> degree_offsets(const HopfPi& h, int& total) {
  std::vector<int> off(static_cast<std::size_t>(h.n()) + 1, 0);
  for (int a = 0; a < h.n(); ++a) off[static_cast<std::size_t>(a) + 1] = off[a] + h.d(a);
  total = off[static_cast<std::size_t>(h.n())];
  return off;
}

/// (id_{H_a} (x) lam_b) D_{a,b} as a matrix H_{ab} -> H_a, i.e. the partial
/// contraction of the comultiplication against the degree-b form.
LinearMap contract_right_leg(const HopfPi& h, int a, int b, const Vector& lam_b) {
  const int ab = h.group().op(a, b);
  const int da = h.d(a);
  const int db = h.d(b);
  LinearMap t(h.field(), da, h.d(ab));
  const LinearMap& cp = h.cp(a, b);
  for (int i = 0; i < da; ++i) {
    for (int x = 0; x < h.d(ab); ++x) {
      Scalar s = Scalar::zero(h.field());
      for (int j = 0; j < db; ++j) s += cp.at(i * db + j, x) * lam_b[j];
      t.at(i, x) = s;
    }
  }
  return t;
}

/// (lam_a (x) id_{H_b}) D_{a,b} as a matrix H_{ab} -> H_b.
LinearMap contract_left_leg(const HopfPi& h, int a, int b, const Vector& lam_a) {
  const int ab = h.group().op(a, b);
  const int da = h.d(a);
  const int db = h.d(b);
  LinearMap t(h.field(), db, h.d(ab));
  const LinearMap& cp = h.cp(a, b);
  for (int j = 0; j < db; ++j) {
    for (int x = 0; x < h.d(ab); ++x) {
      Scalar s = Scalar::zero(h.field());
      for (int i = 0; i < da; ++i) s += cp.at(i * db + j, x) * lam_a[i];
      t.at(j, x) = s;
    }
  }
  return t;
}

/// lam_a(e_i e_j) as a matrix; invertibility of this pairing is the freeness
/// certificate, and its rows/columns reappear in the antipode formulas.
LinearMap integral_pairing(const HopfPi& h, int a, const Vector& lam_a) {
  const int da = h.d(a);
  LinearMap p(h.field(), da, da);
  for (int r = 0; r < da; ++r) {
    if (lam_a[r].is_zero()) continue;
    for (int i = 0; i < da; ++i) {
      for (int j = 0; j < da; ++j) p.at(i, j) += lam_a[r] * h.m(a).at(r, i, j);
    }
  }
  return p;
}

GradedCovector scale_covector(const HopfPi& h, const GradedCovector& lam, const Scalar& c) {
  GradedCovector out = lam;
  for (int a = 0; a < h.n(); ++a) out[a] = c * lam[a];
  return out;
}

}  // namespace

// ---------------------------------------------------------------- helpers

LinearMap left_mul_map(const HopfPi& h, int a, const Vector& v) {
  return structure_left_mul(h.m(a), v);
}

LinearMap right_mul_map(const HopfPi& h, int a, const Vector& v) {
  return structure_right_mul(h.m(a), v);
}

LinearMap ss_map(const HopfPi& h, int a) { return h.S(h.inv(a)) * h.S(a); }

LinearMap hit_left_map(const HopfPi& h, int a, const Vector& f) {
  return kron(LinearMap::identity(h.field(), h.d(a)), LinearMap::row(f)) * h.cp(a, h.group().id);
}

LinearMap hit_right_map(const HopfPi& h, int a, const Vector& f) {
  return kron(LinearMap::row(f), LinearMap::identity(h.field(), h.d(a))) * h.cp(h.group().id, a);
}

Vector hit_left(const HopfPi& h, const Vector& f, int a, const Vector& x) {
  return apply(hit_left_map(h, a, f), x);
}

Vector hit_right(const HopfPi& h, int a, const Vector& x, const Vector& f) {
  return apply(hit_right_map(h, a, f), x);
}

// -------------------------------------------------------------- integrals

std::vector<GradedCovector> integral_space(const HopfPi& h, Side side) {
  const Field fld = h.field();
  const int n = h.n();
  int total = 0;
  std::vector<int> off = degree_offsets(h, total);

  // Rows: one per pair (a, b), basis vector x of H_{ab}, output coordinate.
  int rows = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int out_dim = side == Side::Left ? h.d(a) : h.d(b);
      rows += h.d(h.group().op(a, b)) * out_dim;
    }
  }
  LinearMap sys(fld, rows, total);
  int row = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = h.group().op(a, b);
      const int da = h.d(a);
      const int db = h.d(b);
      const LinearMap& cp = h.cp(a, b);
      for (int x = 0; x < h.d(ab); ++x) {
        if (side == Side::Left) {
          // sum_j D[(i,j),x] lam_b[j] - 1_a[i] lam_{ab}[x] = 0
          for (int i = 0; i < da; ++i) {
            for (int j = 0; j < db; ++j) sys.at(row, off[b] + j) += cp.at(i * db + j, x);
            sys.at(row, off[ab] + x) -= h.one(a)[i];
            ++row;
          }
        } else {
          // sum_i D[(i,j),x] lam_a[i] - 1_b[j] lam_{ab}[x] = 0
          for (int j = 0; j < db; ++j) {
            for (int i = 0; i < da; ++i) sys.at(row, off[a] + i) += cp.at(i * db + j, x);
            sys.at(row, off[ab] + x) -= h.one(b)[j];
            ++row;
          }
        }
      }
    }
  }
  std::vector<GradedCovector> out;
  for (const Vector& k : nullspace(sys)) {
    GradedCovector lam = zero_graded_covector(h);
    for (int a = 0; a < n; ++a) {
      for (int i = 0; i < h.d(a); ++i) lam[a][i] = k[off[a] + i];
    }
    out.push_back(std::move(lam));
  }
  return out;
}

std::optional<GradedCovector> pi_integral(const HopfPi& h, Side side) {
  auto space = integral_space(h, side);
  if (space.size() != 1) return std::nullopt;
  return space.front();
}

Report is_integral(const HopfPi& h, const GradedCovector& lam, Side side) {
  Report rep;
  for (int a = 0; a < h.n(); ++a) {
    for (int b = 0; b < h.n(); ++b) {
      const int ab = h.group().op(a, b);
      if (side == Side::Left) {
        LinearMap lhs = contract_right_leg(h, a, b, lam[b]);
        LinearMap rhs = LinearMap::column(h.one(a)) * LinearMap::row(lam[ab]);
        check_equal(rep, "integral.left", {a, b}, lhs, rhs);
      } else {
        LinearMap lhs = contract_left_leg(h, a, b, lam[a]);
        LinearMap rhs = LinearMap::column(h.one(b)) * LinearMap::row(lam[ab]);
        check_equal(rep, "integral.right", {a, b}, lhs, rhs);
      }
    }
  }
  rep.sort();
  return rep;
}

Report integral_nonzero_everywhere(const HopfPi& h, const GradedCovector& lam) {
  Report rep;
  for (int a = 0; a < h.n(); ++a) {
    if (h.d(a) == 0) continue;
    rep.add("integral.nonzero", {a}, !lam[a].is_zero(),
            "integral component vanishes on a nonzero degree", Severity::TheoremViolation);
  }
  rep.sort();
  return rep;
}

std::optional<Vector> h1_integral(const HopfPi& h, Side side) {
  const int e = h.group().id;
  const int d1 = h.d(e);
  const Field fld = h.field();
  // Left: x Lam = eps(x) Lam for all basis x; right: Lam x = eps(x) Lam.
  LinearMap sys(fld, d1 * d1, d1);
  for (int x = 0; x < d1; ++x) {
    const Scalar ex = h.co.counit[x];
    for (int i = 0; i < d1; ++i) {
      for (int k = 0; k < d1; ++k) {
        Scalar c = side == Side::Left ? h.m(e).at(i, x, k) : h.m(e).at(i, k, x);
        if (i == k) c -= ex;
        sys.at(x * d1 + i, k) = c;
      }
    }
  }
  auto ker = nullspace(sys);
  if (ker.size() != 1) return std::nullopt;
  return ker.front();
}

Report check_integral_freeness(const HopfPi& h, const GradedCovector& lam) {
  Report rep;
  for (int a = 0; a < h.n(); ++a) {
    if (h.d(a) == 0) continue;
    const bool ok = rank(integral_pairing(h, a, lam[a])) == h.d(a);
    rep.add("integral.freeness", {a}, ok, "pairing lam_a(e_i e_j) is singular",
            Severity::TheoremViolation);
  }
  rep.sort();
  return rep;
}

// --------------------------------------------------- distinguished elements

DistinguishedG distinguished_g(const HopfPi& h) {
  DistinguishedG res{zero_graded_vector(h), {}};
  auto lam = pi_integral(h, Side::Right);
  if (!lam) {
    res.rep.add_fail("distinguished.integral-dim", {},
                     "space of right integrals is not one-dimensional",
                     Severity::TheoremViolation);
    return res;
  }
  for (int a = 0; a < h.n(); ++a) {
    if (h.d(a) == 0) continue;
    // Extract g_a from any column where lam_{ab} is nonzero, then confirm
    // (id (x) lam_b) D_{a,b} = lam_{ab}(.) g_a across every b.
    bool found = false;
    for (int b = 0; b < h.n() && !found; ++b) {
      const int ab = h.group().op(a, b);
      for (int x = 0; x < h.d(ab); ++x) {
        if ((*lam)[ab][x].is_zero()) continue;
        LinearMap t = contract_right_leg(h, a, b, (*lam)[b]);
        Vector g(h.field(), h.d(a));
        const Scalar inv = (*lam)[ab][x].inverse();
        for (int i = 0; i < h.d(a); ++i) g[i] = inv * t.at(i, x);
        res.g[a] = std::move(g);
        found = true;
        break;
      }
    }
    res.rep.add("distinguished.extractable", {a}, found,
                "integral vanishes identically around this degree", Severity::TheoremViolation);
    if (!found) res.g[a] = h.one(a);
  }
  for (int a = 0; a < h.n(); ++a) {
    for (int b = 0; b < h.n(); ++b) {
      const int ab = h.group().op(a, b);
      LinearMap lhs = contract_right_leg(h, a, b, (*lam)[b]);
      LinearMap rhs = LinearMap::column(res.g[a]) * LinearMap::row((*lam)[ab]);
      check_equal(res.rep, "distinguished.consistent", {a, b}, lhs, rhs,
                  Severity::TheoremViolation);
    }
  }
  res.rep.merge(is_pi_grouplike(h, res.g, Severity::TheoremViolation));
  res.rep.sort();
  return res;
}

DistinguishedNu distinguished_nu(const HopfPi& h) {
  const int e = h.group().id;
  const int d1 = h.d(e);
  const Field fld = h.field();
  DistinguishedNu res{Vector(fld, d1), Vector(fld, d1), {}};
  auto lam_l = h1_integral(h, Side::Left);
  if (!lam_l || d1 == 0) {
    res.rep.add_fail("nu.integral-dim", {}, "left classical integral space is not a line",
                     Severity::TheoremViolation);
    return res;
  }
  int i0 = 0;
  while ((*lam_l)[i0].is_zero()) ++i0;
  const Scalar pivot_inv = (*lam_l)[i0].inverse();
  for (int x = 0; x < d1; ++x) {
    Vector w = h.mul(e, *lam_l, Vector::basis(fld, d1, x));
    res.nu[x] = pivot_inv * w[i0];
    check_equal(res.rep, "nu.defining", {x}, w, res.nu[x] * (*lam_l),
                Severity::TheoremViolation);
  }
  // nu is a unital algebra morphism (a consequence, verified exactly).
  check_equal(res.rep, "nu.multiplicative", {}, LinearMap::row(res.nu) * h.mult_map(e),
              kron(LinearMap::row(res.nu), LinearMap::row(res.nu)), Severity::TheoremViolation);
  check_equal(res.rep, "nu.unital", {}, dot(res.nu, h.one(e)), Scalar::one(fld),
              Severity::TheoremViolation);
  // Convolution inverse of nu in the dual of H_1, target algebra k.
  TargetAlgebra ground{Bilinear(fld, 1, 1, 1), Vector(fld, 1)};
  ground.mult.at(0, 0, 0) = Scalar::one(fld);
  ground.unit[0] = Scalar::one(fld);
  auto inv = conv_inverse(h.co, ground, ConvElement{e, LinearMap::row(res.nu)});
  if (inv.inverse) {
    for (int x = 0; x < d1; ++x) res.nu_inv[x] = inv.inverse->map.at(0, x);
    res.rep.add_ok("nu.invertible", {});
  } else {
    res.rep.add_fail("nu.invertible", {}, "nu has no convolution inverse",
                     Severity::TheoremViolation);
    return res;
  }
  // An algebra morphism's convolution inverse is its antipode composite.
  Vector nu_s(fld, d1);
  for (int x = 0; x < d1; ++x) {
    Scalar s = Scalar::zero(fld);
    for (int y = 0; y < d1; ++y) s += res.nu[y] * h.S(e).at(y, x);
    nu_s[x] = s;
  }
  check_equal(res.rep, "nu.inverse-vs-antipode", {}, res.nu_inv, nu_s,
              Severity::TheoremViolation);
  // Mirror role: x Lam_r = nu^{-1}(x) Lam_r for the right classical integral.
  if (auto lam_r = h1_integral(h, Side::Right)) {
    for (int x = 0; x < d1; ++x) {
      Vector w = h.mul(e, Vector::basis(fld, d1, x), *lam_r);
      check_equal(res.rep, "nu.right-integral", {x}, w, res.nu_inv[x] * (*lam_r),
                  Severity::TheoremViolation);
    }
  } else {
    res.rep.add_fail("nu.right-integral", {}, "right classical integral space is not a line",
                     Severity::TheoremViolation);
  }
  res.rep.sort();
  return res;
}

// ------------------------------------------------------- identity checkers

Report check_radford(const HopfPi& h) {
  Report rep;
  auto lam = pi_integral(h, Side::Right);
  DistinguishedG dg = distinguished_g(h);
  DistinguishedNu dn = distinguished_nu(h);
  rep.merge(dg.rep);
  rep.merge(dn.rep);
  if (!lam || !rep.pass()) {
    if (!lam) {
      rep.add_fail("radford.prerequisites", {}, "no unique right integral",
                   Severity::TheoremViolation);
    }
    rep.sort();
    return rep;
  }
  const Field fld = h.field();
  for (int a = 0; a < h.n(); ++a) {
    const int da = h.d(a);
    if (da == 0) continue;
    const LinearMap fl = flip(fld, da, da);
    const LinearMap lam_m = LinearMap::row((*lam)[a]) * h.mult_map(a);  // (x,y) -> lam(xy)
    const LinearMap id_a = LinearMap::identity(fld, da);
    const LinearMap ss = ss_map(h, a);

    // (a) lam(xy) = lam( SS(y <- nu) x )
    LinearMap a_side = lam_m * kron(ss * hit_right_map(h, a, dn.nu), id_a) * fl;
    check_equal(rep, "radford.a", {a}, lam_m, a_side, Severity::TheoremViolation);

    // (b) lam(xy) = lam( y SS(nu^{-1} -> g^{-1} x g) )
    auto g_inv = algebra_inverse(h.m(a), h.one(a), dg.g[a]);
    if (!g_inv) {
      rep.add_fail("radford.b", {a}, "distinguished grouplike is not invertible",
                   Severity::TheoremViolation);
    } else {
      LinearMap conj = left_mul_map(h, a, *g_inv) * right_mul_map(h, a, dg.g[a]);
      LinearMap b_inner = ss * hit_left_map(h, a, dn.nu_inv) * conj;
      LinearMap b_side = lam_m * kron(id_a, b_inner) * fl;
      check_equal(rep, "radford.b", {a}, lam_m, b_side, Severity::TheoremViolation);
    }

    // (c) lam_{a^{-1}}(S_a(x)) = lam_a(g_a x)
    check_equal(rep, "radford.c", {a}, LinearMap::row((*lam)[h.inv(a)]) * h.S(a),
                LinearMap::row((*lam)[a]) * left_mul_map(h, a, dg.g[a]),
                Severity::TheoremViolation);
  }
  rep.sort();
  return rep;
}

Report check_lemuni(const HopfPi& h) {
  Report rep;
  auto lam = pi_integral(h, Side::Right);
  auto lam_r1 = h1_integral(h, Side::Right);
  auto lam_l1 = h1_integral(h, Side::Left);
  const int e = h.group().id;
  if (!lam || !lam_r1 || !lam_l1) {
    rep.add_fail("lemuni.prerequisites", {}, "integral spaces are not one-dimensional",
                 Severity::TheoremViolation);
    rep.sort();
    return rep;
  }
  const Field fld = h.field();
  const Scalar cr = dot((*lam)[e], *lam_r1);  // lam_1(Lam_right)
  const Scalar cl = dot((*lam)[e], *lam_l1);  // lam_1(Lam_left)
  rep.add("lemuni.normalizable", {}, !cr.is_zero() && !cl.is_zero(),
          "lam_1 annihilates a classical integral", Severity::TheoremViolation);
  if (cr.is_zero() || cl.is_zero()) {
    rep.sort();
    return rep;
  }
  GradedCovector lam_a = scale_covector(h, *lam, cr.inverse());
  GradedCovector lam_b = scale_covector(h, *lam, cl.inverse());
  for (int a = 0; a < h.n(); ++a) {
    const int da = h.d(a);
    const int ai = h.inv(a);
    const int dai = h.d(ai);
    if (da == 0) continue;
    // (a)  S_a(e_k) = lam_a(Lam_(1,a) e_k) Lam_(2,a^{-1}) with Lam right.
    {
      Vector m1 = apply(h.cp(a, ai), *lam_r1);
      LinearMap p = integral_pairing(h, a, lam_a[a]);  // p(i,k) = lam(e_i e_k)
      LinearMap rhs(fld, dai, da);
      for (int x = 0; x < dai; ++x) {
        for (int k = 0; k < da; ++k) {
          Scalar s = Scalar::zero(fld);
          for (int i = 0; i < da; ++i) s += m1[i * dai + x] * p.at(i, k);
          rhs.at(x, k) = s;
        }
      }
      check_equal(rep, "lemuni.a", {a}, h.S(a), rhs, Severity::TheoremViolation);
    }
    // (b)  S_{a^{-1}}^{-1}(e_k) = lam_a(e_k Lam_(1,a)) Lam_(2,a^{-1}) with Lam left.
    {
      auto s_inv = inverse(h.S(ai));
      if (!s_inv) {
        rep.add_fail("lemuni.b", {a}, "antipode component is not invertible",
                     Severity::TheoremViolation);
        continue;
      }
      Vector m1 = apply(h.cp(a, ai), *lam_l1);
      LinearMap p = integral_pairing(h, a, lam_b[a]);
      LinearMap rhs(fld, dai, da);
      for (int x = 0; x < dai; ++x) {
        for (int k = 0; k < da; ++k) {
          Scalar s = Scalar::zero(fld);
          for (int i = 0; i < da; ++i) s += m1[i * dai + x] * p.at(k, i);
          rhs.at(x, k) = s;
        }
      }
      check_equal(rep, "lemuni.b", {a}, *s_inv, rhs, Severity::TheoremViolation);
    }
  }
  rep.sort();
  return rep;
}

Report check_lambda_coeff(const HopfPi& h) {
  Report rep;
  auto lam_l = h1_integral(h, Side::Left);
  DistinguishedG dg = distinguished_g(h);
  rep.merge(dg.rep);
  if (!lam_l) {
    rep.add_fail("lambda-coeff.prerequisites", {}, "no unique left classical integral",
                 Severity::TheoremViolation);
    rep.sort();
    return rep;
  }
  const Field fld = h.field();
  for (int a = 0; a < h.n(); ++a) {
    const int da = h.d(a);
    const int ai = h.inv(a);
    const int dai = h.d(ai);
    if (da == 0) continue;
    Vector lhs = apply(h.cp(a, ai), *lam_l);   // Lam_(1,a) (x) Lam_(2,a^{-1})
    Vector m2 = apply(h.cp(ai, a), *lam_l);    // Lam'_(1,a^{-1}) (x) Lam'_(2,a)
    // column y of c is SS(e_y) g_a.
    LinearMap c = right_mul_map(h, a, dg.g[a]) * ss_map(h, a);
    Vector rhs(fld, da * dai);
    for (int j = 0; j < dai; ++j) {
      for (int y = 0; y < da; ++y) {
        const Scalar& coeff = m2[j * da + y];
        if (coeff.is_zero()) continue;
        for (int i = 0; i < da; ++i) rhs[i * dai + j] += coeff * c.at(i, y);
      }
    }
    check_equal(rep, "lambda-coeff", {a}, lhs, rhs, Severity::TheoremViolation);
  }
  rep.sort();
  return rep;
}

Report check_s4_formula(const HopfPi& h) {
  Report rep;
  DistinguishedG dg = distinguished_g(h);
  DistinguishedNu dn = distinguished_nu(h);
  rep.merge(dg.rep);
  rep.merge(dn.rep);
  if (!rep.pass()) {
    rep.sort();
    return rep;
  }
  for (int a = 0; a < h.n(); ++a) {
    if (h.d(a) == 0) continue;
    auto g_inv = algebra_inverse(h.m(a), h.one(a), dg.g[a]);
    if (!g_inv) {
      rep.add_fail("s4", {a}, "distinguished grouplike is not invertible",
                   Severity::TheoremViolation);
      continue;
    }
    LinearMap lhs = matrix_power(ss_map(h, a), 2);
    LinearMap rhs = left_mul_map(h, a, dg.g[a]) * right_mul_map(h, a, *g_inv) *
                    hit_left_map(h, a, dn.nu) * hit_right_map(h, a, dn.nu_inv);
    check_equal(rep, "s4", {a}, lhs, rhs, Severity::TheoremViolation);
  }
  rep.sort();
  return rep;
}

Report check_antipode_order(const HopfPi& h) {
  Report rep;
  const int d1 = h.d(h.group().id);
  for (int a = 0; a < h.n(); ++a) {
    if (h.d(a) == 0) continue;
    const long long ord = element_order(h.group(), a);
    LinearMap pw = matrix_power(ss_map(h, a), 2 * ord * d1);
    check_equal(rep, "antipode-order.even", {a}, pw,
                LinearMap::identity(h.field(), h.d(a)), Severity::TheoremViolation);
    if (ord == 2) {
      LinearMap spw = matrix_power(h.S(a), 8LL * d1);
      check_equal(rep, "antipode-order.two", {a}, spw,
                  LinearMap::identity(h.field(), h.d(a)), Severity::TheoremViolation);
    }
  }
  rep.sort();
  return rep;
}

// ------------------------------------------------------------- classifiers

bool is_unimodular(const HopfPi& h) {
  DistinguishedNu dn = distinguished_nu(h);
  return dn.rep.pass() && dn.nu == h.co.counit;
}

bool is_semisimple(const HopfPi& h) {
  auto lam = h1_integral(h, Side::Left);
  return lam && !h.eps(*lam).is_zero();
}

bool is_cosemisimple(const HopfPi& h) {
  auto lam = pi_integral(h, Side::Right);
  return lam && !dot((*lam)[h.group().id], h.one(h.group().id)).is_zero();
}

}  // namespace hopfpi
