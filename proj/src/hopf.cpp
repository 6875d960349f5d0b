/// @file hopf.cpp
/// @brief Axiom verification and structural constructions for Hopf
///        group-coalgebras.

#include "hopfpi/hopf.hpp"

#include <sstream>
#include <stdexcept>

#include "hopfpi/checkutil.hpp"

namespace hopfpi {

namespace {

/// Degree offsets of the blocks of the packed direct sum.
std::vector<int> block_offsets(const std::vector<int>& dims) {
  std::vector<int> off(dims.size() + 1, 0);
  for (std::size_t a = 0; a < dims.size(); ++a) off[a + 1] = off[a] + dims[a];
  return off;
}

}  // namespace

void PiCoalgebra::check_shapes() const {
  const int n = group.n;
  if (static_cast<int>(dims.size()) != n) throw std::logic_error("coalgebra: dims size");
  if (static_cast<int>(comul.size()) != n * n) throw std::logic_error("coalgebra: comul size");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const LinearMap& m = cp(a, b);
      if (m.rows != d(a) * d(b) || m.cols != d(group.op(a, b))) {
        throw std::logic_error("coalgebra: comultiplication shape at (" + std::to_string(a) +
                               "," + std::to_string(b) + ")");
      }
      if (!(m.field == field)) throw std::logic_error("coalgebra: field mismatch");
    }
  }
  if (counit.dim() != d(group.id)) throw std::logic_error("coalgebra: counit dim");
}

void HopfPi::check_shapes() const {
  co.check_shapes();
  const int nn = n();
  if (static_cast<int>(mult.size()) != nn || static_cast<int>(unit.size()) != nn ||
      static_cast<int>(antipode.size()) != nn) {
    throw std::logic_error("hopf: family sizes");
  }
  for (int a = 0; a < nn; ++a) {
    if (m(a).out != d(a) || m(a).left != d(a) || m(a).right != d(a)) {
      throw std::logic_error("hopf: multiplication shape at " + std::to_string(a));
    }
    if (one(a).dim() != d(a)) throw std::logic_error("hopf: unit dim at " + std::to_string(a));
    if (S(a).rows != d(inv(a)) || S(a).cols != d(a)) {
      throw std::logic_error("hopf: antipode shape at " + std::to_string(a));
    }
  }
}

bool GradedCovector::is_zero() const {
  for (const auto& v : comp) {
    if (!v.is_zero()) return false;
  }
  return true;
}

GradedVector zero_graded_vector(const HopfPi& h) {
  GradedVector g;
  for (int a = 0; a < h.n(); ++a) g.comp.emplace_back(h.field(), h.d(a));
  return g;
}

GradedCovector zero_graded_covector(const HopfPi& h) {
  GradedCovector g;
  for (int a = 0; a < h.n(); ++a) g.comp.emplace_back(h.field(), h.d(a));
  return g;
}

Report verify_coalgebra(const PiCoalgebra& c) {
  c.check_shapes();
  Report rep;
  const int n = c.group.n;
  const Field f = c.field;
  // Coassociativity: (D_{a,b} (x) id) D_{ab,c} = (id (x) D_{b,c}) D_{a,bc}.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int cc = 0; cc < n; ++cc) {
        const LinearMap lhs = kron(c.cp(a, b), LinearMap::identity(f, c.d(cc))) *
                              c.cp(c.group.op(a, b), cc);
        const LinearMap rhs = kron(LinearMap::identity(f, c.d(a)), c.cp(b, cc)) *
                              c.cp(a, c.group.op(b, cc));
        check_equal(rep, "coalg.coassoc", {a, b, cc}, lhs, rhs);
      }
    }
  }
  // Counit: (id (x) eps) D_{a,1} = id = (eps (x) id) D_{1,a}.
  const LinearMap eps_row = LinearMap::row(c.counit);
  for (int a = 0; a < n; ++a) {
    const LinearMap id_a = LinearMap::identity(f, c.d(a));
    const LinearMap left = kron(id_a, eps_row) * c.cp(a, c.group.id);
    const LinearMap right = kron(eps_row, id_a) * c.cp(c.group.id, a);
    check_equal(rep, "coalg.counit", {a}, left, id_a);
    check_equal(rep, "coalg.counit", {a, -1}, right, id_a);
  }
  return rep;
}

Report verify_hopf(const HopfPi& h) {
  h.check_shapes();
  Report rep = verify_coalgebra(h.co);
  const int n = h.n();
  const Field f = h.field();
  const int one_idx = h.group().id;

  for (int a = 0; a < n; ++a) {
    const int da = h.d(a);
    const LinearMap id_a = LinearMap::identity(f, da);
    const LinearMap mm = h.mult_map(a);
    // Associativity: m(m (x) id) = m(id (x) m) on k^{d^3}.
    check_equal(rep, "alg.assoc", {a}, mm * kron(mm, id_a), mm * kron(id_a, mm));
    // Unitality: multiplying by the unit on either side is the identity.
    const LinearMap unit_col = LinearMap::column(h.one(a));
    check_equal(rep, "alg.unit", {a}, mm * kron(unit_col, id_a), id_a);
    check_equal(rep, "alg.unit", {a, -1}, mm * kron(id_a, unit_col), id_a);
  }

  // The counit is an algebra map: eps(xy) = eps(x)eps(y), eps(1) = 1.
  const LinearMap eps_row = LinearMap::row(h.co.counit);
  check_equal(rep, "hopf.homo.counit", {}, eps_row * h.mult_map(one_idx),
              kron(eps_row, eps_row));
  if (h.d(one_idx) > 0) {
    check_equal(rep, "hopf.homo.counit-unit", {}, h.eps(h.one(one_idx)), Scalar::one(f));
  }

  // Every comultiplication is an algebra map:
  // D_{a,b} m_{ab} = (m_a (x) m_b) (id (x) flip (x) id) (D_{a,b} (x) D_{a,b})
  // and D_{a,b}(1_{ab}) = 1_a (x) 1_b.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = h.group().op(a, b);
      const LinearMap lhs = h.cp(a, b) * h.mult_map(ab);
      const LinearMap tensor_mult = bilinear_as_map(bilinear_tensor(h.m(a), h.m(b)));
      const LinearMap rhs = tensor_mult * kron(h.cp(a, b), h.cp(a, b));
      check_equal(rep, "hopf.homo.comul", {a, b}, lhs, rhs);
      check_equal(rep, "hopf.homo.comul-unit", {a, b}, apply(h.cp(a, b), h.one(ab)),
                  tensor(h.one(a), h.one(b)));
    }
  }

  // Antipode law.
  for (int a = 0; a < n; ++a) {
    const int ai = h.inv(a);
    const LinearMap id_a = LinearMap::identity(f, h.d(a));
    const LinearMap lhs1 = h.mult_map(a) * kron(h.S(ai), id_a) * h.cp(ai, a);
    const LinearMap lhs2 = h.mult_map(a) * kron(id_a, h.S(ai)) * h.cp(a, ai);
    const LinearMap rhs = LinearMap::column(h.one(a)) * eps_row;
    check_equal(rep, "hopf.antipode", {a}, lhs1, rhs);
    check_equal(rep, "hopf.antipode", {a, -1}, lhs2, rhs);
  }
  return rep;
}

Report check_antipode_properties(const HopfPi& h) {
  Report rep;
  const int n = h.n();
  const Field f = h.field();
  for (int a = 0; a < n; ++a) {
    const int ai = h.inv(a);
    const int da = h.d(a);
    // S_a(xy) = S_a(y) S_a(x).
    const LinearMap lhs = h.S(a) * h.mult_map(a);
    const LinearMap rhs = h.mult_map(ai) * kron(h.S(a), h.S(a)) * flip(f, da, da);
    check_equal(rep, "antipode.antimult", {a}, lhs, rhs, Severity::TheoremViolation);
    // S_a(1_a) = 1_{a^{-1}}.
    check_equal(rep, "antipode.unit", {a}, apply(h.S(a), h.one(a)), h.one(ai),
                Severity::TheoremViolation);
  }
  // D_{b^{-1},a^{-1}} S_{ab} = flip (S_a (x) S_b) D_{a,b}.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = h.group().op(a, b);
      const LinearMap lhs = h.cp(h.inv(b), h.inv(a)) * h.S(ab);
      const LinearMap rhs =
          flip(f, h.d(h.inv(a)), h.d(h.inv(b))) * kron(h.S(a), h.S(b)) * h.cp(a, b);
      check_equal(rep, "antipode.anticomul", {a, b}, lhs, rhs, Severity::TheoremViolation);
    }
  }
  // eps S_1 = eps.
  const LinearMap eps_row = LinearMap::row(h.co.counit);
  check_equal(rep, "antipode.counit", {}, eps_row * h.S(h.group().id), eps_row,
              Severity::TheoremViolation);
  return rep;
}

std::set<int> support_subgroup(const HopfPi& h, Report& rep) {
  std::set<int> supp;
  for (int a = 0; a < h.n(); ++a) {
    if (h.d(a) > 0) supp.insert(a);
  }
  if (supp.empty()) return supp;
  rep.add("support.unit", {}, supp.count(h.group().id) > 0,
          "unit component is zero while the family is nonzero");
  for (int a : supp) {
    rep.add("support.inverse", {a}, supp.count(h.inv(a)) > 0,
            "inverse degree has a zero component");
    for (int b : supp) {
      rep.add("support.closed", {a, b}, supp.count(h.group().op(a, b)) > 0,
              "product degree has a zero component");
    }
  }
  return supp;
}

HopfPi opposite(const HopfPi& h) {
  HopfPi r = h;
  for (int a = 0; a < h.n(); ++a) {
    r.mult[static_cast<std::size_t>(a)] = bilinear_opposite(h.m(a));
    auto sinv = inverse(h.S(h.inv(a)));
    if (!sinv) throw std::domain_error("opposite: antipode is not bijective");
    r.antipode[static_cast<std::size_t>(a)] = *sinv;
  }
  return r;
}

HopfPi coopposite(const HopfPi& h) {
  const int n = h.n();
  const Field f = h.field();
  HopfPi r = h;
  for (int a = 0; a < n; ++a) {
    const int ai = h.inv(a);
    r.co.dims[static_cast<std::size_t>(a)] = h.d(ai);
    r.mult[static_cast<std::size_t>(a)] = h.m(ai);
    r.unit[static_cast<std::size_t>(a)] = h.one(ai);
    // S^cop_a = S_a^{-1}: H_{a^{-1}} -> H_a.
    auto sinv = inverse(h.S(a));
    if (!sinv) throw std::domain_error("coopposite: antipode is not bijective");
    r.antipode[static_cast<std::size_t>(a)] = *sinv;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      // D^cop_{a,b} = flip . D_{b^{-1},a^{-1}} : H_{(ab)^{-1}} -> H_{a^{-1}} (x) H_{b^{-1}}.
      r.co.cp(a, b) = flip(f, h.d(h.inv(b)), h.d(h.inv(a))) * h.cp(h.inv(b), h.inv(a));
    }
  }
  return r;
}

HopfPi op_cop(const HopfPi& h) {
  const int n = h.n();
  const Field f = h.field();
  HopfPi r = h;
  for (int a = 0; a < n; ++a) {
    const int ai = h.inv(a);
    r.co.dims[static_cast<std::size_t>(a)] = h.d(ai);
    r.mult[static_cast<std::size_t>(a)] = bilinear_opposite(h.m(ai));
    r.unit[static_cast<std::size_t>(a)] = h.one(ai);
    // S^{op,cop}_a = S_{a^{-1}} : H_{a^{-1}} -> H_a; no bijectivity needed.
    r.antipode[static_cast<std::size_t>(a)] = h.S(ai);
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      r.co.cp(a, b) = flip(f, h.d(h.inv(b)), h.d(h.inv(a))) * h.cp(h.inv(b), h.inv(a));
    }
  }
  return r;
}

HopfPi pack_finite(const HopfPi& h) {
  const int n = h.n();
  const Field f = h.field();
  const std::vector<int> off = block_offsets(h.co.dims);
  const int N = off[static_cast<std::size_t>(n)];

  HopfPi r;
  r.co.field = f;
  r.co.group = trivial_group();
  r.co.dims = {N};
  r.co.counit = Vector(f, N);

  Bilinear mult(f, N, N, N);
  Vector unit(f, N);
  LinearMap anti(f, N, N);
  LinearMap comul(f, N * N, N);

  for (int a = 0; a < n; ++a) {
    const int da = h.d(a);
    // Block multiplication; products across distinct degrees vanish.
    for (int i = 0; i < da; ++i) {
      for (int j = 0; j < da; ++j) {
        for (int k = 0; k < da; ++k) {
          mult.at(off[a] + i, off[a] + j, off[a] + k) = h.m(a).at(i, j, k);
        }
      }
    }
    for (int i = 0; i < da; ++i) unit[off[a] + i] = h.one(a)[i];
    const int ai = h.inv(a);
    for (int x = 0; x < h.d(ai); ++x) {
      for (int j = 0; j < da; ++j) anti.at(off[ai] + x, off[a] + j) = h.S(a).at(x, j);
    }
    // Coproduct of a degree-a element: sum over all factorizations bc = a.
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (h.group().op(b, c) != a) continue;
        const LinearMap& m = h.cp(b, c);
        for (int y = 0; y < da; ++y) {
          for (int i = 0; i < h.d(b); ++i) {
            for (int j = 0; j < h.d(c); ++j) {
              comul.at((off[b] + i) * N + off[c] + j, off[a] + y) += m.at(i * h.d(c) + j, y);
            }
          }
        }
      }
    }
  }
  const int one_idx = h.group().id;
  for (int i = 0; i < h.d(one_idx); ++i) r.co.counit[off[one_idx] + i] = h.co.counit[i];
  r.co.comul = {comul};
  r.mult = {mult};
  r.unit = {unit};
  r.antipode = {anti};
  return r;
}

std::variant<HopfPi, std::string> unpack_graded(const HopfPi& packed, const FiniteGroup& g,
                                                const std::vector<std::vector<int>>& grading,
                                                Report& rep) {
  if (packed.n() != 1) return std::string("unpack: input must be trivially graded");
  const Field f = packed.field();
  const int N = packed.d(0);
  if (static_cast<int>(grading.size()) != g.n) return std::string("unpack: grading size");
  std::vector<int> degree_of(static_cast<std::size_t>(N), -1);
  for (int a = 0; a < g.n; ++a) {
    for (int idx : grading[static_cast<std::size_t>(a)]) {
      if (idx < 0 || idx >= N || degree_of[static_cast<std::size_t>(idx)] != -1) {
        return std::string("unpack: grading is not a partition of the basis");
      }
      degree_of[static_cast<std::size_t>(idx)] = a;
    }
  }
  for (int v : degree_of) {
    if (v < 0) return std::string("unpack: grading is not a partition of the basis");
  }

  // Projections p_a and inclusions i_a for each degree block.
  std::vector<LinearMap> proj, incl;
  std::vector<int> dims;
  for (int a = 0; a < g.n; ++a) {
    const auto& basis = grading[static_cast<std::size_t>(a)];
    const int da = static_cast<int>(basis.size());
    dims.push_back(da);
    LinearMap p(f, da, N), inc(f, N, da);
    for (int i = 0; i < da; ++i) {
      p.at(i, basis[static_cast<std::size_t>(i)]) = Scalar::one(f);
      inc.at(basis[static_cast<std::size_t>(i)], i) = Scalar::one(f);
    }
    proj.push_back(std::move(p));
    incl.push_back(std::move(inc));
  }

  const LinearMap& comul = packed.cp(0, 0);
  const LinearMap mm = packed.mult_map(0);

  // Grading validity: the coproduct of a degree-a element must live in the
  // sum of the blocks C_b (x) C_c with bc = a; reconstruct and compare.
  bool violated = false;
  for (int a = 0; a < g.n; ++a) {
    const LinearMap restricted = comul * incl[static_cast<std::size_t>(a)];
    LinearMap recon(f, N * N, dims[static_cast<std::size_t>(a)]);
    for (int b = 0; b < g.n; ++b) {
      for (int c = 0; c < g.n; ++c) {
        if (g.op(b, c) != a) continue;
        recon = recon + kron(incl[static_cast<std::size_t>(b)], incl[static_cast<std::size_t>(c)]) *
                            kron(proj[static_cast<std::size_t>(b)], proj[static_cast<std::size_t>(c)]) *
                            restricted;
      }
    }
    const std::size_t before = rep.items.size();
    check_equal(rep, "grading.comul", {a}, restricted, recon);
    violated |= !rep.items[before].ok;
    // Counit must vanish outside the unit degree.
    if (a != g.id) {
      const LinearMap er = LinearMap::row(packed.co.counit) * incl[static_cast<std::size_t>(a)];
      const std::size_t b2 = rep.items.size();
      check_equal(rep, "grading.counit", {a}, er, LinearMap::zero(f, 1, dims[static_cast<std::size_t>(a)]));
      violated |= !rep.items[b2].ok;
    }
    // Antipode must send degree a into degree a^{-1}; products must stay in
    // degree and vanish across degrees.
    const int ai = g.invof(a);
    const LinearMap s_restricted = packed.S(0) * incl[static_cast<std::size_t>(a)];
    const std::size_t b3 = rep.items.size();
    check_equal(rep, "grading.antipode", {a},
                incl[static_cast<std::size_t>(ai)] * proj[static_cast<std::size_t>(ai)] * s_restricted,
                s_restricted);
    violated |= !rep.items[b3].ok;
    for (int b = 0; b < g.n; ++b) {
      const LinearMap prod = mm * kron(incl[static_cast<std::size_t>(a)], incl[static_cast<std::size_t>(b)]);
      const std::size_t b4 = rep.items.size();
      if (a == b) {
        check_equal(rep, "grading.mult", {a, b},
                    incl[static_cast<std::size_t>(a)] * proj[static_cast<std::size_t>(a)] * prod, prod);
      } else {
        check_equal(rep, "grading.mult", {a, b}, prod,
                    LinearMap::zero(f, N, dims[static_cast<std::size_t>(a)] * dims[static_cast<std::size_t>(b)]));
      }
      violated |= !rep.items[b4].ok;
    }
  }
  if (violated) return std::string("unpack: grading violation (see report)");

  HopfPi r;
  r.co.field = f;
  r.co.group = g;
  r.co.dims = dims;
  r.co.counit = apply(proj[static_cast<std::size_t>(g.id)], packed.co.counit);
  for (int a = 0; a < g.n; ++a) {
    for (int b = 0; b < g.n; ++b) {
      r.co.comul.push_back(kron(proj[static_cast<std::size_t>(a)], proj[static_cast<std::size_t>(b)]) * comul *
                           incl[static_cast<std::size_t>(g.op(a, b))]);
    }
  }
  for (int a = 0; a < g.n; ++a) {
    const int da = dims[static_cast<std::size_t>(a)];
    const LinearMap block =
        proj[static_cast<std::size_t>(a)] * mm *
        kron(incl[static_cast<std::size_t>(a)], incl[static_cast<std::size_t>(a)]);
    Bilinear ma(f, da, da, da);
    for (int i = 0; i < da; ++i) {
      for (int j = 0; j < da; ++j) {
        for (int k = 0; k < da; ++k) ma.at(i, j, k) = block.at(i, j * da + k);
      }
    }
    r.mult.push_back(std::move(ma));
    r.unit.push_back(apply(proj[static_cast<std::size_t>(a)], packed.one(0)));
    r.antipode.push_back(proj[static_cast<std::size_t>(g.invof(a))] * packed.S(0) *
                         incl[static_cast<std::size_t>(a)]);
  }
  return r;
}

HopfPi dual_hopf(const HopfPi& h) {
  const int n = h.n();
  const Field f = h.field();
  const std::vector<int> off = block_offsets(h.co.dims);
  const int N = off[static_cast<std::size_t>(n)];
  const int one_idx = h.group().id;

  HopfPi r;
  r.co.field = f;
  r.co.group = trivial_group();
  r.co.dims = {N};

  // Product on the dual = convolution: the structure constants of the
  // product of dual-basis forms are the comultiplication entries.
  Bilinear mult(f, N, N, N);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = h.group().op(a, b);
      const LinearMap& m = h.cp(a, b);
      for (int j = 0; j < h.d(a); ++j) {
        for (int k = 0; k < h.d(b); ++k) {
          for (int z = 0; z < h.d(ab); ++z) {
            mult.at(off[ab] + z, off[a] + j, off[b] + k) = m.at(j * h.d(b) + k, z);
          }
        }
      }
    }
  }
  // Unit of the dual = the counit, a form on the unit-degree component.
  Vector unit(f, N);
  for (int i = 0; i < h.d(one_idx); ++i) unit[off[one_idx] + i] = h.co.counit[i];
  // Coproduct dualizes the component multiplications (blockwise).
  LinearMap comul(f, N * N, N);
  for (int a = 0; a < n; ++a) {
    const int da = h.d(a);
    for (int i = 0; i < da; ++i) {
      for (int j = 0; j < da; ++j) {
        for (int k = 0; k < da; ++k) {
          comul.at((off[a] + j) * N + off[a] + k, off[a] + i) = h.m(a).at(i, j, k);
        }
      }
    }
  }
  // Counit of the dual evaluates at the component unit.
  Vector counit(f, N);
  for (int a = 0; a < n; ++a) {
    for (int i = 0; i < h.d(a); ++i) counit[off[a] + i] = h.one(a)[i];
  }
  // Antipode: a form of degree a is pulled back along S_{a^{-1}}.
  LinearMap anti(f, N, N);
  for (int a = 0; a < n; ++a) {
    const int ai = h.inv(a);
    const LinearMap& s = h.S(ai);  // shape d_a x d_{a^{-1}}
    for (int i = 0; i < h.d(a); ++i) {
      for (int x = 0; x < h.d(ai); ++x) anti.at(off[ai] + x, off[a] + i) = s.at(i, x);
    }
  }

  r.co.dims = {N};
  r.co.comul = {comul};
  r.co.counit = counit;
  r.mult = {mult};
  r.unit = {unit};
  r.antipode = {anti};
  return r;
}

Report is_pi_grouplike(const HopfPi& h, const GradedVector& g, Severity sev) {
  Report rep;
  for (int a = 0; a < h.n(); ++a) {
    for (int b = 0; b < h.n(); ++b) {
      const int ab = h.group().op(a, b);
      check_equal(rep, "grouplike.comul", {a, b}, apply(h.cp(a, b), g[ab]),
                  tensor(g[a], g[b]), sev);
    }
  }
  if (h.d(h.group().id) > 0) {
    check_equal(rep, "grouplike.counit", {}, h.eps(g[h.group().id]), Scalar::one(h.field()),
                sev);
  }
  return rep;
}

GradedVector grouplike_inverse(const HopfPi& h, const GradedVector& g) {
  GradedVector r = zero_graded_vector(h);
  for (int a = 0; a < h.n(); ++a) {
    const int ai = h.inv(a);
    r[a] = apply(h.S(ai), g[ai]);
  }
  return r;
}

}  // namespace hopfpi
