/// @file instances.cpp
/// @brief Builders for the example zoo.

#include "hopfpi/instances.hpp"

#include <stdexcept>

namespace hopfpi {

Instance trivial_instance(const FiniteGroup& g, Field f) {
  const int n = g.n;
  Instance inst;
  inst.name = "trivial";
  HopfPi h;
  h.co.field = f;
  h.co.group = g;
  h.co.dims.assign(static_cast<std::size_t>(n), 1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) h.co.comul.push_back(LinearMap::identity(f, 1));
  }
  h.co.counit = Vector(f, 1);
  h.co.counit[0] = Scalar::one(f);
  for (int a = 0; a < n; ++a) {
    Bilinear m(f, 1, 1, 1);
    m.at(0, 0, 0) = Scalar::one(f);
    h.mult.push_back(std::move(m));
    Vector u(f, 1);
    u[0] = Scalar::one(f);
    h.unit.push_back(std::move(u));
    h.antipode.push_back(LinearMap::identity(f, 1));
  }
  inst.h = std::move(h);
  inst.crossing = trivial_crossing(inst.h);
  Vector one2(f, 1);
  one2[0] = Scalar::one(f);
  inst.rmatrix = constant_rmatrix(inst.h, tensor(one2, one2));
  inst.twist = constant_element(inst.h, one2);
  return inst;
}

HopfPi sweedler(Field f) {
  if (f.characteristic == 2) throw std::domain_error("sweedler: characteristic 2 not allowed");
  // Basis order: 1, g, x, gx.
  HopfPi h;
  h.co.field = f;
  h.co.group = trivial_group();
  h.co.dims = {4};
  const Scalar one = Scalar::one(f);
  Bilinear m(f, 4, 4, 4);
  for (int k = 0; k < 4; ++k) m.at(k, 0, k) = one;  // 1 . y = y
  m.at(1, 1, 0) = one;                              // g . 1 = g
  m.at(0, 1, 1) = one;                              // g . g = 1
  m.at(3, 1, 2) = one;                              // g . x = gx
  m.at(2, 1, 3) = one;                              // g . gx = x
  m.at(2, 2, 0) = one;                              // x . 1 = x
  m.at(3, 2, 1) = -one;                             // x . g = -gx
  m.at(3, 3, 0) = one;                              // gx . 1 = gx
  m.at(2, 3, 1) = -one;                             // gx . g = -x
  h.mult.push_back(std::move(m));
  Vector u(f, 4);
  u[0] = one;
  h.unit.push_back(std::move(u));
  LinearMap cp(f, 16, 4);
  cp.at(0 * 4 + 0, 0) = one;   // D(1) = 1 (x) 1
  cp.at(1 * 4 + 1, 1) = one;   // D(g) = g (x) g
  cp.at(2 * 4 + 0, 2) = one;   // D(x) = x (x) 1 + g (x) x
  cp.at(1 * 4 + 2, 2) = one;
  cp.at(3 * 4 + 1, 3) = one;   // D(gx) = gx (x) g + 1 (x) gx
  cp.at(0 * 4 + 3, 3) = one;
  h.co.comul.push_back(std::move(cp));
  h.co.counit = Vector(f, 4);
  h.co.counit[0] = one;
  h.co.counit[1] = one;
  LinearMap s(f, 4, 4);
  s.at(0, 0) = one;
  s.at(1, 1) = one;
  s.at(3, 2) = -one;  // S(x) = -gx
  s.at(2, 3) = one;   // S(gx) = x
  h.antipode.push_back(std::move(s));
  return h;
}

HopfPi group_algebra(const FiniteGroup& g, Field f) {
  const int n = g.n;
  HopfPi h;
  h.co.field = f;
  h.co.group = trivial_group();
  h.co.dims = {n};
  const Scalar one = Scalar::one(f);
  Bilinear m(f, n, n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) m.at(g.op(j, k), j, k) = one;
  }
  h.mult.push_back(std::move(m));
  h.unit.push_back(Vector::basis(f, n, g.id));
  LinearMap cp(f, n * n, n);
  for (int j = 0; j < n; ++j) cp.at(j * n + j, j) = one;
  h.co.comul.push_back(std::move(cp));
  h.co.counit = Vector(f, n);
  for (int j = 0; j < n; ++j) h.co.counit[j] = one;
  LinearMap s(f, n, n);
  for (int j = 0; j < n; ++j) s.at(g.invof(j), j) = one;
  h.antipode.push_back(std::move(s));
  return h;
}

HopfPi function_algebra(const FiniteGroup& g, Field f) {
  const int n = g.n;
  HopfPi h;
  h.co.field = f;
  h.co.group = trivial_group();
  h.co.dims = {n};
  const Scalar one = Scalar::one(f);
  Bilinear m(f, n, n, n);
  for (int j = 0; j < n; ++j) m.at(j, j, j) = one;  // delta functions multiply pointwise
  h.mult.push_back(std::move(m));
  Vector u(f, n);
  for (int j = 0; j < n; ++j) u[j] = one;
  h.unit.push_back(std::move(u));
  LinearMap cp(f, n * n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) cp.at(a * n + b, g.op(a, b)) = one;
  }
  h.co.comul.push_back(std::move(cp));
  h.co.counit = Vector::basis(f, n, g.id);
  LinearMap s(f, n, n);
  for (int j = 0; j < n; ++j) s.at(g.invof(j), j) = one;
  h.antipode.push_back(std::move(s));
  return h;
}

Instance constant_family(std::string name, const HopfPi& a, const FiniteGroup& pi,
                         const std::vector<LinearMap>& action) {
  if (a.n() != 1) throw std::domain_error("constant_family: base must live over the trivial group");
  const Field f = a.field();
  const int d = a.d(0);
  std::vector<LinearMap> act = action;
  if (act.empty()) act.assign(static_cast<std::size_t>(pi.n), LinearMap::identity(f, d));
  if (static_cast<int>(act.size()) != pi.n) {
    throw std::domain_error("constant_family: one action value per group element required");
  }
  // Each action value must be a Hopf automorphism of the base.
  for (const LinearMap& t : act) {
    if (t.rows != d || t.cols != d || rank(t) != d) {
      throw std::domain_error("constant_family: action value is not bijective");
    }
    if (!(t * a.mult_map(0) == a.mult_map(0) * kron(t, t)) || !(apply(t, a.one(0)) == a.one(0))) {
      throw std::domain_error("constant_family: action value is not an algebra automorphism");
    }
    if (!(kron(t, t) * a.cp(0, 0) == a.cp(0, 0) * t) ||
        !(LinearMap::row(a.co.counit) * t == LinearMap::row(a.co.counit))) {
      throw std::domain_error("constant_family: action value is not a coalgebra automorphism");
    }
  }
  for (int b = 0; b < pi.n; ++b) {
    for (int b2 = 0; b2 < pi.n; ++b2) {
      if (!(act[static_cast<std::size_t>(pi.op(b, b2))] ==
            act[static_cast<std::size_t>(b)] * act[static_cast<std::size_t>(b2)])) {
        throw std::domain_error("constant_family: action is not a group homomorphism");
      }
    }
  }
  Instance inst;
  inst.name = std::move(name);
  HopfPi h;
  h.co.field = f;
  h.co.group = pi;
  h.co.dims.assign(static_cast<std::size_t>(pi.n), d);
  for (int x = 0; x < pi.n; ++x) {
    for (int y = 0; y < pi.n; ++y) h.co.comul.push_back(a.cp(0, 0));
  }
  h.co.counit = a.co.counit;
  for (int x = 0; x < pi.n; ++x) {
    h.mult.push_back(a.m(0));
    h.unit.push_back(a.one(0));
    h.antipode.push_back(a.S(0));
  }
  inst.h = std::move(h);
  Crossing cx;
  cx.stride = pi.n;
  for (int b = 0; b < pi.n; ++b) {
    for (int x = 0; x < pi.n; ++x) cx.maps.push_back(act[static_cast<std::size_t>(b)]);
  }
  inst.crossing = std::move(cx);
  return inst;
}

LinearMap inversion_automorphism(const FiniteGroup& g, Field f) {
  LinearMap t(f, g.n, g.n);
  for (int j = 0; j < g.n; ++j) t.at(g.invof(j), j) = Scalar::one(f);
  return t;
}

Vector sweedler_R(const Scalar& t) {
  const Field f = t.field();
  if (f.characteristic == 2) throw std::domain_error("sweedler_R: characteristic 2 not allowed");
  const Scalar half = Scalar::frac(1, 2, f);
  const Scalar th = t * half;
  Vector r(f, 16);
  r[0 * 4 + 0] = half;   // 1 (x) 1
  r[0 * 4 + 1] = half;   // 1 (x) g
  r[1 * 4 + 0] = half;   // g (x) 1
  r[1 * 4 + 1] = -half;  // g (x) g
  r[2 * 4 + 2] = th;     // x (x) x
  r[2 * 4 + 3] = -th;    // x (x) gx
  r[3 * 4 + 3] = th;     // gx (x) gx
  r[3 * 4 + 2] = th;     // gx (x) x
  return r;
}

RMatrixFamily constant_rmatrix(const HopfPi& h, const Vector& r) {
  RMatrixFamily out;
  out.stride = h.n();
  for (int a = 0; a < h.n(); ++a) {
    for (int b = 0; b < h.n(); ++b) {
      if (r.dim() != h.d(a) * h.d(b)) {
        throw std::domain_error("constant_rmatrix: component dimensions are not constant");
      }
      out.comp.push_back(r);
    }
  }
  return out;
}

GradedVector constant_element(const HopfPi& h, const Vector& v) {
  GradedVector out = zero_graded_vector(h);
  for (int a = 0; a < h.n(); ++a) {
    if (v.dim() != h.d(a)) {
      throw std::domain_error("constant_element: component dimensions are not constant");
    }
    out[a] = v;
  }
  return out;
}

Instance proper_support_instance(Field f) {
  Instance inst;
  inst.name = "proper-support";
  HopfPi h;
  h.co.field = f;
  h.co.group = cyclic_group(2);
  h.co.dims = {1, 0};
  const Scalar one = Scalar::one(f);
  // Only the (0,0) comultiplication carries data; everything touching the
  // zero component is an empty matrix of the right shape.
  h.co.comul.push_back(LinearMap::identity(f, 1));  // (0,0): 1x1
  h.co.comul.push_back(LinearMap::zero(f, 0, 0));   // (0,1)
  h.co.comul.push_back(LinearMap::zero(f, 0, 0));   // (1,0)
  h.co.comul.push_back(LinearMap::zero(f, 0, 1));   // (1,1): source is H_0
  h.co.counit = Vector(f, 1);
  h.co.counit[0] = one;
  Bilinear m0(f, 1, 1, 1);
  m0.at(0, 0, 0) = one;
  h.mult.push_back(std::move(m0));
  h.mult.push_back(Bilinear(f, 0, 0, 0));
  Vector u(f, 1);
  u[0] = one;
  h.unit.push_back(std::move(u));
  h.unit.push_back(Vector(f, 0));
  h.antipode.push_back(LinearMap::identity(f, 1));
  h.antipode.push_back(LinearMap::zero(f, 0, 0));
  inst.h = std::move(h);
  inst.crossing = trivial_crossing(inst.h);
  return inst;
}

}  // namespace hopfpi
