/// @file convolution.cpp
/// @brief Convolution products and inverses as exact linear algebra.

#include "hopfpi/convolution.hpp"

#include <stdexcept>

namespace hopfpi {

TargetAlgebra component_algebra(const HopfPi& h, int a) { return {h.m(a), h.one(a)}; }

TargetAlgebra pair_algebra(const HopfPi& h, int a, int b) {
  return {bilinear_tensor(h.m(a), h.m(b)), tensor(h.one(a), h.one(b))};
}

TargetAlgebra triple_algebra(const HopfPi& h, int a, int b, int c) {
  return {bilinear_tensor(bilinear_tensor(h.m(a), h.m(b)), h.m(c)),
          tensor(tensor(h.one(a), h.one(b)), h.one(c))};
}

ConvElement conv_unit(const PiCoalgebra& c, const TargetAlgebra& a) {
  return {c.group.id, LinearMap::column(a.unit) * LinearMap::row(c.counit)};
}

ConvElement conv_product(const PiCoalgebra& c, const TargetAlgebra& a, const ConvElement& f,
                         const ConvElement& g) {
  if (f.map.rows != a.dim() || g.map.rows != a.dim()) {
    throw std::logic_error("conv_product: target mismatch");
  }
  const int ab = c.group.op(f.source, g.source);
  return {ab, bilinear_as_map(a.mult) * kron(f.map, g.map) * c.cp(f.source, g.source)};
}

ConvInverseResult conv_inverse(const PiCoalgebra& c, const TargetAlgebra& a,
                               const ConvElement& f) {
  const int alpha = f.source;
  const int ai = c.group.invof(alpha);
  const int na = a.dim();
  const int dai = c.d(ai);
  const int d1 = c.d(c.group.id);
  const Field fld = c.field;

  // Unknown X: k^{d_{a^{-1}}} -> A, vectorized as X[q, v] -> q*dai + v.
  // Right equation m_A (f (x) X) D_{a,a^{-1}} = eps(.) 1_A, and left equation
  // m_A (X (x) f) D_{a^{-1},a} = eps(.) 1_A, both linear in X.
  const int unknowns = na * dai;
  const int rows_each = na * d1;
  LinearMap right_sys(fld, rows_each, unknowns);
  LinearMap left_sys(fld, rows_each, unknowns);
  const LinearMap& cp_r = c.cp(alpha, ai);  // (d_a * dai) x d1
  const LinearMap& cp_l = c.cp(ai, alpha);  // (dai * d_a) x d1
  const int da = c.d(alpha);
  for (int r = 0; r < na; ++r) {
    for (int z = 0; z < d1; ++z) {
      for (int q = 0; q < na; ++q) {
        for (int v = 0; v < dai; ++v) {
          Scalar cr = Scalar::zero(fld);
          Scalar cl = Scalar::zero(fld);
          for (int p = 0; p < na; ++p) {
            // Coefficient of X[q,v] in (f * X)(e_z) coordinate r:
            //   sum_{y} m[r, p, q] f[p, y] D_{a,a^{-1}}[(y, v), z].
            if (!a.mult.at(r, p, q).is_zero()) {
              Scalar s = Scalar::zero(fld);
              for (int y = 0; y < da; ++y) {
                if (f.map.at(p, y).is_zero()) continue;
                s += f.map.at(p, y) * cp_r.at(y * dai + v, z);
              }
              cr += a.mult.at(r, p, q) * s;
            }
            // Coefficient of X[q,v] in (X * f)(e_z) coordinate r:
            //   sum_{y} m[r, q, p] f[p, y] D_{a^{-1},a}[(v, y), z].
            if (!a.mult.at(r, q, p).is_zero()) {
              Scalar s = Scalar::zero(fld);
              for (int y = 0; y < da; ++y) {
                if (f.map.at(p, y).is_zero()) continue;
                s += f.map.at(p, y) * cp_l.at(v * da + y, z);
              }
              cl += a.mult.at(r, q, p) * s;
            }
          }
          right_sys.at(r * d1 + z, q * dai + v) = cr;
          left_sys.at(r * d1 + z, q * dai + v) = cl;
        }
      }
    }
  }
  // Right-hand side: the convolution unit evaluated on the basis of C_1.
  Vector rhs(fld, rows_each);
  for (int r = 0; r < na; ++r) {
    for (int z = 0; z < d1; ++z) rhs[r * d1 + z] = a.unit[r] * c.counit[z];
  }

  ConvInverseResult res;
  res.right_solvable = solve(right_sys, rhs).has_value();
  res.left_solvable = solve(left_sys, rhs).has_value();
  Vector rhs2(fld, 2 * rows_each);
  for (int i = 0; i < rows_each; ++i) {
    rhs2[i] = rhs[i];
    rhs2[rows_each + i] = rhs[i];
  }
  auto sol = solve(vstack(right_sys, left_sys), rhs2);
  if (sol) {
    LinearMap x(fld, na, dai);
    for (int q = 0; q < na; ++q) {
      for (int v = 0; v < dai; ++v) x.at(q, v) = (*sol)[q * dai + v];
    }
    res.inverse = ConvElement{ai, std::move(x)};
  }
  return res;
}

}  // namespace hopfpi
