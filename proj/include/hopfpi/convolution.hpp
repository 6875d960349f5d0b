/// @file convolution.hpp
/// @brief Convolution algebras Hom(C_a, A) and convolution inverses.
///
/// For a group-coalgebra C and an algebra A, the maps f: C_a -> A carry a
/// graded product f * g = m_A (f (x) g) D_{a,b} with unit eps(.) 1_A at the
/// neutral degree.  The antipode of a Hopf family is characterized as the
/// two-sided convolution inverse of the identity of the inverse-degree
/// component, which is the cross-check exercised by the tests here.

#ifndef HOPFPI_CONVOLUTION_HPP
#define HOPFPI_CONVOLUTION_HPP

#include <optional>

#include "hopfpi/hopf.hpp"
#include "hopfpi/linalg.hpp"

namespace hopfpi {

/// The target algebra A of a convolution algebra, by structure constants.
struct TargetAlgebra {
  Bilinear mult;
  Vector unit;
  int dim() const { return mult.out; }
};

/// A homogeneous element of Conv(C, A): a linear map C_source -> A.
struct ConvElement {
  int source = 0;   ///< degree a
  LinearMap map;    ///< shape dim(A) x d_a
};

/// The component algebra H_a of a Hopf family as a convolution target.
TargetAlgebra component_algebra(const HopfPi& h, int a);
/// The tensor algebra H_a (x) H_b.
TargetAlgebra pair_algebra(const HopfPi& h, int a, int b);
/// The tensor algebra H_a (x) H_b (x) H_c.
TargetAlgebra triple_algebra(const HopfPi& h, int a, int b, int c);

/// The convolution unit eps(.) 1_A at the neutral degree.
ConvElement conv_unit(const PiCoalgebra& c, const TargetAlgebra& a);

/// f * g = m_A (f (x) g) D_{a,b}; lives at degree ab.
ConvElement conv_product(const PiCoalgebra& c, const TargetAlgebra& a, const ConvElement& f,
                         const ConvElement& g);

/// Outcome of a convolution-inverse solve.  When only one side is solvable
/// the inverse is absent but the flags say which side admitted a solution,
/// which distinguishes one-sided invertibility in diagnostics.
struct ConvInverseResult {
  std::optional<ConvElement> inverse;  ///< at degree a^{-1}
  bool left_solvable = false;          ///< exists x with x * f = unit
  bool right_solvable = false;         ///< exists x with f * x = unit
};

/// Solves f * x = eps(.) 1_A = x * f for x at degree a^{-1}, stacking both
/// one-sided equations into a single exact linear system.
ConvInverseResult conv_inverse(const PiCoalgebra& c, const TargetAlgebra& a,
                               const ConvElement& f);

}  // namespace hopfpi

#endif  // HOPFPI_CONVOLUTION_HPP
