/// @file instances.hpp
/// @brief The instance zoo: programmatic builders for every verified example
///        the tests and the acceptance suite run against.

#ifndef HOPFPI_INSTANCES_HPP
#define HOPFPI_INSTANCES_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopfpi/crossed.hpp"
#include "hopfpi/hopf.hpp"

namespace hopfpi {

/// All components one-dimensional with identity structure maps, decorated
/// with the conjugation crossing, R = 1 (x) 1, and theta = 1.
Instance trivial_instance(const FiniteGroup& g, Field f);

/// The four-dimensional algebra on {1, g, x, gx} with g^2 = 1, x^2 = 0,
/// xg = -gx, grouplike g, skew-primitive x; the standard non-semisimple,
/// non-unimodular fixture.  Rejects characteristic 2.
HopfPi sweedler(Field f);

/// k[G] with grouplike basis.
HopfPi group_algebra(const FiniteGroup& g, Field f);
/// The dual of k[G]: pointwise products on delta functions.
HopfPi function_algebra(const FiniteGroup& g, Field f);

/// The constant family H_a = A over pi with an optional action of pi by
/// Hopf automorphisms as the crossing (identity action when absent).
/// Throws std::domain_error when an action value fails the automorphism or
/// homomorphism requirements.
Instance constant_family(std::string name, const HopfPi& a, const FiniteGroup& pi,
                         const std::vector<LinearMap>& action = {});

/// The inversion automorphism e_g -> e_{g^{-1}} of a group algebra, as a
/// matrix usable as a constant_family action value.
LinearMap inversion_automorphism(const FiniteGroup& g, Field f);

/// The classical one-parameter R-matrix of the four-dimensional fixture,
/// R = (1/2)(1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g)
///   + (t/2)(x (x) x - x (x) gx + gx (x) gx + gx (x) x),
/// as a flat 16-vector (the sign pattern of the t-part is the one forced by
/// the coproduct expansion identities for this basis convention; verified
/// independently by the oracle script).  Rejects characteristic 2.
Vector sweedler_R(const Scalar& t);

/// Places one component element into every (a,b) slot of an R-family (the
/// constant-family decoration pattern).
RMatrixFamily constant_rmatrix(const HopfPi& h, const Vector& r);

/// The same component in every degree, as a twist / grouplike family.
GradedVector constant_element(const HopfPi& h, const Vector& v);

/// Trivial components on a proper subgroup of Z/2: dims (1, 0); the support
/// is then the proper subgroup {1}.
Instance proper_support_instance(Field f);

}  // namespace hopfpi

#endif  // HOPFPI_INSTANCES_HPP
