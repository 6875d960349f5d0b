/// @file integrals.hpp
/// @brief Group-integrals, distinguished (co)grouplikes, unimodularity,
///        semisimplicity and cosemisimplicity tests, and the Radford-type
///        identity suite.
///
/// A left integral for the family H is a family of forms lam = (lam_a) with
///   (id_{H_a} (x) lam_b) D_{a,b} = lam_{ab}(.) 1_a    for all a, b;
/// a right integral satisfies the mirror equation
///   (lam_a (x) id_{H_b}) D_{a,b} = lam_{ab}(.) 1_b.
/// At finite dimension each space of integrals is exactly one-dimensional;
/// integral_space computes it as the nullspace of the stacked homogeneous
/// system over the concatenated unknowns, so the one-dimensionality is a
/// computed certificate, not an assumption.
///
/// The distinguished grouplike family g measures the failure of a right
/// integral to be two-sided, via (id (x) lam_b) D_{a,b} = lam_{ab}(.) g_a;
/// the distinguished form nu on H_1 satisfies Lam x = nu(x) Lam for a left
/// classical integral Lam of H_1.  Both feed the Radford-type identities.

#ifndef HOPFPI_INTEGRALS_HPP
#define HOPFPI_INTEGRALS_HPP

#include <optional>

#include "hopfpi/hopf.hpp"
#include "hopfpi/report.hpp"

namespace hopfpi {

enum class Side { Left, Right };

// ------------------------------------------------------------ small helpers

/// Matrix of left multiplication x -> v x on H_a.
LinearMap left_mul_map(const HopfPi& h, int a, const Vector& v);
/// Matrix of right multiplication x -> x v on H_a.
LinearMap right_mul_map(const HopfPi& h, int a, const Vector& v);
/// The square-of-antipode composite S_{a^{-1}} S_a : H_a -> H_a.
LinearMap ss_map(const HopfPi& h, int a);
/// Hit action of a form f on H_1 from the left: x -> x_(1,a) f(x_(2,1)).
LinearMap hit_left_map(const HopfPi& h, int a, const Vector& f);
/// Hit action from the right: x -> f(x_(1,1)) x_(2,a).
LinearMap hit_right_map(const HopfPi& h, int a, const Vector& f);

// ---------------------------------------------------------------- integrals

/// Nullspace basis of the full integral system; each basis family is
/// normalized so the first nonzero coordinate of the concatenation is 1.
std::vector<GradedCovector> integral_space(const HopfPi& h, Side side);

/// The unique normalized integral; nullopt when the computed space does not
/// have dimension exactly 1 (a theorem violation on verified instances).
std::optional<GradedCovector> pi_integral(const HopfPi& h, Side side);

/// Checks the defining equation of an integral on all pairs and basis
/// vectors.  Check id: integral.left / integral.right with indices [a,b].
Report is_integral(const HopfPi& h, const GradedCovector& lam, Side side);

/// Asserts lam_a != 0 on the whole support subgroup.
/// Check id: integral.nonzero [a].
Report integral_nonzero_everywhere(const HopfPi& h, const GradedCovector& lam);

/// Classical integral of the component Hopf algebra H_1 (left: x Lam =
/// eps(x) Lam; right: Lam x = eps(x) Lam), normalized leading-1; nullopt
/// when the solution space is not one-dimensional.
std::optional<Vector> h1_integral(const HopfPi& h, Side side);

/// Freeness certificate: the pairing matrix lam_a(e_i e_j) is invertible on
/// every support degree.  Check id: integral.freeness [a].
Report check_integral_freeness(const HopfPi& h, const GradedCovector& lam);

// ---------------------------------------------------- distinguished elements

struct DistinguishedG {
  GradedVector g;
  Report rep;
};

/// Solves (id (x) lam_b) D_{a,b} = lam_{ab}(.) g_a per degree from the right
/// integral, checks cross-degree consistency and the grouplike property.
/// Inconsistencies are theorem violations.
DistinguishedG distinguished_g(const HopfPi& h);

struct DistinguishedNu {
  Vector nu;      ///< form on H_1
  Vector nu_inv;  ///< its convolution inverse
  Report rep;
};

/// Reads nu off Lam x = nu(x) Lam coordinatewise; verifies nu is a unital
/// algebra morphism, computes nu^{-1} by convolution-inverse solve, and
/// cross-checks nu^{-1} = nu . S_1 and the right-integral identity
/// x Lam_r = nu^{-1}(x) Lam_r.
DistinguishedNu distinguished_nu(const HopfPi& h);

/// f -> (f pointing at x): both hit actions as vectors.
Vector hit_left(const HopfPi& h, const Vector& f, int a, const Vector& x);
Vector hit_right(const HopfPi& h, int a, const Vector& x, const Vector& f);

// ------------------------------------------------------- identity checkers

/// The three Radford-type trace identities for the right integral:
///  (a) lam_a(xy) = lam_a( S_{a^{-1}}S_a(y <- nu) x )
///  (b) lam_a(xy) = lam_a( y S_{a^{-1}}S_a(nu^{-1} -> g_a^{-1} x g_a) )
///  (c) lam_{a^{-1}}(S_a(x)) = lam_a(g_a x)
/// Check ids: radford.a / radford.b / radford.c with index [a].
Report check_radford(const HopfPi& h);

/// Closed antipode formulas from integrals:
///  (a) with a right classical integral Lam (lam_1(Lam) = 1):
///      S_a(x) = lam_a(Lam_(1,a) x) Lam_(2,a^{-1})
///  (b) with a left classical integral Lam (lam_1(Lam) = 1):
///      S_{a^{-1}}^{-1}(x) = lam_a(x Lam_(1,a)) Lam_(2,a^{-1})
/// Check ids: lemuni.a / lemuni.b with index [a].
Report check_lemuni(const HopfPi& h);

/// Coproduct symmetry of a left classical integral Lam:
///   Lam_(1,a) (x) Lam_(2,a^{-1})
///     = S_{a^{-1}}S_a(Lam'_(2,a)) g_a (x) Lam'_(1,a^{-1})
/// where the primed legs come from D_{a^{-1},a}(Lam).
/// Check id: lambda-coeff with index [a].
Report check_lambda_coeff(const HopfPi& h);

/// Fourth-power formula: (S_{a^{-1}}S_a)^2(x) = g_a (nu -> x <- nu^{-1}) g_a^{-1}.
/// Check id: s4 with index [a].
Report check_s4_formula(const HopfPi& h);

/// Order bound: (S_{a^{-1}}S_a)^{2 d dim H_1} = id for a of order d, and
/// S_a^{8 dim H_1} = id when d = 2.  Check ids: antipode-order.even [a],
/// antipode-order.two [a].
Report check_antipode_order(const HopfPi& h);

// ------------------------------------------------------------- classifiers

/// nu = eps.
bool is_unimodular(const HopfPi& h);
/// eps(Lam) != 0 for the left classical integral of H_1.
bool is_semisimple(const HopfPi& h);
/// lam_1(1_1) != 0 for the right integral.
bool is_cosemisimple(const HopfPi& h);

}  // namespace hopfpi

#endif  // HOPFPI_INTEGRALS_HPP
