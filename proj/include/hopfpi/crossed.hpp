/// @file crossed.hpp
/// @brief Crossings, the rescaling character, quasitriangular structures
///        (R-matrices, Drinfeld elements), ribbon twists, and the mirror /
///        coopposite constructions on decorated instances.
///
/// A crossing is an action of the grading group by algebra isomorphisms
/// phi_b: H_a -> H_{bab^{-1}} compatible with the comultiplication and
/// counit.  An R-matrix is an invertible family R_{a,b} in H_a (x) H_b
/// intertwining the comultiplication with its crossed flip and obeying two
/// coproduct expansion identities plus crossing invariance; its Drinfeld
/// elements u_a implement S_{a^{-1}} S_a . phi_a by conjugation.  A twist is
/// an invertible family theta_a realizing the crossing by conjugation, fixed
/// by the antipode, with a prescribed coproduct.
///
/// Axiom checks report plain failures; consequences of the axioms (the
/// derived-lemma suites) report theorem violations, since their failure on an
/// axiom-clean instance can only mean a data or implementation bug.

#ifndef HOPFPI_CROSSED_HPP
#define HOPFPI_CROSSED_HPP

#include <optional>
#include <string>

#include "hopfpi/hopf.hpp"
#include "hopfpi/integrals.hpp"
#include "hopfpi/report.hpp"

namespace hopfpi {

/// Family of algebra isomorphisms phi_b|H_a, stored at flat index b*n + a
/// with shape d_{bab^{-1}} x d_a.
struct Crossing {
  std::vector<LinearMap> maps;
  const LinearMap& phi(int b, int a) const { return maps[static_cast<std::size_t>(b) * stride + a]; }
  LinearMap& phi(int b, int a) { return maps[static_cast<std::size_t>(b) * stride + a]; }
  int stride = 0;  ///< group order n
};

/// R_{a,b} as a flat vector in k^{d_a d_b}, stored at flat index a*n + b.
struct RMatrixFamily {
  std::vector<Vector> comp;
  const Vector& r(int a, int b) const { return comp[static_cast<std::size_t>(a) * stride + b]; }
  Vector& r(int a, int b) { return comp[static_cast<std::size_t>(a) * stride + b]; }
  int stride = 0;
};

/// A Hopf family with its optional decoration layers.  The claimed R-matrix
/// inverse, when present, is checked against the computed one — inverses are
/// always recomputed, never trusted.
struct Instance {
  std::string name;
  HopfPi h;
  std::optional<Crossing> crossing;
  std::optional<RMatrixFamily> rmatrix;
  std::optional<RMatrixFamily> rmatrix_inverse_claim;
  std::optional<GradedVector> twist;
};

/// The conjugation-on-indices crossing with identity component maps; valid
/// whenever d_{bab^{-1}} = d_a for all pairs (throws otherwise).
Crossing trivial_crossing(const HopfPi& h);

// ------------------------------------------------------ insertion helpers

/// r (x) 1_c on the outer factors: (i*db + k) stays, unit fills the tail.
Vector insert_12c(const Vector& r, const Vector& one_c);
/// 1_a (x) r.
Vector insert_a23(const Vector& one_a, const Vector& r);
/// r in k^{left_dim} (x) k^{right_dim} spread to positions 1 and 3 with the
/// unit of the middle factor: out[(i*db + k)*dc + j] = r[i*dc + j] * 1_b[k].
Vector insert_1b3(const Vector& r, int left_dim, int right_dim, const Vector& one_b);

// ------------------------------------------------------------- crossings

/// Crossing axioms: each phi_b|H_a an invertible unital algebra map
/// (crossing.iso / crossing.mult-hom / crossing.unit [b,a]),
/// comultiplication preservation (crossing.comul [b,a,c]), counit
/// preservation (crossing.counit [b]), and multiplicativity in b
/// (crossing.composition [b,b',a]).  Also verifies the derived facts
/// phi_1 = id (crossing.identity [a]), phi_b^{-1} = phi_{b^{-1}}
/// (crossing.inverse [b,a]), and phi_b S_a = S_{bab^{-1}} phi_b
/// (crossing.antipode [b,a]) as theorem violations.
Report verify_crossing(const HopfPi& h, const Crossing& x);

struct PhiHat {
  std::vector<Scalar> value;  ///< phi-hat(b), one per group element
  Report rep;
};

/// The character by which the crossing rescales integrals:
/// lam_{bab^{-1}} . phi_b = phi-hat(b) lam_a.  Extracted from the right
/// integral, verified at every degree, against the left integral, and as a
/// group homomorphism.
PhiHat phi_hat(const HopfPi& h, const Crossing& x);

/// Crossing action on the canonical data: phi_b(Lam) = phi-hat(b) Lam for
/// classical integrals of both sides, nu . phi_b = nu, and
/// phi_b(g_a) = g_{bab^{-1}}.
Report check_marre(const HopfPi& h, const Crossing& x);

// ------------------------------------------------------------- R-matrices

/// Computed inverses of every R_{a,b} in H_a (x) H_b; nullopt if any
/// component is not invertible.
std::optional<RMatrixFamily> rmatrix_inverses(const HopfPi& h, const RMatrixFamily& r);

/// R-matrix axioms: invertibility (rmatrix.invertible [a,b]), the
/// intertwining identity (rmatrix.intertwine [a,b]), both coproduct
/// expansions (rmatrix.hexagon.right / rmatrix.hexagon.left [a,b,c]), and
/// crossing invariance (rmatrix.conj [b,a,c]).
Report verify_R(const HopfPi& h, const Crossing& x, const RMatrixFamily& r);

/// Derived R-matrix facts: counit contractions (b1.counit.left /
/// b1.counit.right [a]), the antipode
/// relations to the inverse (b1.antipode-left / b1.antipode-right [a,b]),
/// the double-antipode relation (b1.antipode-both [a,b]), and the
/// Yang-Baxter family equality (b1.yang-baxter [a,b,c]).
Report check_B1(const HopfPi& h, const Crossing& x, const RMatrixFamily& r);

struct Drinfeld {
  GradedVector u;
  GradedVector u_inv;
  Report rep;
};

/// u_a = m_a (S_{a^{-1}} phi_a (x) id) sigma(R_{a,a^{-1}}), with the closed
/// inverse u_a^{-1} = m_a (id (x) S_{a^{-1}} S_a) sigma(R_{a,a}), both
/// cross-checked against the linear-system inverse.
Drinfeld drinfeld_u(const HopfPi& h, const Crossing& x, const RMatrixFamily& r);

/// Drinfeld-element facts: conjugation implements S_{a^{-1}}S_a . phi_a
/// (b2.conjugation [a]), antipode bijectivity (b2.bijective [a]), crossing
/// equivariance (b2.phi [b,a]), the central element c_a (b2.central-forms /
/// b2.central [a]), both closed forms for D(u_{ab}) (b2.comul.left /
/// b2.comul.right [a,b]), and eps(u_1) = 1 (b2.counit).
Report check_B2(const HopfPi& h, const Crossing& x, const RMatrixFamily& r);

struct EllElement {
  GradedVector ell;
  Report rep;
};

/// ell_a = S_{a^{-1}}(u_{a^{-1}})^{-1} u_a; grouplike, and conjugation by it
/// implements (S_{a^{-1}}S_a)^2.  Check ids: ell.grouplike [a,b],
/// ell.counit, ell.s4 [a].
EllElement ell_element(const HopfPi& h, const Crossing& x, const RMatrixFamily& r);

// ------------------------------------------------------------------ twists

/// Twist axioms: invertibility (twist.invertible [a]), conjugation realizes
/// the crossing (twist.crossing [a]), antipode fixity (twist.antipode [a]),
/// crossing equivariance (twist.conj [b,a]), and the coproduct formula
/// (twist.comul [a,b]).  Derived facts (theorem violations):
/// inverse-conjugation (ribbon.crossing-inverse [a]), eps(theta_1) = 1
/// (ribbon.counit), centrality of theta_a^{order(a)} (ribbon.power-central
/// [a]), and commutation with u (ribbon.u-commute [a]).
Report verify_twist(const HopfPi& h, const Crossing& x, const RMatrixFamily& r,
                    const GradedVector& theta);

struct GElement {
  GradedVector g;
  Report rep;
};

/// G_a = theta_a u_a with the full fact suite: grouplike (zig.grouplike
/// [a,b], zig.counit), crossing equivariance (zig.phi [b,a]), S_a(G_a) =
/// G_{a^{-1}}^{-1} (zig.antipode [a]), theta_a^{-2} = c_a (zig.theta-square
/// [a]), the S(u) formula (zig.antipode-u [a]), and G-conjugation
/// implementing S_{a^{-1}}S_a (zig.s2 [a]).
GElement G_element(const HopfPi& h, const Crossing& x, const RMatrixFamily& r,
                   const GradedVector& theta);

/// Computes h_a = (id (x) nu)(R_{a,1}), checks it is grouplike
/// (calcg.h-grouplike [a,b], calcg.h-counit), and verifies the distinguished
/// grouplike satisfies g_a = phi-hat(a)^{-1} ell_a h_a (calcg.identity [a]);
/// with a twist, additionally phi-hat(a) g_a = G_a^2 h_a (calcg.ribbon [a]).
Report g_from_R(const HopfPi& h, const Crossing& x, const RMatrixFamily& r,
                const std::optional<GradedVector>& theta);

// ----------------------------------------------- mirror and coopposite

struct DerivedInstance {
  Instance inst;
  Report rep;  ///< the construction's internal consistency checks
};

/// The mirror instance: components reindexed by inversion, comultiplication
/// twisted through the crossing, S-bar_a = phi_a S_{a^{-1}}, mirrored R and
/// theta.  Verifies u-bar_a = S_a(u_a)^{-1} when R is present
/// (mirror.drinfeld [a]).
DerivedInstance mirror(const Instance& inst);

/// The coopposite instance with its quasitriangular structure
/// R^cop_{a,b} = (S_a (x) id)(R_{a,b^{-1}}); compares this against the
/// crossing-twisted closed form (coop.r-forms [a,b]) and checks
/// u^cop_a = u_{a^{-1}}^{-1} (coop.drinfeld [a]).  Requires a bijective
/// antipode (throws std::domain_error otherwise).
DerivedInstance coop_qt(const Instance& inst);

}  // namespace hopfpi

#endif  // HOPFPI_CROSSED_HPP
