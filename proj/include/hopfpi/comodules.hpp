/// @file comodules.hpp
/// @brief Group-comodules and Hopf group-comodules: axioms, coinvariants,
///        the fundamental decomposition, the dual comodule, and the finite
///        module/comodule correspondence.
///
/// A comodule over the family C is a family {M_a} with structure maps
/// rho_{a,b}: M_{ab} -> M_a (x) C_b, coassociative across the grading and
/// counital.  A Hopf comodule over H adds unital associative right actions
/// psi_a of H_a on M_a compatible with the coaction.  Coinvariants are the
/// tuples (m_a) with rho_{a,b}(m_{ab}) = m_a (x) 1_b; the fundamental
/// decomposition exhibits every finite Hopf comodule as coinvariants tensor
/// H, with explicitly constructed mutually inverse morphisms.

#ifndef HOPFPI_COMODULES_HPP
#define HOPFPI_COMODULES_HPP

#include "hopfpi/hopf.hpp"
#include "hopfpi/report.hpp"

namespace hopfpi {

/// Structure maps of a comodule; rho_{a,b} at flat index a*n + b with shape
/// (mdim_a * d_b) x mdim_{ab}.
struct PiComodule {
  Field field;
  std::vector<int> mdims;
  std::vector<LinearMap> rho;
  int stride = 0;  ///< group order n

  const LinearMap& r(int a, int b) const { return rho[static_cast<std::size_t>(a) * stride + b]; }
  LinearMap& r(int a, int b) { return rho[static_cast<std::size_t>(a) * stride + b]; }
  int md(int a) const { return mdims[static_cast<std::size_t>(a)]; }
};

/// A comodule with right actions psi_a: M_a (x) H_a -> M_a, stored as maps
/// of shape mdim_a x (mdim_a * d_a).
struct HopfPiComodule {
  PiComodule co;
  std::vector<LinearMap> action;
  const LinearMap& psi(int a) const { return action[static_cast<std::size_t>(a)]; }
};

// ---------------------------------------------------------------- builders

/// H over itself: M_a = H_a, rho = comultiplication.
PiComodule regular_comodule(const HopfPi& h);
/// The regular comodule with right multiplication as the action.
HopfPiComodule regular_hopf_comodule(const HopfPi& h);

/// The trivial coaction on constant fibers k^c: rho_{a,b}(m) = m (x) 1_b.
PiComodule trivial_coaction_comodule(const HopfPi& h, int c);

/// The Hopf comodule M (x) H: fibers M_a (x) H_a, coaction
/// xi_{a,b}(m (x) h) = m_(0,a) (x) h_(1,a) (x) m_(1,b) h_(2,b), action by
/// right multiplication on the H factor.
HopfPiComodule trivial_hopf_comodule(const HopfPi& h, const PiComodule& m);

/// The dual comodule with fibers H_{a^{-1}}^* and coaction dualizing the
/// comultiplication; its degree-1 coinvariants are exactly the left
/// integrals (checked by the test suite in both directions).
PiComodule dual_comodule(const HopfPi& h);

// --------------------------------------------------------------- verifiers

/// Coassociativity (comodule.coassoc [a,b,c]) and the counit law
/// (comodule.counit [a]).
Report verify_comodule(const PiCoalgebra& c, const PiComodule& m);

/// Action axioms (action.assoc / action.unit [a]) and the coaction-action
/// compatibility square (hopf-comodule.compat [a,b]).  Includes
/// verify_comodule's items.
Report verify_hopf_comodule(const HopfPi& h, const HopfPiComodule& m);

// ------------------------------------------------------------ coinvariants

/// Basis of the space of coinvariant tuples; each basis element is the
/// per-degree component list of one tuple.
std::vector<std::vector<Vector>> coinvariants(const HopfPi& h, const PiComodule& m);

/// The degree-a components of the tuple basis as columns of one matrix
/// (the projection of the coinvariant space into M_a).
LinearMap coinvariant_components(const HopfPi& h, const PiComodule& m,
                                 const std::vector<std::vector<Vector>>& tuples, int a);

// --------------------------------------------- fundamental decomposition

struct Decomposition {
  std::vector<LinearMap> f;  ///< f_a : coinv (x) H_a -> M_a,  m (x) h -> m.h
  std::vector<LinearMap> g;  ///< g_a : M_a -> coinv (x) H_a
  Report rep;
};

/// Constructs f_a(m (x) h) = m.h and g_a = (P_a (x) id) rho_{1,a} with
/// P_a(m) = m_(0,a) . S_{a^{-1}}(m_(1,a^{-1})), expressed in coinvariant
/// coordinates; verifies f.g = id, g.f = id (decomp.fg / decomp.gf [a]) and
/// that f and g are Hopf-comodule morphisms (decomp.f-colinear /
/// decomp.g-colinear [a,b], decomp.f-linear / decomp.g-linear [a]).
/// Failures on a verified instance are theorem violations.
Decomposition fundamental_decomposition(const HopfPi& h, const HopfPiComodule& m);

// ----------------------------------------- module <-> comodule conversion

/// A graded left module over the dual: the action of H_b^* on M_{ab},
/// stored per (a,b) as a map of shape mdim_a x (d_b * mdim_{ab}).
struct PiModuleOverDual {
  std::vector<int> mdims;
  std::vector<LinearMap> act;
  int stride = 0;
  const LinearMap& a(int x, int y) const { return act[static_cast<std::size_t>(x) * stride + y]; }
  int md(int x) const { return mdims[static_cast<std::size_t>(x)]; }
};

/// The dual-action form of a comodule: (f . m) = (id (x) f) rho_{a,b}(m),
/// laid out by exact index transposition.  Finite dimension makes this an
/// isomorphism of data, so the round-trip is the identity.
PiModuleOverDual module_from_comodule(const PiComodule& m);
PiComodule comodule_from_module(const PiCoalgebra& c, const PiModuleOverDual& mod);

}  // namespace hopfpi

#endif  // HOPFPI_COMODULES_HPP
