/// @file traces.hpp
/// @brief Symmetrized trace families on decorated instances: verification,
///        the correspondence with central families, and the canonical trace
///        of unimodular ribbon instances.
///
/// A trace family is a collection of forms tr_a on H_a that is symmetric
/// (tr_a(xy) = tr_a(yx)), antipode-invariant (tr_{a^{-1}}(S_a(x)) =
/// tr_a(x)), and crossing-invariant (tr_{bab^{-1}}(phi_b(x)) = tr_a(x)).
/// On a unimodular ribbon instance, traces correspond to central families z
/// via tr_a(x) = lam_a(G_a z_a x), and the canonical choice z = 1 yields
/// tr_a = lam_a(G_a .) when one of the admissibility conditions holds.

#ifndef HOPFPI_TRACES_HPP
#define HOPFPI_TRACES_HPP

#include <optional>

#include "hopfpi/crossed.hpp"
#include "hopfpi/hopf.hpp"
#include "hopfpi/integrals.hpp"

namespace hopfpi {

struct PiTrace {
  GradedCovector tr;
};

/// The three trace axioms on all basis pairs.
/// Check ids: trace.symmetric [a], trace.antipode [a], trace.conj [b,a].
Report verify_trace(const HopfPi& h, const Crossing& x, const PiTrace& t);

struct TraceResult {
  std::optional<PiTrace> tr;
  Report rep;
};

/// tr_a = lam_a(G_a z_a .) from a family z that is central
/// (tracez.central [a]), antipode-compatible S_a(z_a) =
/// phi-hat(a)^{-1} z_{a^{-1}} (tracez.antipode [a]), and crossing-compatible
/// phi_b(z_a) = phi-hat(b) z_{bab^{-1}} (tracez.phi [b,a]).  Violated
/// conditions are refusals and no trace is produced.
TraceResult trace_from_z(const HopfPi& h, const Crossing& x, const RMatrixFamily& r,
                         const GradedVector& theta, const GradedCovector& lam,
                         const GradedVector& z);

struct ZResult {
  GradedVector z;
  Report rep;
};

/// Inverts trace_from_z: solves tr_a = lam_a(w_a .) through the (invertible)
/// integral pairing, sets z_a = G_a^{-1} w_a, round-trips against
/// trace_from_z (zfromtr.roundtrip [a]) and re-verifies the three z
/// conditions for the recovered family.
ZResult z_from_trace(const HopfPi& h, const Crossing& x, const RMatrixFamily& r,
                     const GradedVector& theta, const GradedCovector& lam, const PiTrace& t);

/// The canonical trace tr_a = lam_a(G_a .).  Requires unimodularity and at
/// least one of: semisimple, cosemisimple, lam_1(theta_1) != 0, or the
/// crossing restricting to the identity on H_1.  When refused, the report
/// lists each failed condition (canonical.unimodular,
/// canonical.semisimple, canonical.cosemisimple, canonical.theta-pairing,
/// canonical.crossing-trivial-on-unit) so the diagnosis is explicit; when
/// admitted, the satisfied conditions are recorded and the produced trace is
/// re-verified.
TraceResult canonical_trace(const HopfPi& h, const Crossing& x, const RMatrixFamily& r,
                            const GradedVector& theta);

}  // namespace hopfpi

#endif  // HOPFPI_TRACES_HPP
