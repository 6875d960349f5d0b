/// @file pipeline.hpp
/// @brief Dependency-ordered verification pipelines over a decorated
///        instance, shared by the command-line front end and the tests.

#ifndef HOPFPI_PIPELINE_HPP
#define HOPFPI_PIPELINE_HPP

#include "hopfpi/crossed.hpp"

namespace hopfpi {

/// Runs every applicable structural verifier in dependency order
/// (coalgebra, then Hopf, then crossing, then R-matrix, then twist),
/// stopping after the first failing layer so a report never blames a later
/// axiom for an earlier defect.  Decoration layers are skipped when absent;
/// a claimed R-matrix inverse is compared against the computed one
/// (rmatrix.claimed-inverse [a,b]).
Report verify_instance(const Instance& inst);

/// The full identity suite on an instance that verify_instance accepts:
/// antipode facts, integral existence and identities, distinguished
/// elements, and — per decoration — the crossing character, R-matrix and
/// Drinfeld facts, and the twist/grouplike facts.
Report identity_suite(const Instance& inst);

}  // namespace hopfpi

#endif  // HOPFPI_PIPELINE_HPP
