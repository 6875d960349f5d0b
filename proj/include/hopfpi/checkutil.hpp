/// @file checkutil.hpp
/// @brief Small helpers shared by the verifiers: compare two exactly
///        evaluated sides of an identity and record the result with a
///        reproducible basis witness.

#ifndef HOPFPI_CHECKUTIL_HPP
#define HOPFPI_CHECKUTIL_HPP

#include <string>
#include <vector>

#include "hopfpi/linalg.hpp"
#include "hopfpi/report.hpp"

namespace hopfpi {

/// Records whether lhs == rhs entrywise; on mismatch the witness names the
/// first differing (row, column) with both values, so the failure is
/// reproducible from the report alone.
void check_equal(Report& rep, std::string id, std::vector<int> indices, const LinearMap& lhs,
                 const LinearMap& rhs, Severity sev = Severity::Failure);

void check_equal(Report& rep, std::string id, std::vector<int> indices, const Vector& lhs,
                 const Vector& rhs, Severity sev = Severity::Failure);

void check_equal(Report& rep, std::string id, std::vector<int> indices, const Scalar& lhs,
                 const Scalar& rhs, Severity sev = Severity::Failure);

std::string vector_str(const Vector& v);

}  // namespace hopfpi

#endif  // HOPFPI_CHECKUTIL_HPP
