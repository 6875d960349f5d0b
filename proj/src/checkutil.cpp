/// @file checkutil.cpp
/// @brief Implementation of the identity-comparison report helpers.

#include "hopfpi/checkutil.hpp"

#include <sstream>

namespace hopfpi {

std::string vector_str(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < v.dim(); ++i) {
    if (i) os << ",";
    os << v[i].str();
  }
  os << ")";
  return os.str();
}

void check_equal(Report& rep, std::string id, std::vector<int> indices, const LinearMap& lhs,
                 const LinearMap& rhs, Severity sev) {
  if (lhs.rows != rhs.rows || lhs.cols != rhs.cols) {
    std::ostringstream os;
    os << "shape mismatch: " << lhs.rows << "x" << lhs.cols << " vs " << rhs.rows << "x"
       << rhs.cols;
    rep.add_fail(std::move(id), std::move(indices), os.str(), sev);
    return;
  }
  for (int c = 0; c < lhs.cols; ++c) {
    for (int r = 0; r < lhs.rows; ++r) {
      if (lhs.at(r, c) != rhs.at(r, c)) {
        std::ostringstream os;
        os << "witness basis e_" << c << ", output coordinate " << r << ": lhs="
           << lhs.at(r, c).str() << " rhs=" << rhs.at(r, c).str();
        rep.add_fail(std::move(id), std::move(indices), os.str(), sev);
        return;
      }
    }
  }
  rep.add_ok(std::move(id), std::move(indices));
}

void check_equal(Report& rep, std::string id, std::vector<int> indices, const Vector& lhs,
                 const Vector& rhs, Severity sev) {
  if (lhs.dim() != rhs.dim()) {
    rep.add_fail(std::move(id), std::move(indices), "dimension mismatch", sev);
    return;
  }
  for (int i = 0; i < lhs.dim(); ++i) {
    if (lhs[i] != rhs[i]) {
      std::ostringstream os;
      os << "coordinate " << i << ": lhs=" << lhs[i].str() << " rhs=" << rhs[i].str();
      rep.add_fail(std::move(id), std::move(indices), os.str(), sev);
      return;
    }
  }
  rep.add_ok(std::move(id), std::move(indices));
}

void check_equal(Report& rep, std::string id, std::vector<int> indices, const Scalar& lhs,
                 const Scalar& rhs, Severity sev) {
  if (lhs != rhs) {
    rep.add_fail(std::move(id), std::move(indices), "lhs=" + lhs.str() + " rhs=" + rhs.str(),
                 sev);
    return;
  }
  rep.add_ok(std::move(id), std::move(indices));
}

}  // namespace hopfpi
