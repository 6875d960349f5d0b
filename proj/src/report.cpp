/// @file report.cpp
/// @brief Report ordering and rendering.

#include "hopfpi/report.hpp"

#include <algorithm>
#include <sstream>

namespace hopfpi {

std::string indices_str(const std::vector<int>& idx) {
  std::ostringstream os;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) os << ",";
    os << idx[i];
  }
  return os.str();
}

void Report::sort() { std::stable_sort(items.begin(), items.end()); }

std::vector<std::string> Report::failing_ids() const {
  std::vector<std::string> ids;
  for (const auto& it : items) {
    if (!it.ok) ids.push_back(it.id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool Report::has_failure_with_prefix(const std::string& prefix) const {
  for (const auto& it : items) {
    if (!it.ok && it.id.compare(0, prefix.size(), prefix) == 0) return true;
  }
  return false;
}

std::string Report::render() const {
  Report copy = *this;
  copy.sort();
  std::ostringstream os;
  for (const auto& it : copy.items) {
    os << (it.ok ? "pass" : it.severity == Severity::Refusal          ? "refused"
                         : it.severity == Severity::TheoremViolation ? "VIOLATION"
                                                                     : "FAIL");
    os << "  " << it.id;
    if (!it.indices.empty()) os << " [" << indices_str(it.indices) << "]";
    if (!it.ok && !it.witness.empty()) os << "  :: " << it.witness;
    os << "\n";
  }
  return os.str();
}

}  // namespace hopfpi
