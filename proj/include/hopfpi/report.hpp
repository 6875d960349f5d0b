/// @file report.hpp
/// @brief Structured check reports: every verifier returns one of these.
///
/// A report is a flat list of check items.  An item records the check id (a
/// stable descriptive string), the group indices it quantifies over, a
/// pass/fail flag, a severity class, and on failure a witness description
/// with the two evaluated sides.  Reports are deterministically ordered by
/// (check id, indices) so output is reproducible regardless of evaluation
/// order.
///
/// Severity classes:
///  - Failure:          an axiom or identity does not hold on the data.
///  - TheoremViolation: the instance passed its axioms, yet a consequence
///                      that is provable from them failed — this indicates a
///                      bug in the data or the implementation, never a
///                      legitimately "invalid" instance.
///  - Refusal:          a construction's preconditions are not met, so it is
///                      declined (e.g. canonical trace without unimodularity).

#ifndef HOPFPI_REPORT_HPP
#define HOPFPI_REPORT_HPP

#include <string>
#include <vector>

namespace hopfpi {

enum class Severity { Failure, TheoremViolation, Refusal };

struct CheckItem {
  std::string id;            ///< stable check identifier, e.g. "coalg.coassoc"
  std::vector<int> indices;  ///< group indices quantified over (may be empty)
  bool ok = true;
  Severity severity = Severity::Failure;
  std::string witness;       ///< on failure: basis witness and both sides

  bool operator<(const CheckItem& o) const {
    if (id != o.id) return id < o.id;
    return indices < o.indices;
  }
};

struct Report {
  std::vector<CheckItem> items;

  bool pass() const {
    for (const auto& it : items) {
      if (!it.ok) return false;
    }
    return true;
  }

  void add_ok(std::string id, std::vector<int> indices) {
    items.push_back({std::move(id), std::move(indices), true, Severity::Failure, {}});
  }

  void add_fail(std::string id, std::vector<int> indices, std::string witness,
                Severity sev = Severity::Failure) {
    items.push_back({std::move(id), std::move(indices), false, sev, std::move(witness)});
  }

  void add(std::string id, std::vector<int> indices, bool ok, std::string witness_on_fail,
           Severity sev = Severity::Failure) {
    if (ok) {
      add_ok(std::move(id), std::move(indices));
    } else {
      add_fail(std::move(id), std::move(indices), std::move(witness_on_fail), sev);
    }
  }

  void merge(const Report& o) { items.insert(items.end(), o.items.begin(), o.items.end()); }

  /// Stable canonical order; called before rendering.
  void sort();

  /// Ids of failing checks, deduplicated, in canonical order.
  std::vector<std::string> failing_ids() const;

  /// True when some failing item has the given check-id prefix.
  bool has_failure_with_prefix(const std::string& prefix) const;

  /// Human-readable multi-line rendering.
  std::string render() const;
};

/// "a,b,c" from indices; used in witnesses and renderings.
std::string indices_str(const std::vector<int>& idx);

}  // namespace hopfpi

#endif  // HOPFPI_REPORT_HPP
