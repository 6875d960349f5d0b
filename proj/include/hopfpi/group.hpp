/// @file group.hpp
/// @brief Finite grading groups given by Cayley tables.
///
/// Elements are the indices 0..n-1; the table mul[a][b] gives the index of
/// the product ab.  Construction validates the full group axioms (identity,
/// inverses, associativity over all n^3 triples) and derives the identity
/// index and the inverse table.

#ifndef HOPFPI_GROUP_HPP
#define HOPFPI_GROUP_HPP

#include <set>
#include <string>
#include <variant>
#include <vector>

namespace hopfpi {

struct FiniteGroup {
  int n = 1;                          ///< element count
  int id = 0;                         ///< index of the neutral element
  std::vector<std::vector<int>> mul;  ///< n x n Cayley table
  std::vector<int> inv;               ///< two-sided inverses

  int op(int a, int b) const { return mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int invof(int a) const { return inv[static_cast<std::size_t>(a)]; }
  /// Conjugation b a b^{-1}.
  int conj(int b, int a) const { return op(op(b, a), invof(b)); }

  bool operator==(const FiniteGroup&) const = default;
};

/// Distinct validation failures for make_group, reported separately so a bad
/// table pinpoints which group axiom it violates.
struct GroupError {
  enum class Kind { NotSquare, OutOfRange, NoIdentity, NoInverse, NotAssociative };
  Kind kind;
  std::string detail;
};

/// Validates a Cayley table and derives id/inv.
std::variant<FiniteGroup, GroupError> make_group(const std::vector<std::vector<int>>& table);

/// Least d >= 1 with alpha^d = id.
int element_order(const FiniteGroup& g, int alpha);

/// The cyclic subgroup {id, alpha, alpha^2, ...}.
std::set<int> generated_subgroup(const FiniteGroup& g, int alpha);

// Ready-made tables for tests and instance builders.
std::vector<std::vector<int>> cyclic_table(int n);
std::vector<std::vector<int>> symmetric3_table();

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup symmetric3();

}  // namespace hopfpi

#endif  // HOPFPI_GROUP_HPP
