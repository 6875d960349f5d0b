/// @file group.cpp
/// @brief Cayley-table group validation and elementary group computations.

#include "hopfpi/group.hpp"

#include <array>
#include <stdexcept>

namespace hopfpi {

std::variant<FiniteGroup, GroupError> make_group(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) return GroupError{GroupError::Kind::NotSquare, "empty table"};
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) {
      return GroupError{GroupError::Kind::NotSquare, "table is not square"};
    }
    for (int v : row) {
      if (v < 0 || v >= n) {
        return GroupError{GroupError::Kind::OutOfRange,
                          "table entry " + std::to_string(v) + " out of range"};
      }
    }
  }
  // Identity: the element e with ea = ae = a for all a.
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) { id = e; break; }
  }
  if (id < 0) return GroupError{GroupError::Kind::NoIdentity, "no two-sided identity"};
  // Inverses.
  std::vector<int> inv(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table[a][b] == id && table[b][a] == id) { inv[static_cast<std::size_t>(a)] = b; break; }
    }
    if (inv[static_cast<std::size_t>(a)] < 0) {
      return GroupError{GroupError::Kind::NoInverse,
                        "element " + std::to_string(a) + " has no two-sided inverse"};
    }
  }
  // Associativity, exhaustively (n is small).
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          return GroupError{GroupError::Kind::NotAssociative,
                            "associativity fails at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")"};
        }
      }
    }
  }
  FiniteGroup g;
  g.n = n;
  g.id = id;
  g.mul = table;
  g.inv = std::move(inv);
  return g;
}

int element_order(const FiniteGroup& g, int alpha) {
  int x = alpha;
  int d = 1;
  while (x != g.id) {
    x = g.op(x, alpha);
    ++d;
    if (d > g.n) throw std::logic_error("element_order: order exceeds group size");
  }
  return d;
}

std::set<int> generated_subgroup(const FiniteGroup& g, int alpha) {
  std::set<int> s{g.id};
  int x = alpha;
  while (s.insert(x).second) x = g.op(x, alpha);
  return s;
}

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  }
  return t;
}

std::vector<std::vector<int>> symmetric3_table() {
  // Permutations of {0,1,2} listed as: 0=e, 1=(01), 2=(02), 3=(12),
  // 4=(012), 5=(021); table[a][b] = a composed after b.
  auto perm = [](int idx) -> std::array<int, 3> {
    switch (idx) {
      case 0: return {0, 1, 2};
      case 1: return {1, 0, 2};
      case 2: return {2, 1, 0};
      case 3: return {0, 2, 1};
      case 4: return {1, 2, 0};
      default: return {2, 0, 1};
    }
  };
  auto index_of = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i) {
      if (perm(i) == p) return i;
    }
    throw std::logic_error("symmetric3_table: not a permutation");
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      const auto pa = perm(a);
      const auto pb = perm(b);
      std::array<int, 3> ab{};
      for (int i = 0; i < 3; ++i) ab[static_cast<std::size_t>(i)] = pa[static_cast<std::size_t>(pb[static_cast<std::size_t>(i)])];
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = index_of(ab);
    }
  }
  return t;
}

namespace {
FiniteGroup must(const std::vector<std::vector<int>>& t) {
  auto r = make_group(t);
  if (auto* g = std::get_if<FiniteGroup>(&r)) return *g;
  throw std::logic_error("builtin group table invalid: " + std::get<GroupError>(r).detail);
}
}  // namespace

FiniteGroup trivial_group() { return must({{0}}); }
FiniteGroup cyclic_group(int n) { return must(cyclic_table(n)); }
FiniteGroup symmetric3() { return must(symmetric3_table()); }

}  // namespace hopfpi
