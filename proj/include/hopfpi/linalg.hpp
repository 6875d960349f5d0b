/// @file linalg.hpp
/// @brief Dense exact linear and multilinear algebra: vectors, matrices,
///        structure-constant tensors, Kronecker products, flips, nullspaces.
///
/// Tensor flattening convention (fixed once, used everywhere):
///   the basis vector e_i (x) e_j of k^m (x) k^n has flat index  i*n + j
/// i.e. the LEFT factor is major.  flip(m, n) is the permutation matrix
/// realizing the swap k^m (x) k^n -> k^n (x) k^m, sending i*n+j to j*m+i.
///
/// Zero-dimensional spaces are first-class citizens: maps to or from k^0
/// are legal, have empty entry arrays, and compose as expected.  They arise
/// naturally because components of a graded family may vanish.

#ifndef HOPFPI_LINALG_HPP
#define HOPFPI_LINALG_HPP

#include <optional>
#include <vector>

#include "hopfpi/scalar.hpp"

namespace hopfpi {

/// A column vector in k^dim.
struct Vector {
  Field field;
  std::vector<Scalar> entries;

  /// Empty vector over Q; placeholder until assigned.
  Vector() : field(Field::rationals()) {}
  Vector(Field f, int dim) : field(f), entries(static_cast<std::size_t>(dim), Scalar::zero(f)) {}
  Vector(Field f, std::vector<Scalar> e) : field(f), entries(std::move(e)) {}

  int dim() const { return static_cast<int>(entries.size()); }
  Scalar& operator[](int i) { return entries[static_cast<std::size_t>(i)]; }
  const Scalar& operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  bool operator==(const Vector& o) const;

  static Vector basis(Field f, int dim, int i);
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);
/// Euclidean pairing sum_i a_i b_i; used for covector/vector evaluation.
Scalar dot(const Vector& a, const Vector& b);
/// Flat tensor a (x) b in k^{dim a * dim b} under the i*n+j convention.
Vector tensor(const Vector& a, const Vector& b);

/// A dense linear map k^cols -> k^rows, stored row-major.
struct LinearMap {
  Field field;
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> entries;  ///< length rows*cols, row-major.

  LinearMap(Field f, int r, int c)
      : field(f), rows(r), cols(c),
        entries(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), Scalar::zero(f)) {}

  Scalar& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  const Scalar& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

  bool is_zero() const;
  bool operator==(const LinearMap& o) const;

  static LinearMap identity(Field f, int n);
  static LinearMap zero(Field f, int rows, int cols);
  /// 1 x n matrix whose single row is the given covector coefficients.
  static LinearMap row(const Vector& covector);
  /// n x 1 matrix whose single column is the given vector.
  static LinearMap column(const Vector& v);
};

LinearMap operator*(const LinearMap& a, const LinearMap& b);  ///< composition a after b
LinearMap operator+(const LinearMap& a, const LinearMap& b);
LinearMap operator-(const LinearMap& a, const LinearMap& b);
LinearMap operator*(const Scalar& c, const LinearMap& a);
Vector apply(const LinearMap& a, const Vector& v);
LinearMap transpose(const LinearMap& a);

/// Kronecker product realizing f (x) g on flattened tensor factors:
/// rows = a.rows*b.rows, cols = a.cols*b.cols, and
/// kron(A,B)[(i1*b.rows+i2),(j1*b.cols+j2)] = A[i1,j1] * B[i2,j2].
LinearMap kron(const LinearMap& a, const LinearMap& b);

/// The flip permutation matrix k^m (x) k^n -> k^n (x) k^m (size mn x mn),
/// sending flat index i*n+j to j*m+i.
LinearMap flip(Field f, int m, int n);

/// Matrix power by repeated squaring; a must be square, e >= 0.
LinearMap matrix_power(const LinearMap& a, long long e);

/// Stacks b below a (equal column counts).
LinearMap vstack(const LinearMap& a, const LinearMap& b);

int rank(const LinearMap& a);

/// Basis of ker(a) from the reduced row echelon form; each basis vector is
/// normalized so its first nonzero coordinate is 1, and the list is ordered
/// by the free-column index (this is the canonical echelon kernel basis).
std::vector<Vector> nullspace(const LinearMap& a);

/// Solves a x = b exactly.  Returns nullopt when inconsistent; when the
/// solution is non-unique, returns the echelon-form particular solution
/// (all free variables zero).
std::optional<Vector> solve(const LinearMap& a, const Vector& b);

/// Columnwise solve a X = b; nullopt if any column is inconsistent.
std::optional<LinearMap> solve_matrix(const LinearMap& a, const LinearMap& b);

/// Two-sided matrix inverse; nullopt unless a is square of full rank.
std::optional<LinearMap> inverse(const LinearMap& a);

/// Structure constants of a bilinear product k^left x k^right -> k^out:
/// e_j * e_k = sum_i c[i][j][k] e_i.
struct Bilinear {
  Field field;
  int out = 0;
  int left = 0;
  int right = 0;
  std::vector<Scalar> entries;  ///< flat [i][j][k], i major.

  Bilinear(Field f, int o, int l, int r)
      : field(f), out(o), left(l), right(r),
        entries(static_cast<std::size_t>(o) * l * r, Scalar::zero(f)) {}

  Scalar& at(int i, int j, int k) {
    return entries[(static_cast<std::size_t>(i) * left + j) * right + k];
  }
  const Scalar& at(int i, int j, int k) const {
    return entries[(static_cast<std::size_t>(i) * left + j) * right + k];
  }

  bool operator==(const Bilinear& o) const;
};

/// The product of two vectors through the structure constants.
Vector bilinear_apply(const Bilinear& b, const Vector& x, const Vector& y);

/// The same product as a linear map k^{left*right} -> k^out on the flattened
/// tensor square (column index j*right + k).
LinearMap bilinear_as_map(const Bilinear& b);

/// Componentwise tensor product of algebras: the product on
/// k^{a.out} (x) k^{b.out} with (x1 (x) y1)(x2 (x) y2) = x1x2 (x) y1y2,
/// under the flat index convention.
Bilinear bilinear_tensor(const Bilinear& a, const Bilinear& b);

/// Reversed multiplication: x *op y = y * x.
Bilinear bilinear_opposite(const Bilinear& a);

/// Matrix of left multiplication x -> v x through the structure constants.
LinearMap structure_left_mul(const Bilinear& m, const Vector& v);
/// Matrix of right multiplication x -> x v.
LinearMap structure_right_mul(const Bilinear& m, const Vector& v);

/// Two-sided inverse of `a` in the (unital, associative) algebra given by
/// structure constants and unit: solves the stacked linear system
/// a x = unit and x a = unit; nullopt when no two-sided inverse exists.
std::optional<Vector> algebra_inverse(const Bilinear& mult, const Vector& unit, const Vector& a);

}  // namespace hopfpi

#endif  // HOPFPI_LINALG_HPP
