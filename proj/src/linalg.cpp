/// @file linalg.cpp
/// @brief Exact dense linear algebra kernel (Gauss-Jordan based).

#include "hopfpi/linalg.hpp"

#include <stdexcept>

namespace hopfpi {

namespace {

void check_field(const Field& a, const Field& b) {
  if (!(a == b)) throw std::logic_error("linalg: mixed-field operands");
}

/// Reduced row echelon form in place.  Returns the pivot column of each
/// pivot row in order (so the return size is the rank).
std::vector<int> rref(LinearMap& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows; ++r) {
      if (!m.at(r, col).is_zero()) { pivot = r; break; }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(row, c));
    }
    const Scalar inv = m.at(row, col).inverse();
    for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const Scalar factor = m.at(r, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= factor * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

// ---------------------------------------------------------------- Vector

bool Vector::is_zero() const {
  for (const Scalar& s : entries) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool Vector::operator==(const Vector& o) const {
  if (dim() != o.dim()) return false;
  for (int i = 0; i < dim(); ++i) {
    if ((*this)[i] != o[i]) return false;
  }
  return true;
}

Vector Vector::basis(Field f, int dim, int i) {
  Vector v(f, dim);
  v[i] = Scalar::one(f);
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  check_field(a.field, b.field);
  if (a.dim() != b.dim()) throw std::logic_error("vector: dim mismatch in +");
  Vector r = a;
  for (int i = 0; i < r.dim(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  check_field(a.field, b.field);
  if (a.dim() != b.dim()) throw std::logic_error("vector: dim mismatch in -");
  Vector r = a;
  for (int i = 0; i < r.dim(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Scalar& c, const Vector& v) {
  Vector r = v;
  for (int i = 0; i < r.dim(); ++i) r[i] = c * r[i];
  return r;
}

Scalar dot(const Vector& a, const Vector& b) {
  check_field(a.field, b.field);
  if (a.dim() != b.dim()) throw std::logic_error("vector: dim mismatch in dot");
  Scalar s = Scalar::zero(a.field);
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Vector tensor(const Vector& a, const Vector& b) {
  check_field(a.field, b.field);
  Vector r(a.field, a.dim() * b.dim());
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < b.dim(); ++j) r[i * b.dim() + j] = a[i] * b[j];
  }
  return r;
}

// ------------------------------------------------------------- LinearMap

bool LinearMap::is_zero() const {
  for (const Scalar& s : entries) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool LinearMap::operator==(const LinearMap& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] != o.entries[i]) return false;
  }
  return true;
}

LinearMap LinearMap::identity(Field f, int n) {
  LinearMap m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

LinearMap LinearMap::zero(Field f, int rows, int cols) { return LinearMap(f, rows, cols); }

LinearMap LinearMap::row(const Vector& covector) {
  LinearMap m(covector.field, 1, covector.dim());
  for (int i = 0; i < covector.dim(); ++i) m.at(0, i) = covector[i];
  return m;
}

LinearMap LinearMap::column(const Vector& v) {
  LinearMap m(v.field, v.dim(), 1);
  for (int i = 0; i < v.dim(); ++i) m.at(i, 0) = v[i];
  return m;
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  check_field(a.field, b.field);
  if (a.cols != b.rows) throw std::logic_error("linalg: composition shape mismatch");
  LinearMap r(a.field, a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return r;
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  check_field(a.field, b.field);
  if (a.rows != b.rows || a.cols != b.cols) throw std::logic_error("linalg: shape mismatch in +");
  LinearMap r = a;
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] += b.entries[i];
  return r;
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  check_field(a.field, b.field);
  if (a.rows != b.rows || a.cols != b.cols) throw std::logic_error("linalg: shape mismatch in -");
  LinearMap r = a;
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] -= b.entries[i];
  return r;
}

LinearMap operator*(const Scalar& c, const LinearMap& a) {
  LinearMap r = a;
  for (auto& e : r.entries) e = c * e;
  return r;
}

Vector apply(const LinearMap& a, const Vector& v) {
  check_field(a.field, v.field);
  if (a.cols != v.dim()) throw std::logic_error("linalg: apply shape mismatch");
  Vector r(a.field, a.rows);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) {
      if (a.at(i, j).is_zero() || v[j].is_zero()) continue;
      r[i] += a.at(i, j) * v[j];
    }
  }
  return r;
}

LinearMap transpose(const LinearMap& a) {
  LinearMap r(a.field, a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
  }
  return r;
}

LinearMap kron(const LinearMap& a, const LinearMap& b) {
  check_field(a.field, b.field);
  LinearMap r(a.field, a.rows * b.rows, a.cols * b.cols);
  for (int i1 = 0; i1 < a.rows; ++i1) {
    for (int j1 = 0; j1 < a.cols; ++j1) {
      const Scalar& s = a.at(i1, j1);
      if (s.is_zero()) continue;
      for (int i2 = 0; i2 < b.rows; ++i2) {
        for (int j2 = 0; j2 < b.cols; ++j2) {
          r.at(i1 * b.rows + i2, j1 * b.cols + j2) = s * b.at(i2, j2);
        }
      }
    }
  }
  return r;
}

LinearMap flip(Field f, int m, int n) {
  LinearMap r(f, m * n, m * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) r.at(j * m + i, i * n + j) = Scalar::one(f);
  }
  return r;
}

LinearMap matrix_power(const LinearMap& a, long long e) {
  if (a.rows != a.cols) throw std::logic_error("linalg: power of non-square matrix");
  if (e < 0) throw std::logic_error("linalg: negative matrix power");
  LinearMap result = LinearMap::identity(a.field, a.rows);
  LinearMap base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

LinearMap vstack(const LinearMap& a, const LinearMap& b) {
  check_field(a.field, b.field);
  if (a.cols != b.cols) throw std::logic_error("linalg: vstack column mismatch");
  LinearMap r(a.field, a.rows + b.rows, a.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
  }
  for (int i = 0; i < b.rows; ++i) {
    for (int j = 0; j < b.cols; ++j) r.at(a.rows + i, j) = b.at(i, j);
  }
  return r;
}

int rank(const LinearMap& a) {
  LinearMap m = a;
  return static_cast<int>(rref(m).size());
}

std::vector<Vector> nullspace(const LinearMap& a) {
  LinearMap m = a;
  const std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vector> basis;
  for (int free = 0; free < a.cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector v(a.field, a.cols);
    v[free] = Scalar::one(a.field);
    // Back-substitute: pivot row r forces x_{pivot[r]} = -m[r, free].
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -m.at(static_cast<int>(r), free);
    }
    // Normalize so the first nonzero coordinate is 1 (it already is when the
    // leading coordinate is the free variable, but earlier pivot columns may
    // carry the leading coefficient).
    for (int i = 0; i < v.dim(); ++i) {
      if (!v[i].is_zero()) {
        v = v[i].inverse() * v;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const LinearMap& a, const Vector& b) {
  check_field(a.field, b.field);
  if (b.dim() != a.rows) throw std::logic_error("linalg: solve shape mismatch");
  // Augment [a | b] and reduce.
  LinearMap m(a.field, a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
    m.at(i, a.cols) = b[i];
  }
  const std::vector<int> pivots = rref(m);
  if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;  // row [0 ... 0 | 1]
  Vector x(a.field, a.cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x[pivots[r]] = m.at(static_cast<int>(r), a.cols);
  }
  return x;
}

std::optional<LinearMap> solve_matrix(const LinearMap& a, const LinearMap& b) {
  check_field(a.field, b.field);
  if (a.rows != b.rows) throw std::logic_error("linalg: solve_matrix shape mismatch");
  LinearMap x(a.field, a.cols, b.cols);
  for (int c = 0; c < b.cols; ++c) {
    Vector col(a.field, b.rows);
    for (int i = 0; i < b.rows; ++i) col[i] = b.at(i, c);
    auto sol = solve(a, col);
    if (!sol) return std::nullopt;
    for (int i = 0; i < a.cols; ++i) x.at(i, c) = (*sol)[i];
  }
  return x;
}

std::optional<LinearMap> inverse(const LinearMap& a) {
  if (a.rows != a.cols) return std::nullopt;
  auto x = solve_matrix(a, LinearMap::identity(a.field, a.rows));
  if (!x) return std::nullopt;
  if (rank(a) != a.rows) return std::nullopt;
  return x;
}

// -------------------------------------------------------------- Bilinear

bool Bilinear::operator==(const Bilinear& o) const {
  if (out != o.out || left != o.left || right != o.right) return false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] != o.entries[i]) return false;
  }
  return true;
}

Vector bilinear_apply(const Bilinear& b, const Vector& x, const Vector& y) {
  check_field(b.field, x.field);
  check_field(b.field, y.field);
  if (x.dim() != b.left || y.dim() != b.right) {
    throw std::logic_error("bilinear: operand dim mismatch");
  }
  Vector r(b.field, b.out);
  for (int j = 0; j < b.left; ++j) {
    if (x[j].is_zero()) continue;
    for (int k = 0; k < b.right; ++k) {
      if (y[k].is_zero()) continue;
      const Scalar xy = x[j] * y[k];
      for (int i = 0; i < b.out; ++i) {
        if (b.at(i, j, k).is_zero()) continue;
        r[i] += b.at(i, j, k) * xy;
      }
    }
  }
  return r;
}

LinearMap bilinear_as_map(const Bilinear& b) {
  LinearMap m(b.field, b.out, b.left * b.right);
  for (int i = 0; i < b.out; ++i) {
    for (int j = 0; j < b.left; ++j) {
      for (int k = 0; k < b.right; ++k) m.at(i, j * b.right + k) = b.at(i, j, k);
    }
  }
  return m;
}

Bilinear bilinear_tensor(const Bilinear& a, const Bilinear& b) {
  check_field(a.field, b.field);
  Bilinear r(a.field, a.out * b.out, a.left * b.left, a.right * b.right);
  for (int i1 = 0; i1 < a.out; ++i1) {
    for (int j1 = 0; j1 < a.left; ++j1) {
      for (int k1 = 0; k1 < a.right; ++k1) {
        const Scalar& s = a.at(i1, j1, k1);
        if (s.is_zero()) continue;
        for (int i2 = 0; i2 < b.out; ++i2) {
          for (int j2 = 0; j2 < b.left; ++j2) {
            for (int k2 = 0; k2 < b.right; ++k2) {
              if (b.at(i2, j2, k2).is_zero()) continue;
              r.at(i1 * b.out + i2, j1 * b.left + j2, k1 * b.right + k2) = s * b.at(i2, j2, k2);
            }
          }
        }
      }
    }
  }
  return r;
}

Bilinear bilinear_opposite(const Bilinear& a) {
  Bilinear r(a.field, a.out, a.right, a.left);
  for (int i = 0; i < a.out; ++i) {
    for (int j = 0; j < a.left; ++j) {
      for (int k = 0; k < a.right; ++k) r.at(i, k, j) = a.at(i, j, k);
    }
  }
  return r;
}

LinearMap structure_left_mul(const Bilinear& m, const Vector& v) {
  LinearMap l(m.field, m.out, m.right);
  for (int j = 0; j < m.left; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < m.out; ++i) {
      for (int k = 0; k < m.right; ++k) l.at(i, k) += m.at(i, j, k) * v[j];
    }
  }
  return l;
}

LinearMap structure_right_mul(const Bilinear& m, const Vector& v) {
  LinearMap r(m.field, m.out, m.left);
  for (int k = 0; k < m.right; ++k) {
    if (v[k].is_zero()) continue;
    for (int i = 0; i < m.out; ++i) {
      for (int j = 0; j < m.left; ++j) r.at(i, j) += m.at(i, j, k) * v[k];
    }
  }
  return r;
}

std::optional<Vector> algebra_inverse(const Bilinear& mult, const Vector& unit, const Vector& a) {
  if (mult.left != mult.out || mult.right != mult.out || unit.dim() != mult.out ||
      a.dim() != mult.out) {
    throw std::logic_error("algebra_inverse: dims inconsistent");
  }
  const int n = mult.out;
  // Left multiplication by a and right multiplication by a, as matrices in
  // the unknown x; stack a x = unit over x a = unit.
  LinearMap lmul(mult.field, n, n);
  LinearMap rmul(mult.field, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        // (a * x)_i picks x_k with coefficient sum_j c[i][j][k] a_j.
        lmul.at(i, k) += mult.at(i, j, k) * a[j];
        // (x * a)_i picks x_j with coefficient sum_k c[i][j][k] a_k.
        rmul.at(i, j) += mult.at(i, j, k) * a[k];
      }
    }
  }
  LinearMap sys = vstack(lmul, rmul);
  Vector rhs(mult.field, 2 * n);
  for (int i = 0; i < n; ++i) {
    rhs[i] = unit[i];
    rhs[n + i] = unit[i];
  }
  return solve(sys, rhs);
}

}  // namespace hopfpi
