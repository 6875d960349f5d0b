/// @file scalar.hpp
/// @brief Exact ground-field scalars: arbitrary-precision rationals and
///        prime-field residues behind one value type.
///
/// Every computation in this library is an exact algebraic identity, so the
/// scalar type admits no floating point at all.  A Scalar is either an
/// element of Q (stored as a normalized arbitrary-precision rational) or an
/// element of GF(p) for a prime p (stored as the canonical residue in
/// [0, p)).  The field is part of the value; mixing scalars from different
/// fields is a programming error and throws.

#ifndef HOPFPI_SCALAR_HPP
#define HOPFPI_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace hopfpi {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// The ground field k: the rationals (characteristic 0) or GF(p).
struct Field {
  /// 0 means Q; otherwise a prime p and the field is GF(p).
  long long characteristic = 0;

  bool is_rational() const { return characteristic == 0; }
  bool operator==(const Field&) const = default;

  /// Constructs GF(p), validating primality (trial division; p is small).
  static Field gf(long long p);
  /// The field of rational numbers.
  static Field rationals() { return Field{0}; }
};

/// An exact element of the ground field.
///
/// Invariants: over Q the value is in lowest terms with positive denominator
/// (maintained by cpp_rational); over GF(p) the value is an integer residue
/// with 0 <= value < p.
class Scalar {
 public:
  /// Zero over Q.  Prefer Scalar::zero(field) when the field is known.
  Scalar() = default;

  /// General constructor; reduces mod p when the field is GF(p).
  Scalar(BigRat value, Field field);

  static Scalar zero(Field f) { return Scalar(BigRat(0), f); }
  static Scalar one(Field f) { return Scalar(BigRat(1), f); }
  static Scalar of(long long n, Field f) { return Scalar(BigRat(n), f); }
  /// n/d as an exact scalar (in GF(p) this is n * d^{-1}).
  static Scalar frac(long long n, long long d, Field f);

  const Field& field() const { return field_; }
  const BigRat& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Exact division; throws std::domain_error on division by zero.
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Multiplicative inverse; throws std::domain_error at zero.
  Scalar inverse() const;

  /// Canonical text form: an integer when the denominator is 1 (always, over
  /// GF(p)), otherwise "p/q".
  std::string str() const;

  /// Parses the canonical text forms.  Accepts optional sign, "n" and "n/d";
  /// rejects zero denominators and non-normalizable input.  Returns nullopt
  /// on malformed text.
  static std::optional<Scalar> parse(const std::string& text, Field f);

 private:
  void check_same_field(const Scalar& o) const;

  BigRat value_ = 0;
  Field field_ = Field::rationals();
};

}  // namespace hopfpi

#endif  // HOPFPI_SCALAR_HPP
