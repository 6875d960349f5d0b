/// @file scalar.cpp
/// @brief Implementation of exact field scalars over Q and GF(p).

#include "hopfpi/scalar.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace hopfpi {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// Canonical residue of an integer mod p, in [0, p).
BigInt mod_reduce(const BigInt& n, long long p) {
  BigInt r = n % p;
  if (r < 0) r += p;
  return r;
}

/// Modular inverse by extended Euclid; a must be nonzero mod p.
BigInt mod_inverse(const BigInt& a, long long p) {
  BigInt r0 = p, r1 = mod_reduce(a, p);
  BigInt t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1) throw std::domain_error("scalar: not invertible mod p");
  return mod_reduce(t0, p);
}

}  // namespace

Field Field::gf(long long p) {
  if (!is_prime(p)) throw std::domain_error("Field::gf: p must be prime");
  return Field{p};
}

Scalar::Scalar(BigRat value, Field field) : value_(std::move(value)), field_(field) {
  if (!field_.is_rational()) {
    const long long p = field_.characteristic;
    // A rational n/d with d nonzero mod p reduces to n * d^{-1} mod p.
    BigInt num = boost::multiprecision::numerator(value_);
    BigInt den = boost::multiprecision::denominator(value_);
    if (mod_reduce(den, p) == 0) {
      throw std::domain_error("scalar: denominator divisible by field characteristic");
    }
    value_ = BigRat(mod_reduce(num * mod_inverse(den, p), p));
  }
}

Scalar Scalar::frac(long long n, long long d, Field f) {
  if (d == 0) throw std::domain_error("scalar: zero denominator");
  return Scalar(BigRat(n, d), f);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) throw std::logic_error("scalar: mixed-field arithmetic");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  return Scalar(value_ + o.value_, field_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  return Scalar(value_ - o.value_, field_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  return Scalar(value_ * o.value_, field_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

Scalar Scalar::operator-() const { return Scalar(-value_, field_); }

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return value_ == o.value_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("scalar: inverse of zero");
  if (field_.is_rational()) return Scalar(BigRat(1) / value_, field_);
  BigInt num = boost::multiprecision::numerator(value_);
  return Scalar(BigRat(mod_inverse(num, field_.characteristic)), field_);
}

std::string Scalar::str() const {
  const BigInt num = boost::multiprecision::numerator(value_);
  const BigInt den = boost::multiprecision::denominator(value_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<Scalar> Scalar::parse(const std::string& text, Field f) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  const std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto valid_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  if (!valid_int(num_part) || !valid_int(den_part)) return std::nullopt;
  try {
    BigInt num(num_part), den(den_part);
    if (den == 0) return std::nullopt;
    return Scalar(BigRat(num, den), f);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace hopfpi
