#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace pgma {

class Scalar;

/// The ground field: the rationals, or Z/p for a prime p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws DomainError unless p is prime.
  static Field prime(std::uint64_t p);

  bool is_rationals() const { return modulus_ == 0; }
  std::uint64_t characteristic() const { return modulus_; }
  std::string describe() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  /// num/den reduced into the field; den must be invertible.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_ = 0;
};

/// An exact field element. Over Z/p the value is kept as the canonical
/// residue in [0, p). Mixing fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  const Field& field() const { return field_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  /// Numerator and denominator of the canonical representative.
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws DomainError on division by zero.
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  /// this += a * b, without a temporary.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  friend class Field;
  Scalar(Field f, mpq_class v) : field_(f), value_(std::move(v)) { reduce(); }
  void reduce();
  void require_same(const Scalar& o) const;

  Field field_;
  mpq_class value_;
};

}  // namespace pgma
