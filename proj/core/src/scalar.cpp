#include "pgma/scalar.hpp"

#include <ostream>

#include "pgma/error.hpp"

namespace pgma {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

mpz_class modulus_of(const Field& f) {
  return mpz_class(static_cast<unsigned long>(f.characteristic()));
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("prime required, got " + std::to_string(p));
  return Field(p);
}

std::string Field::describe() const {
  return is_rationals() ? "rationals" : "prime " + std::to_string(modulus_);
}

Scalar Field::zero() const { return Scalar(*this, mpq_class(0)); }
Scalar Field::one() const { return Scalar(*this, mpq_class(1)); }
Scalar Field::from_int(long v) const { return Scalar(*this, mpq_class(v)); }

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (sgn(den) == 0) throw DomainError("zero denominator");
  if (is_rationals()) return Scalar(*this, mpq_class(num, den));
  mpz_class p = modulus_of(*this);
  mpz_class d = den;
  d %= p;
  if (sgn(d) == 0) throw DomainError("denominator divisible by the characteristic");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
  return Scalar(*this, mpq_class(mpz_class(num * inv)));
}

void Scalar::reduce() {
  if (field_.is_rationals()) {
    value_.canonicalize();
    return;
  }
  // value_ is always an integer here
  mpz_class r = value_.get_num();
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus_of(field_).get_mpz_t());
  value_ = mpq_class(r);
}

void Scalar::require_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("scalars over " + field_.describe() + " and " + o.field_.describe());
}

std::string Scalar::to_string() const { return value_.get_str(); }

Scalar Scalar::operator-() const { return Scalar(field_, -value_); }

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  value_ += o.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  value_ -= o.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  value_ *= o.value_;
  reduce();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (field_.is_rationals()) return Scalar(field_, 1 / value_);
  return field_.from_fraction(mpz_class(1), value_.get_num());
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  return *this *= o.inverse();
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  require_same(a);
  require_same(b);
  if (a.is_zero() || b.is_zero()) return;
  if (field_.is_rationals()) {
    value_ += a.value_ * b.value_;
  } else {
    mpz_class t = a.value_.get_num() * b.value_.get_num();
    value_ = mpq_class(mpz_class(value_.get_num() + t));
    reduce();
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same(b);
  return a.value_ == b.value_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.value_.get_str(); }

}  // namespace pgma
