#include "koszul/field.hpp"

#include <stdexcept>

namespace koszul {

std::string FieldSpec::str() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
}

bool is_prime(std::uint32_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

void validate(const FieldSpec& field) {
  if (field.characteristic != 0 && !is_prime(field.characteristic))
    throw std::invalid_argument("field characteristic must be 0 or a prime, got " +
                                std::to_string(field.characteristic));
}

Scalar Scalar::zero(FieldSpec field) { return Scalar(BigRational(0), field.characteristic); }

Scalar Scalar::one(FieldSpec field) { return Scalar(BigRational(1), field.characteristic); }

Scalar Scalar::of(FieldSpec field, long long value) {
  return Scalar(BigRational(value), field.characteristic);
}

Scalar Scalar::of(FieldSpec field, BigRational value) {
  return Scalar(std::move(value), field.characteristic);
}

namespace {

// Inverse of a mod p by extended Euclid; a in [1, p).
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::domain_error("not invertible mod p");
  return ((old_s % p) + p) % p;
}

}  // namespace

void Scalar::normalize() {
  if (char_ == 0) return;
  const std::int64_t p = char_;
  BigInt num = boost::multiprecision::numerator(value_);
  BigInt den = boost::multiprecision::denominator(value_);
  std::int64_t n = static_cast<std::int64_t>(num % p);
  if (n < 0) n += p;
  if (den != 1) {
    const std::int64_t d = static_cast<std::int64_t>(den % p);
    if (d == 0) throw std::domain_error("denominator vanishes mod p");
    n = (n * mod_inverse(((d % p) + p) % p, p)) % p;
  }
  value_ = n;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (char_ != o.char_) throw std::logic_error("mixed-field scalar arithmetic");
}

Scalar Scalar::operator-() const { return Scalar(-value_, char_); }

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  return Scalar(value_ + o.value_, char_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  return Scalar(value_ - o.value_, char_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  return Scalar(value_ * o.value_, char_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (char_ == 0) return Scalar(1 / value_, 0);
  const std::int64_t a = static_cast<std::int64_t>(boost::multiprecision::numerator(value_));
  return Scalar(BigRational(mod_inverse(a, char_)), char_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(o);
  return value_ == o.value_;
}

std::string Scalar::str() const { return value_.str(); }

}  // namespace koszul
