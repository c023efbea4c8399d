#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace koszul {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// The coefficient field: characteristic 0 means the rationals, otherwise a
// prime p gives GF(p).
struct FieldSpec {
  std::uint32_t characteristic = 0;

  bool is_rational() const { return characteristic == 0; }
  bool operator==(const FieldSpec&) const = default;
  std::string str() const;
};

bool is_prime(std::uint32_t m);

// Throws std::invalid_argument unless characteristic is 0 or prime.
void validate(const FieldSpec& field);

// An exact field element.  Over the rationals the value is an arbitrary
// precision fraction; over GF(p) it is the canonical residue in [0, p).
class Scalar {
 public:
  Scalar() = default;
  static Scalar zero(FieldSpec field);
  static Scalar one(FieldSpec field);
  static Scalar of(FieldSpec field, long long value);
  static Scalar of(FieldSpec field, BigRational value);

  FieldSpec field() const { return {char_}; }
  bool is_zero() const { return value_.is_zero(); }
  const BigRational& value() const { return value_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Scalar(BigRational v, std::uint32_t c) : value_(std::move(v)), char_(c) { normalize(); }
  void normalize();
  void require_same_field(const Scalar& o) const;

  BigRational value_ = 0;
  std::uint32_t char_ = 0;
};

}  // namespace koszul
