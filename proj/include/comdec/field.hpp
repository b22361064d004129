#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "comdec/error.hpp"

namespace comdec {

using BigInt = boost::multiprecision::cpp_int;

/** Field: descriptor for the base field, either Q or F_p (p prime). */
class Field {
 public:
  enum class Kind { Rationals, Prime };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  static Field prime(std::int64_t p);  // throws NonPrimeModulus

  Kind kind() const { return kind_; }
  std::int64_t modulus() const { return p_; }
  std::int64_t characteristic() const { return kind_ == Kind::Rationals ? 0 : p_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  bool finite() const { return kind_ == Kind::Prime; }

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Field(Kind k, std::int64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::int64_t p_;
};

/** Scalar: an exact element of Q (reduced fraction, positive denominator)
 *  or of F_p (canonical residue in [0, p)). All arithmetic is exact; mixing
 *  scalars from different fields throws FieldMismatch. */
class Scalar {
 public:
  Scalar(const Field& f, BigInt num, BigInt den);  // canonicalizes
  static Scalar zero(const Field& f) { return Scalar(f, 0, 1); }
  static Scalar one(const Field& f) { return Scalar(f, 1, 1); }
  static Scalar of_int(const Field& f, std::int64_t n) { return Scalar(f, n, 1); }

  // Parses "a/b" or "a" over Q, a decimal integer over F_p (reduced mod p).
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
  Scalar inverse() const;                   // throws DivisionByZero
  Scalar pow(std::int64_t e) const;         // negative e inverts first

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "num/den" with "/den" elided when den == 1; plain residue over F_p.
  std::string to_string() const;

 private:
  void canonicalize();
  void check_same(const Scalar& o) const;

  Field field_;
  BigInt num_;
  BigInt den_;
};

bool is_prime_int(std::int64_t n);

}  // namespace comdec
