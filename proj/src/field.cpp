#include "comdec/field.hpp"

#include <boost/multiprecision/integer.hpp>

namespace comdec {

bool is_prime_int(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::int64_t p) {
  if (!is_prime_int(p)) throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
  return Field(Kind::Prime, p);
}

std::string Field::to_string() const {
  return is_rationals() ? "Q" : "F" + std::to_string(p_);
}

namespace {

BigInt mod_canonical(BigInt v, const BigInt& p) {
  v %= p;
  if (v < 0) v += p;
  return v;
}

// extended Euclid; x is only valid when gcd(a, p) == 1
BigInt mod_inverse(const BigInt& a, const BigInt& p) {
  BigInt r0 = p, r1 = mod_canonical(a, p), x0 = 0, x1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt x2 = x0 - q * x1;
    r0 = r1; r1 = r2;
    x0 = x1; x1 = x2;
  }
  if (r0 != 1) throw DivisionByZero("element has no inverse mod p");
  return mod_canonical(x0, p);
}

}  // namespace

Scalar::Scalar(const Field& f, BigInt num, BigInt den)
    : field_(f), num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void Scalar::canonicalize() {
  if (field_.is_rationals()) {
    if (den_ == 0) throw DivisionByZero("zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
  } else {
    BigInt p = field_.modulus();
    if (den_ != 1) {
      BigInt d = mod_canonical(den_, p);
      if (d == 0) throw DivisionByZero("zero denominator");
      num_ = num_ * mod_inverse(d, p);
      den_ = 1;
    }
    num_ = mod_canonical(num_, p);
  }
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatch("scalars from " + field_.to_string() + " and " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  r.canonicalize();
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  return Scalar(field_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  return Scalar(field_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  return Scalar(field_, num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  if (o.is_zero()) throw DivisionByZero("division by zero in " + field_.to_string());
  return Scalar(field_, num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inverse() const {
  return one(field_) / *this;
}

Scalar Scalar::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc = one(field_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return num_ == o.num_ && den_ == o.den_;
}

std::string Scalar::to_string() const {
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_int(text)) throw ParseError("not an integer: '" + text + "'");
      return Scalar(f, BigInt(text), 1);
    }
    std::string ns = text.substr(0, slash), ds = text.substr(slash + 1);
    if (!is_int(ns) || !is_int(ds)) throw ParseError("not a fraction: '" + text + "'");
    return Scalar(f, BigInt(ns), BigInt(ds));
  } catch (const std::exception& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw ParseError("cannot parse scalar '" + text + "'");
  }
}

}  // namespace comdec
