#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "comdec/algebra.hpp"

namespace comdec {

/** Generalized quaternion algebra on basis {1, i, j, k}.
 *
 *  char(F) != 2: i^2 = a, j^2 = b, k = ij = -ji, with a, b nonzero.
 *  char(F) == 2: i^2 = a + i, j^2 = b nonzero, k = ij = j(i + 1).
 *
 *  The table variant is chosen by the field characteristic. Conjugation,
 *  norm and trace follow the standard involution and exist only away from
 *  characteristic 2. */
class QuaternionAlgebra {
 public:
  // throws InvalidParams when a or b violates the characteristic-specific
  // invariant, FieldMismatch when a, b live in a different field
  QuaternionAlgebra(const Field& field, const Scalar& a, const Scalar& b);

  const Field& field() const { return field_; }
  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  bool char2_form() const { return char2_; }
  const std::shared_ptr<const Algebra>& algebra() const { return alg_; }

  Element one() const { return alg_->basis_element(0); }
  Element i() const { return alg_->basis_element(1); }
  Element j() const { return alg_->basis_element(2); }
  Element k() const { return alg_->basis_element(3); }
  Element element(const Scalar& t, const Scalar& x, const Scalar& y, const Scalar& z) const;

  // q = t + xi + yj + zk  ->  t - xi - yj - zk; throws UnsupportedCharacteristic
  // in characteristic 2 and AlgebraMismatch for foreign elements
  Element conjugate(const Element& q) const;
  // norm(q) = q * conj(q) = t^2 - a x^2 - b y^2 + ab z^2
  Scalar norm(const Element& q) const;
  // trace(q) = q + conj(q) = 2t
  Scalar trace(const Element& q) const;

 private:
  void require_classical(const char* op) const;
  Field field_;
  Scalar a_, b_;
  bool char2_;
  std::shared_ptr<const Algebra> alg_;
};

// convenience: just the structure-constant algebra
std::shared_ptr<const Algebra> build_quaternion(const Field& field, const Scalar& a,
                                                const Scalar& b);

/** Legendre symbol (a/p) for odd prime p, by Euler's criterion.
 *  Returns 0 iff p | a. Throws InvalidPrime unless p is an odd prime. */
int legendre_symbol(const BigInt& a, std::int64_t p);

/** A place of Q: the real place or a finite prime. */
class Place {
 public:
  static Place infinity() { return Place(0); }
  static Place prime(std::int64_t p);  // InvalidPrime unless p is prime
  bool is_infinity() const { return p_ == 0; }
  std::int64_t prime_value() const { return p_; }
  std::string to_string() const;

 private:
  explicit Place(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

/** Hilbert symbol (a, b)_v in {-1, +1} for nonzero rationals a, b.
 *  Throws ZeroArgument on zero input, FieldMismatch off Q. */
int hilbert_symbol(const Scalar& a, const Scalar& b, const Place& v);

// the places where (a, b)_v can be -1: infinity, 2, and the odd primes
// dividing the numerator or denominator of a or b
std::vector<Place> relevant_places(const Scalar& a, const Scalar& b);

struct ZeroDivisorPair {
  Element q;  // nonzero, q * r = 0
  Element r;  // nonzero
};

/** Deterministic zero-divisor search in a quaternion algebra.
 *
 *  Away from characteristic 2 the candidates are elements of norm zero
 *  (their conjugate is the partner): over Q integer coordinate quadruples
 *  scanned by increasing height up to `bound`, over F_p all residue
 *  quadruples. In characteristic 2 the search runs over candidate pairs.
 *  Returns nullopt when the bounded search exhausts. `workers` > 1
 *  parallelizes the rational scan; determinism is only guaranteed with a
 *  single worker. */
std::optional<ZeroDivisorPair> find_zero_divisor(const QuaternionAlgebra& qa,
                                                 std::int64_t bound, int workers = 1);

enum class SplitVerdict { Division, Split };

struct SplitClassification {
  SplitVerdict verdict;
  // for Split: the zero-divisor certificate when the bounded search found one
  std::optional<ZeroDivisorPair> certificate;
  // for Q: the places where the Hilbert symbol is -1 (empty for Split)
  std::vector<Place> obstructions;
};

/** Split/division classification.
 *  Over Q: Division iff some Hilbert symbol over the relevant places is -1.
 *  Over F_p (p odd): always Split, with an exhaustively found certificate.
 *  Characteristic 2 is not classified: UnsupportedField. */
SplitClassification classify_split(const QuaternionAlgebra& qa, std::int64_t bound = 10,
                                   int workers = 1);

}  // namespace comdec
