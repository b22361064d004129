#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "comdec/quaternion.hpp"
#include "comdec/rng.hpp"
#include "helpers.hpp"

using namespace comdec;
using th::fp;
using th::q;
using th::sc;
using th::si;

namespace {

QuaternionAlgebra quat(std::int64_t a, std::int64_t b) {
  return QuaternionAlgebra(q(), si(q(), a), si(q(), b));
}

// oracle: quadratic residues mod p by exhaustive squaring
std::set<std::int64_t> squares_mod(std::int64_t p) {
  std::set<std::int64_t> s;
  for (std::int64_t x = 1; x < p; ++x) s.insert(x * x % p);
  return s;
}

// oracle: does x^2 + y^2 + z^2 = 0 (mod 8) admit a solution with not all of
// x, y, z even? Unit squares are 1 mod 8, so this decides 2-adic isotropy of
// the (-1,-1) norm form.
bool primitive_sum_of_three_squares_mod8() {
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      for (int z = 0; z < 8; ++z) {
        if (x % 2 == 0 && y % 2 == 0 && z % 2 == 0) continue;
        if ((x * x + y * y + z * z) % 8 == 0) return true;
      }
  return false;
}

}  // namespace

TEST_CASE("hamilton relations over Q") {
  auto h = quat(-1, -1);
  CHECK(h.i() * h.j() == h.k());
  CHECK(h.j() * h.i() == -h.k());
  CHECK(h.i() * h.i() == -h.one());
  CHECK(h.k() * h.k() == -h.one());
  CHECK(h.i() * h.k() == -h.j());  // ik = aj with a = -1
  CHECK(h.algebra()->validate().ok);
}

TEST_CASE("general parameters keep the derived relations") {
  auto g = QuaternionAlgebra(q(), si(q(), 2), si(q(), 3));
  CHECK(g.algebra()->validate().ok);
  CHECK(g.i() * g.j() == g.k());
  CHECK(g.k() * g.k() == g.one().scaled(si(q(), -6)));
  auto f7 = QuaternionAlgebra(fp(7), si(fp(7), 3), si(fp(7), 5));
  CHECK(f7.algebra()->validate().ok);
}

TEST_CASE("characteristic 2 table") {
  const Field f2 = fp(2);
  auto h = QuaternionAlgebra(f2, si(f2, 1), si(f2, 1));
  CHECK(h.char2_form());
  CHECK(h.algebra()->validate().ok);
  // i^2 = a + i
  CHECK(h.i() * h.i() == h.one() + h.i());
  // k = ij = j(i + 1)
  CHECK(h.i() * h.j() == h.j() * (h.i() + h.one()));
  CHECK(h.j() * h.i() == h.k() + h.j());
  // a = 0 is allowed here: i^2 = i
  auto idem = QuaternionAlgebra(f2, si(f2, 0), si(f2, 1));
  CHECK(idem.algebra()->validate().ok);
  CHECK(idem.i() * idem.i() == idem.i());
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(quat(0, 1), InvalidParams);
  CHECK_THROWS_AS(quat(1, 0), InvalidParams);
  CHECK_THROWS_AS(QuaternionAlgebra(fp(2), si(fp(2), 1), si(fp(2), 0)), InvalidParams);
  CHECK_THROWS_AS(QuaternionAlgebra(q(), si(fp(3), 1), si(q(), 1)), FieldMismatch);
}

TEST_CASE("conjugation, norm and trace") {
  auto h = quat(-1, -1);
  CHECK(h.norm(h.one()) == si(q(), 1));
  CHECK(h.norm(h.i()) == si(q(), 1));
  CHECK(h.trace(h.i()).is_zero());

  Element e = h.element(si(q(), 2), si(q(), -1), sc(q(), "1/2"), si(q(), 3));
  // q * conj(q) must equal norm(q) * 1 through the structure constants
  CHECK(e * h.conjugate(e) == h.one().scaled(h.norm(e)));
  CHECK(e + h.conjugate(e) == h.one().scaled(h.trace(e)));

  auto c2 = QuaternionAlgebra(fp(2), si(fp(2), 1), si(fp(2), 1));
  CHECK_THROWS_AS(c2.conjugate(c2.i()), UnsupportedCharacteristic);
  CHECK_THROWS_AS(c2.norm(c2.i()), UnsupportedCharacteristic);

  auto other = quat(-1, -1);
  CHECK_THROWS_AS(h.norm(other.i()), AlgebraMismatch);
}

TEST_CASE("norm is multiplicative") {
  Rng rng(7);
  auto h = quat(-1, -1);
  auto g = QuaternionAlgebra(fp(7), si(fp(7), 3), si(fp(7), 5));
  for (int trial = 0; trial < 30; ++trial) {
    for (const auto& qa : {h, g}) {
      const Field& f = qa.field();
      Element q1 = qa.element(rng.scalar(f, 6), rng.scalar(f, 6), rng.scalar(f, 6),
                              rng.scalar(f, 6));
      Element q2 = qa.element(rng.scalar(f, 6), rng.scalar(f, 6), rng.scalar(f, 6),
                              rng.scalar(f, 6));
      CHECK(qa.norm(q1 * q2) == qa.norm(q1) * qa.norm(q2));
    }
  }
}

TEST_CASE("legendre symbol matches exhaustive squares for p < 100") {
  for (std::int64_t p = 3; p < 100; ++p) {
    if (!is_prime_int(p)) continue;
    auto sq = squares_mod(p);
    for (std::int64_t a = 0; a < p; ++a) {
      int expected = a == 0 ? 0 : (sq.count(a) ? 1 : -1);
      CHECK(legendre_symbol(BigInt(a), p) == expected);
      CHECK(legendre_symbol(BigInt(a - p), p) == expected);  // negative input
    }
  }
  CHECK(legendre_symbol(BigInt(2), 7) == 1);
  CHECK(legendre_symbol(BigInt(3), 7) == -1);
  CHECK_THROWS_AS(legendre_symbol(BigInt(1), 2), InvalidPrime);
  CHECK_THROWS_AS(legendre_symbol(BigInt(1), 9), InvalidPrime);
}

TEST_CASE("hilbert symbol frozen values") {
  auto h = [&](std::int64_t a, std::int64_t b, const Place& v) {
    return hilbert_symbol(si(q(), a), si(q(), b), v);
  };
  Place inf = Place::infinity(), two = Place::prime(2), three = Place::prime(3);

  CHECK(h(-1, -1, inf) == -1);
  // oracle: the (-1,-1) norm form has no primitive zero mod 8, so the symbol
  // at 2 cannot be +1
  CHECK_FALSE(primitive_sum_of_three_squares_mod8());
  CHECK(h(-1, -1, two) == -1);
  CHECK(h(-1, -1, three) == 1);

  for (std::int64_t b : {2, 3, 5, 7, -6})
    for (const Place& v : {inf, two, three, Place::prime(5), Place::prime(7)})
      CHECK(h(1, b, v) == 1);  // x = 1, y = 0 represents 1

  CHECK(h(2, 3, two) == -1);
  CHECK(h(2, 3, three) == -1);
  CHECK(h(2, 3, inf) == 1);
  CHECK(h(-1, 3, three) == -1);

  // rational (non-integer) arguments: (1/2, 3)_v = (2, 3)_v since 1/2 = 2/4
  CHECK(hilbert_symbol(sc(q(), "1/2"), si(q(), 3), two) == -1);
  CHECK(hilbert_symbol(sc(q(), "1/2"), si(q(), 3), three) == -1);

  CHECK_THROWS_AS(h(0, 1, two), ZeroArgument);
  CHECK_THROWS_AS(hilbert_symbol(si(fp(3), 1), si(fp(3), 1), two), FieldMismatch);
  CHECK_THROWS_AS(Place::prime(6), InvalidPrime);
}

TEST_CASE("hilbert product formula on random pairs") {
  Rng rng(2026);
  int checked = 0;
  while (checked < 100) {
    Scalar a = rng.scalar(q(), 30), b = rng.scalar(q(), 30);
    if (a.is_zero() || b.is_zero()) continue;
    ++checked;
    int prod = 1;
    for (const Place& v : relevant_places(a, b)) prod *= hilbert_symbol(a, b, v);
    CHECK(prod == 1);
  }
}

TEST_CASE("relevant places") {
  auto places = relevant_places(sc(q(), "3/5"), si(q(), 2));
  REQUIRE(places.size() == 4);
  CHECK(places[0].is_infinity());
  CHECK(places[1].prime_value() == 2);
  CHECK(places[2].prime_value() == 3);
  CHECK(places[3].prime_value() == 5);
}

TEST_CASE("classification over Q") {
  auto division = classify_split(quat(-1, -1));
  CHECK(division.verdict == SplitVerdict::Division);
  REQUIRE(division.obstructions.size() == 2);
  CHECK(division.obstructions[0].is_infinity());
  CHECK(division.obstructions[1].prime_value() == 2);
  CHECK_FALSE(division.certificate.has_value());

  auto split = classify_split(quat(1, 5));
  CHECK(split.verdict == SplitVerdict::Split);
  REQUIRE(split.certificate.has_value());
  const auto& cert = *split.certificate;
  CHECK_FALSE(cert.q.is_zero());
  CHECK_FALSE(cert.r.is_zero());
  CHECK((cert.q * cert.r).is_zero());

  // the classical certificate: (1 + i)(1 - i) = 1 - i^2 = 0 when i^2 = 1
  auto h = quat(1, 5);
  Element u = h.one() + h.i(), v = h.one() - h.i();
  CHECK((u * v).is_zero());
}

TEST_CASE("division verdict is consistent with the bounded search") {
  auto h = quat(-1, -1);
  CHECK_FALSE(find_zero_divisor(h, 10).has_value());
  auto g = quat(-2, -3);  // also division: obstructed at the real place
  CHECK(hilbert_symbol(si(q(), -2), si(q(), -3), Place::infinity()) == -1);
  CHECK_FALSE(find_zero_divisor(g, 6).has_value());
}

TEST_CASE("zero divisors found by the search satisfy the norm condition") {
  for (auto [a, b] : std::initializer_list<std::pair<int, int>>{{1, 1}, {1, 5}, {4, -3}}) {
    auto h = quat(a, b);
    auto found = find_zero_divisor(h, 10);
    REQUIRE(found.has_value());
    CHECK(h.norm(found->q).is_zero());
    CHECK((found->q * found->r).is_zero());
    CHECK_FALSE(found->q.is_zero());
    CHECK_FALSE(found->r.is_zero());
  }
}

TEST_CASE("multi-worker search agrees with single-worker") {
  auto h = quat(1, 5);
  auto one = find_zero_divisor(h, 6, 1);
  auto four = find_zero_divisor(h, 6, 4);
  REQUIRE(one.has_value());
  REQUIRE(four.has_value());
  CHECK(one->q == four->q);
  CHECK_FALSE(find_zero_divisor(quat(-1, -1), 5, 4).has_value());
}

TEST_CASE("classification over F_p") {
  auto g = QuaternionAlgebra(fp(3), si(fp(3), 1), si(fp(3), 1));
  auto res = classify_split(g);
  CHECK(res.verdict == SplitVerdict::Split);
  REQUIRE(res.certificate.has_value());
  CHECK((res.certificate->q * res.certificate->r).is_zero());
  CHECK(g.norm(res.certificate->q).is_zero());

  for (std::int64_t p : {5, 7, 13}) {
    auto qa = QuaternionAlgebra(fp(p), si(fp(p), p - 1), si(fp(p), p - 1));
    auto r = classify_split(qa);
    CHECK(r.verdict == SplitVerdict::Split);
    REQUIRE(r.certificate.has_value());
    CHECK((r.certificate->q * r.certificate->r).is_zero());
  }
}

TEST_CASE("characteristic 2 classification is out of scope, search still works") {
  auto c2 = QuaternionAlgebra(fp(2), si(fp(2), 1), si(fp(2), 1));
  CHECK_THROWS_AS(classify_split(c2), UnsupportedField);
  auto found = find_zero_divisor(c2, 1);
  REQUIRE(found.has_value());
  CHECK_FALSE(found->q.is_zero());
  CHECK_FALSE(found->r.is_zero());
  CHECK((found->q * found->r).is_zero());
}

TEST_CASE("matrix algebras over the rational quaternions decompose") {
  auto h = build_quaternion(q(), si(q(), -1), si(q(), -1));

  auto m1 = build_matrix_algebra(h, 1);
  CHECK(m1->validate().ok);
  auto r1 = m1->check_decomposition();
  CHECK(r1.holds);
  CHECK(r1.dim_sum == 4);
  CHECK(r1.dim_center == 1);
  CHECK(r1.dim_commutator == 3);

  auto m2 = build_matrix_algebra(h, 2);
  CHECK(m2->dim() == 16);
  CHECK(m2->validate().ok);
  auto r2 = m2->check_decomposition();
  CHECK(r2.holds);
  CHECK(r2.dim_sum == 16);
  CHECK(r2.dim_center == 1);
  CHECK(r2.dim_commutator == 15);
}
