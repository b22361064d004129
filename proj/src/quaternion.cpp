#include "comdec/quaternion.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <limits>
#include <thread>

namespace comdec {

namespace {

void push_term(Algebra::SparseVec& v, int idx, const Scalar& c) {
  if (!c.is_zero()) v.emplace_back(idx, c);
}

}  // namespace

QuaternionAlgebra::QuaternionAlgebra(const Field& field, const Scalar& a, const Scalar& b)
    : field_(field), a_(a), b_(b), char2_(field.characteristic() == 2) {
  if (!(a.field() == field) || !(b.field() == field))
    throw FieldMismatch("quaternion parameters must live in the base field");
  if (b_.is_zero()) throw InvalidParams("quaternion parameter b must be nonzero");
  if (!char2_ && a_.is_zero()) throw InvalidParams("quaternion parameter a must be nonzero");

  Scalar one = Scalar::one(field_);
  Scalar ab = a_ * b_;
  std::map<std::pair<int, int>, Algebra::SparseVec> table;
  for (int t = 0; t < 4; ++t) {
    table[{0, t}] = {{t, one}};
    if (t > 0) table[{t, 0}] = {{t, one}};
  }
  auto set = [&](int i, int j, std::initializer_list<std::pair<int, Scalar>> terms) {
    Algebra::SparseVec v;
    for (const auto& [idx, c] : terms) push_term(v, idx, c);
    table[{i, j}] = std::move(v);
  };
  if (!char2_) {
    set(1, 1, {{0, a_}});
    set(1, 2, {{3, one}});
    set(1, 3, {{2, a_}});
    set(2, 1, {{3, -one}});
    set(2, 2, {{0, b_}});
    set(2, 3, {{1, -b_}});
    set(3, 1, {{2, -a_}});
    set(3, 2, {{1, b_}});
    set(3, 3, {{0, -ab}});
  } else {
    set(1, 1, {{0, a_}, {1, one}});
    set(1, 2, {{3, one}});
    set(1, 3, {{2, a_}, {3, one}});
    set(2, 1, {{2, one}, {3, one}});
    set(2, 2, {{0, b_}});
    set(2, 3, {{0, b_}, {1, b_}});
    set(3, 1, {{2, a_}});
    set(3, 2, {{1, b_}});
    set(3, 3, {{0, ab}});
  }

  auto alg = Algebra::make(field_, 4, {"1", "i", "j", "k"},
                           {one, Scalar::zero(field_), Scalar::zero(field_), Scalar::zero(field_)},
                           std::move(table));
  auto report = alg->validate();
  if (!report.ok) throw Error("internal: quaternion table failed validation");
  alg_ = alg;
}

Element QuaternionAlgebra::element(const Scalar& t, const Scalar& x, const Scalar& y,
                                   const Scalar& z) const {
  return alg_->element({t, x, y, z});
}

void QuaternionAlgebra::require_classical(const char* op) const {
  if (char2_)
    throw UnsupportedCharacteristic(std::string(op) +
                                    " is undefined for characteristic-2 quaternions");
}

Element QuaternionAlgebra::conjugate(const Element& q) const {
  require_classical("conjugate");
  if (&q.algebra() != alg_.get())
    throw AlgebraMismatch("element does not belong to this quaternion algebra");
  return element(q.coord(0), -q.coord(1), -q.coord(2), -q.coord(3));
}

Scalar QuaternionAlgebra::norm(const Element& q) const {
  require_classical("norm");
  if (&q.algebra() != alg_.get())
    throw AlgebraMismatch("element does not belong to this quaternion algebra");
  const Scalar &t = q.coord(0), &x = q.coord(1), &y = q.coord(2), &z = q.coord(3);
  return t * t - a_ * x * x - b_ * y * y + a_ * b_ * z * z;
}

Scalar QuaternionAlgebra::trace(const Element& q) const {
  require_classical("trace");
  if (&q.algebra() != alg_.get())
    throw AlgebraMismatch("element does not belong to this quaternion algebra");
  return q.coord(0) + q.coord(0);
}

std::shared_ptr<const Algebra> build_quaternion(const Field& field, const Scalar& a,
                                                const Scalar& b) {
  return QuaternionAlgebra(field, a, b).algebra();
}

int legendre_symbol(const BigInt& a, std::int64_t p) {
  if (p == 2 || !is_prime_int(p)) throw InvalidPrime("legendre symbol needs an odd prime");
  BigInt bp(p);
  BigInt r = ((a % bp) + bp) % bp;
  BigInt e = boost::multiprecision::powm(r, (bp - 1) / 2, bp);
  if (e == 0) return 0;
  return e == 1 ? 1 : -1;
}

Place Place::prime(std::int64_t p) {
  if (!is_prime_int(p)) throw InvalidPrime("not a prime: " + std::to_string(p));
  return Place(p);
}

std::string Place::to_string() const {
  return is_infinity() ? std::string("infinity") : std::to_string(p_);
}

namespace {

// strips all factors p from n (n != 0), returning the multiplicity
int strip_valuation(BigInt& n, const BigInt& p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// n * d reduced modulo m into [0, m) -- the residue of the rational n/d for
// odd m in {4, 8}, where 1/d = d holds modulo both
int unit_residue(const BigInt& n, const BigInt& d, int m) {
  BigInt r = ((n * d) % m + m) % m;
  return static_cast<int>(r);
}

int eps_mod2(const BigInt& n, const BigInt& d) { return unit_residue(n, d, 4) == 3 ? 1 : 0; }

int omega_mod2(const BigInt& n, const BigInt& d) {
  int r = unit_residue(n, d, 8);
  return (r == 3 || r == 5) ? 1 : 0;
}

// legendre symbol of the p-unit rational n/d: (n/d | p) = (n d | p)
int legendre_rational(const BigInt& n, const BigInt& d, std::int64_t p) {
  return legendre_symbol(n * d, p);
}

void require_rational_nonzero(const Scalar& s) {
  if (!s.field().is_rationals())
    throw FieldMismatch("hilbert symbol is defined for rational arguments");
  if (s.is_zero()) throw ZeroArgument("hilbert symbol needs nonzero arguments");
}

std::vector<std::int64_t> odd_prime_divisors(BigInt n) {
  std::vector<std::int64_t> out;
  if (n < 0) n = -n;
  while (n % 2 == 0) n /= 2;
  for (BigInt d = 3; d * d <= n; d += 2)
    if (n % d == 0) {
      if (d > std::numeric_limits<std::int64_t>::max())
        throw SizeLimit("prime divisor exceeds 64 bits");
      out.push_back(static_cast<std::int64_t>(d));
      while (n % d == 0) n /= d;
    }
  if (n > 1) {
    if (n > std::numeric_limits<std::int64_t>::max())
      throw SizeLimit("prime divisor exceeds 64 bits");
    out.push_back(static_cast<std::int64_t>(n));
  }
  return out;
}

}  // namespace

int hilbert_symbol(const Scalar& a, const Scalar& b, const Place& v) {
  require_rational_nonzero(a);
  require_rational_nonzero(b);
  if (v.is_infinity()) return (a.num() < 0 && b.num() < 0) ? -1 : 1;

  std::int64_t p = v.prime_value();
  BigInt bp(p);
  BigInt an = a.num(), ad = a.den(), bn = b.num(), bd = b.den();
  int alpha = strip_valuation(an, bp) - strip_valuation(ad, bp);
  int beta = strip_valuation(bn, bp) - strip_valuation(bd, bp);

  if (p == 2) {
    int e = eps_mod2(an, ad) * eps_mod2(bn, bd) + ((alpha % 2 + 2) % 2) * omega_mod2(bn, bd) +
            ((beta % 2 + 2) % 2) * omega_mod2(an, ad);
    return e % 2 == 0 ? 1 : -1;
  }
  int sign = 1;
  if ((alpha % 2 != 0) && (beta % 2 != 0) && ((p - 1) / 2) % 2 != 0) sign = -sign;
  if (beta % 2 != 0) sign *= legendre_rational(an, ad, p);
  if (alpha % 2 != 0) sign *= legendre_rational(bn, bd, p);
  return sign;
}

std::vector<Place> relevant_places(const Scalar& a, const Scalar& b) {
  require_rational_nonzero(a);
  require_rational_nonzero(b);
  std::vector<std::int64_t> primes;
  for (const BigInt& n : {a.num(), a.den(), b.num(), b.den()})
    for (std::int64_t p : odd_prime_divisors(n)) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  std::vector<Place> places{Place::infinity(), Place::prime(2)};
  for (std::int64_t p : primes) places.push_back(Place::prime(p));
  return places;
}

namespace {

// signed digits in the deterministic scan order 0, 1, -1, 2, -2, ...
std::vector<std::int64_t> signed_digits(std::int64_t h) {
  std::vector<std::int64_t> d{0};
  for (std::int64_t v = 1; v <= h; ++v) {
    d.push_back(v);
    d.push_back(-v);
  }
  return d;
}

// first norm-zero quadruple with coordinates from `digits`, exact height `h`
// when h >= 0, scanning only the given t-digit indices
std::optional<std::array<Scalar, 4>> scan_stripe(const QuaternionAlgebra& qa,
                                                 const std::vector<Scalar>& digits,
                                                 std::int64_t h, std::size_t t_begin,
                                                 std::size_t t_end,
                                                 const std::vector<std::int64_t>* heights) {
  const std::size_t n = digits.size();
  for (std::size_t ti = t_begin; ti < t_end; ++ti)
    for (std::size_t xi = 0; xi < n; ++xi)
      for (std::size_t yi = 0; yi < n; ++yi)
        for (std::size_t zi = 0; zi < n; ++zi) {
          if (heights) {
            std::int64_t m = std::max(std::max((*heights)[ti], (*heights)[xi]),
                                      std::max((*heights)[yi], (*heights)[zi]));
            if (m != h) continue;
          } else if (ti == 0 && xi == 0 && yi == 0 && zi == 0) {
            continue;
          }
          const Scalar &t = digits[ti], &x = digits[xi], &y = digits[yi], &z = digits[zi];
          Scalar norm = t * t - qa.a() * x * x - qa.b() * y * y + qa.a() * qa.b() * z * z;
          if (norm.is_zero()) return std::array<Scalar, 4>{t, x, y, z};
        }
  return std::nullopt;
}

std::optional<std::array<Scalar, 4>> scan_layer(const QuaternionAlgebra& qa,
                                                const std::vector<Scalar>& digits, std::int64_t h,
                                                const std::vector<std::int64_t>* heights,
                                                int workers) {
  const std::size_t n = digits.size();
  if (workers <= 1 || n < 2) return scan_stripe(qa, digits, h, 0, n, heights);

  std::size_t w = std::min<std::size_t>(workers, n);
  std::vector<std::optional<std::array<Scalar, 4>>> found(w);
  std::vector<std::thread> pool;
  for (std::size_t wi = 0; wi < w; ++wi)
    pool.emplace_back([&, wi] {
      std::size_t lo = n * wi / w, hi = n * (wi + 1) / w;
      found[wi] = scan_stripe(qa, digits, h, lo, hi, heights);
    });
  for (auto& th : pool) th.join();
  // earliest stripe wins: identical to the single-worker scan order
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

std::optional<ZeroDivisorPair> char2_pair_search(const QuaternionAlgebra& qa) {
  // prime field of characteristic 2: sixteen elements, scan candidate pairs
  const auto& alg = qa.algebra();
  const Field& f = qa.field();
  auto elem = [&](int mask) {
    std::vector<Scalar> c;
    for (int t = 0; t < 4; ++t) c.push_back(Scalar::of_int(f, (mask >> t) & 1));
    return alg->element(std::move(c));
  };
  for (int qm = 1; qm < 16; ++qm)
    for (int rm = 1; rm < 16; ++rm) {
      Element q = elem(qm), r = elem(rm);
      if ((q * r).is_zero()) return ZeroDivisorPair{q, r};
    }
  return std::nullopt;
}

}  // namespace

std::optional<ZeroDivisorPair> find_zero_divisor(const QuaternionAlgebra& qa, std::int64_t bound,
                                                 int workers) {
  if (qa.char2_form()) return char2_pair_search(qa);

  const Field& f = qa.field();
  if (f.is_rationals()) {
    for (std::int64_t h = 1; h <= bound; ++h) {
      auto raw = signed_digits(h);
      std::vector<Scalar> digits;
      std::vector<std::int64_t> heights;
      for (std::int64_t v : raw) {
        digits.push_back(Scalar::of_int(f, v));
        heights.push_back(v < 0 ? -v : v);
      }
      if (auto hit = scan_layer(qa, digits, h, &heights, workers)) {
        Element q = qa.element((*hit)[0], (*hit)[1], (*hit)[2], (*hit)[3]);
        return ZeroDivisorPair{q, qa.conjugate(q)};
      }
    }
    return std::nullopt;
  }

  std::int64_t p = f.modulus();
  if (p > 100) throw SizeLimit("exhaustive zero-divisor search capped at p <= 100");
  std::vector<Scalar> digits;
  for (std::int64_t v = 0; v < p; ++v) digits.push_back(Scalar::of_int(f, v));
  if (auto hit = scan_layer(qa, digits, -1, nullptr, workers)) {
    Element q = qa.element((*hit)[0], (*hit)[1], (*hit)[2], (*hit)[3]);
    return ZeroDivisorPair{q, qa.conjugate(q)};
  }
  return std::nullopt;
}

SplitClassification classify_split(const QuaternionAlgebra& qa, std::int64_t bound, int workers) {
  if (qa.char2_form())
    throw UnsupportedField("characteristic-2 quaternions are not classified");

  if (qa.field().is_rationals()) {
    std::vector<Place> obstructions;
    for (const Place& v : relevant_places(qa.a(), qa.b()))
      if (hilbert_symbol(qa.a(), qa.b(), v) == -1) obstructions.push_back(v);
    if (!obstructions.empty())
      return SplitClassification{SplitVerdict::Division, std::nullopt, std::move(obstructions)};
    return SplitClassification{SplitVerdict::Split, find_zero_divisor(qa, bound, workers), {}};
  }

  // finite division rings are fields, so F_p quaternions always split; the
  // norm form is isotropic over F_p, making the exhaustive certificate total
  auto cert = find_zero_divisor(qa, bound, workers);
  if (!cert) throw Error("internal: no zero divisor in a split F_p quaternion algebra");
  return SplitClassification{SplitVerdict::Split, std::move(cert), {}};
}

}  // namespace comdec
