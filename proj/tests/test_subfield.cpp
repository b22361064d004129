#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "comdec/subfield.hpp"
#include "helpers.hpp"

using namespace comdec;
using th::fp;
using th::q;
using th::si;

namespace {

QuaternionAlgebra hamilton() { return QuaternionAlgebra(q(), si(q(), -1), si(q(), -1)); }

NcPoly x(int i) { return NcPoly::variable(q(), i); }

Element rational_elt(const QuaternionAlgebra& qa, std::int64_t t, std::int64_t xx,
                     std::int64_t y, std::int64_t z) {
  return qa.element(si(q(), t), si(q(), xx), si(q(), y), si(q(), z));
}

}  // namespace

TEST_CASE("subfield generated by i") {
  auto d = hamilton();
  // oracle: i^2 = -1, so 1 and i span a closed subalgebra and x^2 + 1
  // annihilates i
  Element i = d.i();
  CHECK(i * i == (-d.one()));

  auto rep = generated_subfield(d, i);
  CHECK(rep.dimension == 2);
  CHECK(rep.minpoly == std::vector<Scalar>{si(q(), 1), si(q(), 0), si(q(), 1)});
  CHECK(rep.is_field);
  CHECK(rep.is_maximal);
  CHECK(rep.subspace.dim() == 2);
  CHECK(rep.subspace.contains(d.one().coords()));
  CHECK(rep.subspace.contains(i.coords()));
  CHECK_FALSE(rep.subspace.contains(d.j().coords()));
  CHECK(is_maximal_subfield(d, rep));
}

TEST_CASE("subfield generated by a central element is the ground field") {
  auto d = hamilton();
  auto rep = generated_subfield(d, d.one());
  CHECK(rep.dimension == 1);
  CHECK(rep.minpoly == std::vector<Scalar>{si(q(), -1), si(q(), 1)});  // x - 1
  CHECK(rep.is_field);
  CHECK_FALSE(rep.is_maximal);
  CHECK_FALSE(is_maximal_subfield(d, rep));
  CHECK(rep.subspace == Subspace::from_vectors(q(), 4, {d.one().coords()}));

  auto scaled = generated_subfield(d, d.one().scaled(si(q(), -7)));
  CHECK(scaled.dimension == 1);
  CHECK(scaled.subspace == rep.subspace);
}

TEST_CASE("shifted and mixed generators have degree-2 irreducible minpolys") {
  auto d = hamilton();

  // alpha = 3 + 2i: (alpha - 3)^2 = -4, so x^2 - 6x + 13 kills it
  Element alpha = rational_elt(d, 3, 2, 0, 0);
  Element lhs = alpha * alpha - alpha.scaled(si(q(), 6)) + d.one().scaled(si(q(), 13));
  CHECK(lhs.is_zero());
  auto rep = generated_subfield(d, alpha);
  CHECK(rep.dimension == 2);
  CHECK(rep.minpoly == std::vector<Scalar>{si(q(), 13), si(q(), -6), si(q(), 1)});
  CHECK(rep.is_maximal);

  // alpha = i + j: ij + ji = 0, so alpha^2 = -2
  Element mixed = rational_elt(d, 0, 1, 1, 0);
  CHECK(mixed * mixed == d.one().scaled(si(q(), -2)));
  auto rep2 = generated_subfield(d, mixed);
  CHECK(rep2.minpoly == std::vector<Scalar>{si(q(), 2), si(q(), 0), si(q(), 1)});
  CHECK(rep2.is_maximal);
  CHECK(rep2.subspace.contains(mixed.coords()));
  CHECK_FALSE(rep2.subspace.contains(d.i().coords()));
}

TEST_CASE("split algebras are rejected") {
  QuaternionAlgebra split(q(), si(q(), 1), si(q(), 1));
  // oracle for splitness: i^2 = 1 makes (i - 1)(i + 1) = 0
  Element zd1 = split.i() - split.one();
  Element zd2 = split.i() + split.one();
  CHECK_FALSE(zd1.is_zero());
  CHECK_FALSE(zd2.is_zero());
  CHECK((zd1 * zd2).is_zero());

  CHECK_THROWS_AS(generated_subfield(split, split.i()), NotDivisionAlgebra);
  CHECK_THROWS_AS(search_generating_image(split, x(0), 1, 10), NotDivisionAlgebra);

  // over a finite field every quaternion algebra splits
  QuaternionAlgebra f3(fp(3), si(fp(3), -1), si(fp(3), -1));
  CHECK_THROWS_AS(generated_subfield(f3, f3.i()), NotDivisionAlgebra);

  // a zero divisor of the split algebra genuinely fails to invert
  CHECK_THROWS_AS(invert_element(zd1), NotInvertible);
}

TEST_CASE("is_maximal_subfield wants a field") {
  auto d = hamilton();
  SubfieldReport not_a_field{Subspace::zero(q(), 4), 2,
                             {si(q(), -1), si(q(), 0), si(q(), 1)},  // x^2 - 1 reducible
                             false, false};
  CHECK_THROWS_AS(is_maximal_subfield(d, not_a_field), NotAField);
}

TEST_CASE("subfield reports on random elements keep their invariants") {
  auto d = hamilton();
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Scalar> coords;
    for (int i = 0; i < 4; ++i) coords.push_back(rng.scalar(q(), 5));
    Element alpha = d.algebra()->element(coords);
    auto rep = generated_subfield(d, alpha);
    CHECK(rep.dimension == static_cast<int>(rep.minpoly.size()) - 1);
    CHECK(rep.dimension == rep.subspace.dim());
    CHECK(rep.is_field);  // every subfield of a division algebra is a field
    CHECK((rep.dimension == 1 || rep.dimension == 2));
    if (rep.is_maximal) CHECK(rep.dimension * rep.dimension == 4);
    CHECK(rep.is_maximal == is_maximal_subfield(d, rep));
    CHECK(rep.subspace.contains(alpha.coords()));
    CHECK(rep.subspace.contains(d.one().coords()));
    // non-central elements generate maximal subfields, central ones the base
    bool central = alpha.coord(1).is_zero() && alpha.coord(2).is_zero() &&
                   alpha.coord(3).is_zero();
    CHECK(rep.is_maximal == !central);
  }
}

TEST_CASE("subalgebra closure oracle") {
  auto d = hamilton();
  auto a = d.algebra();
  CHECK(subalgebra_generated(a, {}) == Subspace::from_vectors(q(), 4, {a->one().coords()}));
  CHECK(subalgebra_generated(a, {d.one()}).dim() == 1);
  CHECK(subalgebra_generated(a, {d.i()}) ==
        Subspace::from_vectors(q(), 4, {a->one().coords(), d.i().coords()}));
  CHECK(subalgebra_generated(a, {d.i(), d.j()}).dim() == 4);
  // i and -k regenerate j through the product i * (-k) = j
  CHECK((d.i() * (-d.k())) == d.j());
  CHECK(subalgebra_generated(a, {d.i(), (-d.k())}).dim() == 4);
}

TEST_CASE("conjugate generation in the Hamilton quaternions") {
  auto d = hamilton();
  Element i = d.i();

  // gamma = 1 + j sends i to -k: cross-checked without inverting gamma
  Element gamma = d.one() + d.j();
  auto cg = conjugate_generation(d, i, gamma);
  CHECK(cg.conjugate == (-d.k()));
  CHECK(cg.conjugate * gamma == gamma * i);
  CHECK(cg.generates);
  CHECK(cg.closure.dim() == 4);

  // gamma = j normalizes Q[i]: the conjugate -i generates nothing new
  auto cg2 = conjugate_generation(d, i, d.j());
  CHECK(cg2.conjugate == (-i));
  CHECK_FALSE(cg2.generates);
  CHECK(cg2.closure ==
        Subspace::from_vectors(q(), 4, {d.one().coords(), i.coords()}));

  // gamma = 1 fixes alpha
  auto cg3 = conjugate_generation(d, i, d.one());
  CHECK(cg3.conjugate == i);
  CHECK_FALSE(cg3.generates);

  CHECK_THROWS_AS(conjugate_generation(d, i, d.algebra()->zero()), ZeroGamma);
  CHECK_THROWS_AS(invert_element(d.algebra()->zero()), ZeroGamma);

  QuaternionAlgebra other(q(), si(q(), -1), si(q(), -3));
  CHECK_THROWS_AS(conjugate_generation(d, other.i(), gamma), AlgebraMismatch);
}

TEST_CASE("inversion agrees with the norm formula") {
  auto d = hamilton();
  Rng rng(32);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Scalar> coords;
    for (int i = 0; i < 4; ++i) coords.push_back(rng.scalar(q(), 4));
    Element g = d.algebra()->element(coords);
    if (g.is_zero()) continue;
    Element inv = invert_element(g);
    CHECK(g * inv == d.one());
    CHECK(inv * g == d.one());
    // oracle: g^{-1} = conj(g) / norm(g) in a quaternion algebra
    Scalar n = d.norm(g);
    CHECK(inv.scaled(n) == d.conjugate(g));
  }
}

TEST_CASE("conjugation image identity holds for sampled polynomials") {
  auto d = hamilton();
  auto a = d.algebra();
  Rng rng(33);
  std::vector<NcPoly> polys{x(0), nc_commutator(x(0), x(1)), x(0) * x(1),
                            x(0) * x(0) - x(1)};
  for (const NcPoly& f : polys)
    for (int trial = 0; trial < 10; ++trial) {
      int argc = f.max_variable() + 1;
      std::vector<Element> args;
      for (int i = 0; i < argc; ++i) {
        std::vector<Scalar> coords;
        for (int c = 0; c < 4; ++c) coords.push_back(rng.scalar(q(), 3));
        args.push_back(a->element(coords));
      }
      std::vector<Scalar> gc;
      for (int c = 0; c < 4; ++c) gc.push_back(rng.scalar(q(), 3));
      Element gamma = a->element(gc);
      if (gamma.is_zero()) continue;
      Element ginv = invert_element(gamma);
      std::vector<Element> conj_args;
      for (const Element& arg : args) conj_args.push_back(gamma * arg * ginv);
      CHECK(gamma * evaluate_poly(f, a, args) * ginv == evaluate_poly(f, a, conj_args));
    }
}

TEST_CASE("search finds a witness for f = x1") {
  auto d = hamilton();
  auto report = search_generating_image(d, x(0), 7, 2000);
  REQUIRE(report.found);
  REQUIRE(report.witness.has_value());
  const auto& w = *report.witness;
  CHECK(w.args.size() == 1);
  CHECK(w.alpha == w.args[0]);
  CHECK(w.conjugate * w.gamma == w.gamma * w.alpha);
  CHECK(generated_subfield(d, w.alpha).is_maximal);
  CHECK(subalgebra_generated(d.algebra(), {w.alpha, w.conjugate}).dim() == 4);
  CHECK(report.tuples_tried >= 1);
  CHECK(report.gammas_tried >= 1);
}

TEST_CASE("search finds a witness for f = [x1, x2]") {
  auto d = hamilton();
  NcPoly f = nc_commutator(x(0), x(1));
  auto report = search_generating_image(d, f, 11, 4000);
  REQUIRE(report.found);
  const auto& w = *report.witness;
  CHECK(w.args.size() == 2);
  CHECK(w.alpha == evaluate_poly(f, d.algebra(), w.args));
  // commutators are pure quaternions: trace zero, nonzero here
  CHECK(d.trace(w.alpha).is_zero());
  CHECK_FALSE(w.alpha.is_zero());
  CHECK(generated_subfield(d, w.alpha).is_maximal);
  CHECK(subalgebra_generated(d.algebra(), {w.alpha, w.conjugate}).dim() == 4);
}

TEST_CASE("search exhausts for the central polynomial [x1, x2]^2") {
  auto d = hamilton();
  NcPoly comm = nc_commutator(x(0), x(1));
  NcPoly f = comm * comm;

  // oracle: [a, b]^2 lands in the center, so F[f(args)] = F every time
  Rng rng(34);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Element> args;
    for (int i = 0; i < 2; ++i) {
      std::vector<Scalar> coords;
      for (int c = 0; c < 4; ++c) coords.push_back(rng.scalar(q(), 3));
      args.push_back(d.algebra()->element(coords));
    }
    Element v = evaluate_poly(f, d.algebra(), args);
    CHECK(v.coord(1).is_zero());
    CHECK(v.coord(2).is_zero());
    CHECK(v.coord(3).is_zero());
  }

  auto report = search_generating_image(d, f, 5, 600);
  CHECK_FALSE(report.found);
  CHECK_FALSE(report.witness.has_value());
  CHECK(report.tuples_tried == 600);
  CHECK(report.gammas_tried == 0);
}

TEST_CASE("search is deterministic in the seed") {
  auto d = hamilton();
  NcPoly f = nc_commutator(x(0), x(1));
  auto r1 = search_generating_image(d, f, 99, 3000);
  auto r2 = search_generating_image(d, f, 99, 3000);
  REQUIRE(r1.found);
  REQUIRE(r2.found);
  CHECK(r1.witness->alpha == r2.witness->alpha);
  CHECK(r1.witness->gamma == r2.witness->gamma);
  CHECK(r1.tuples_tried == r2.tuples_tried);
  CHECK(r1.gammas_tried == r2.gammas_tried);
  for (std::size_t i = 0; i < r1.witness->args.size(); ++i)
    CHECK(r1.witness->args[i] == r2.witness->args[i]);
}

TEST_CASE("search parameter validation") {
  auto d = hamilton();
  CHECK_THROWS_AS(search_generating_image(d, x(0), 1, 0), InvalidParams);
  CHECK_THROWS_AS(search_generating_image(d, x(0), 1, 100, 0), InvalidParams);
  NcPoly wrong_field = NcPoly::variable(fp(5), 0);
  CHECK_THROWS_AS(search_generating_image(d, wrong_field, 1, 100), FieldMismatch);
}
