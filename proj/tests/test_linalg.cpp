#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "comdec/linalg.hpp"
#include "comdec/rng.hpp"
#include "helpers.hpp"

using namespace comdec;
using th::fp;
using th::mat;
using th::q;
using th::sc;
using th::si;

TEST_CASE("rref canonical form") {
  Mat m = mat(q(), {{"0", "2", "4"}, {"1", "1", "1"}});
  Rref r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.matrix == mat(q(), {{"1", "0", "-1"}, {"0", "1", "2"}}));
  CHECK(r.pivot_cols == std::vector<int>{0, 1});
}

TEST_CASE("rref is idempotent on random matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    for (Field f : {q(), fp(5)}) {
      Mat m = th::random_mat(rng, f, 4, 5);
      Mat once = rref(m).matrix;
      CHECK(rref(once).matrix == once);
    }
  }
}

TEST_CASE("rank examples") {
  CHECK(rref(mat(q(), {{"1", "2"}, {"2", "4"}})).rank == 1);
  CHECK(rref(Mat::identity(q(), 3)).rank == 3);
  CHECK(rref(Mat(q(), 3, 3)).rank == 0);
  // over F_2 the all-ones 2x2 matrix has rank 1
  CHECK(rref(mat(fp(2), {{"1", "1"}, {"1", "1"}})).rank == 1);
}

TEST_CASE("solve_linear: unique, underdetermined, inconsistent") {
  // [[1,1]] x = (1): particular (1,0), kernel spanned by (1,-1)
  Mat a = mat(q(), {{"1", "1"}});
  auto sol = solve_linear(a, th::coords(q(), {"1"}));
  REQUIRE(sol.has_value());
  CHECK(sol->particular == th::coords(q(), {"1", "0"}));
  Subspace ker = sol->kernel();
  CHECK(ker.dim() == 1);
  CHECK(ker.contains(th::coords(q(), {"1", "-1"})));

  // unique solution
  Mat b = mat(q(), {{"2", "0"}, {"0", "4"}});
  auto sol2 = solve_linear(b, th::coords(q(), {"1", "1"}));
  REQUIRE(sol2.has_value());
  CHECK(sol2->particular == th::coords(q(), {"1/2", "1/4"}));
  CHECK(sol2->kernel().dim() == 0);

  // inconsistent: NoSolution is a value, not an exception
  Mat c = mat(q(), {{"1", "1"}, {"1", "1"}});
  CHECK_FALSE(solve_linear(c, th::coords(q(), {"0", "1"})).has_value());
}

TEST_CASE("solution property: a * x == b on random consistent systems") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    Field f = trial % 2 ? q() : fp(7);
    Mat a = th::random_mat(rng, f, 4, 4);
    // manufacture a consistent rhs
    std::vector<Scalar> x0;
    for (int i = 0; i < 4; ++i) x0.push_back(rng.scalar(f, 4));
    std::vector<Scalar> b(4, Scalar::zero(f));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) b[i] += a.at(i, j) * x0[j];
    auto sol = solve_linear(a, b);
    REQUIRE(sol.has_value());
    std::vector<Scalar> check(4, Scalar::zero(f));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) check[i] += a.at(i, j) * sol->particular[j];
    for (int i = 0; i < 4; ++i) CHECK(check[i] == b[i]);
    // difference of the two solutions lies in the kernel
    std::vector<Scalar> diff;
    for (int i = 0; i < 4; ++i) diff.push_back(x0[i] - sol->particular[i]);
    CHECK(sol->kernel().contains(diff));
  }
}

TEST_CASE("kernel") {
  CHECK(kernel(Mat(q(), 2, 3)) == Mat::identity(q(), 3));
  Mat a = mat(q(), {{"1", "2", "3"}});
  Mat k = kernel(a);
  CHECK(k.rows() == 2);
  // every kernel row annihilates a
  for (int i = 0; i < k.rows(); ++i) {
    Scalar acc = Scalar::zero(q());
    for (int j = 0; j < 3; ++j) acc += a.at(0, j) * k.at(i, j);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("subspace construction and equality") {
  // spans presented differently but equal as subspaces
  Subspace s1 = Subspace::from_vectors(q(), 3, {th::coords(q(), {"1", "1", "0"}),
                                                th::coords(q(), {"0", "0", "1"})});
  Subspace s2 = Subspace::from_vectors(q(), 3, {th::coords(q(), {"2", "2", "2"}),
                                                th::coords(q(), {"0", "0", "-1"})});
  CHECK(s1 == s2);
  CHECK(s1.dim() == 2);
  CHECK(s1.contains(th::coords(q(), {"3", "3", "7"})));
  CHECK_FALSE(s1.contains(th::coords(q(), {"1", "0", "0"})));
  CHECK(Subspace::zero(q(), 3).dim() == 0);
  CHECK(Subspace::full(q(), 3).dim() == 3);
  CHECK_THROWS_AS(s1.sum(Subspace::zero(q(), 4)), AmbientMismatch);
}

TEST_CASE("sum and intersection examples") {
  Subspace xy = Subspace::from_vectors(q(), 3, {th::coords(q(), {"1", "0", "0"}),
                                                th::coords(q(), {"0", "1", "0"})});
  Subspace yz = Subspace::from_vectors(q(), 3, {th::coords(q(), {"0", "1", "0"}),
                                                th::coords(q(), {"0", "0", "1"})});
  CHECK(xy.sum(yz) == Subspace::full(q(), 3));
  Subspace meet = xy.intersect(yz);
  CHECK(meet.dim() == 1);
  CHECK(meet.contains(th::coords(q(), {"0", "1", "0"})));
}

TEST_CASE("Grassmann identity on random subspaces") {
  Rng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    Field f = trial % 2 ? q() : fp(3);
    auto rand_subspace = [&](int gens) {
      std::vector<std::vector<Scalar>> vs;
      for (int g = 0; g < gens; ++g) {
        std::vector<Scalar> v;
        for (int i = 0; i < 5; ++i) v.push_back(rng.scalar(f, 3));
        vs.push_back(std::move(v));
      }
      return Subspace::from_vectors(f, 5, vs);
    };
    Subspace u = rand_subspace(static_cast<int>(rng.range(1, 4)));
    Subspace w = rand_subspace(static_cast<int>(rng.range(1, 4)));
    CHECK(u.sum(w).dim() + u.intersect(w).dim() == u.dim() + w.dim());
    CHECK(u.sum(w).contains(u));
    CHECK(u.contains(u.intersect(w)));
  }
}

TEST_CASE("trace") {
  CHECK(mat(q(), {{"1", "2"}, {"3", "4"}}).trace() == si(q(), 5));
  // trace of I_p over F_p is zero
  for (std::int64_t p : {2, 3, 5}) CHECK(Mat::identity(fp(p), p).trace().is_zero());
  CHECK_THROWS_AS(Mat(q(), 2, 3).trace(), NotSquare);
}

TEST_CASE("matrix inverse") {
  Mat m = mat(q(), {{"1", "2"}, {"3", "4"}});
  CHECK(m * m.inverse() == Mat::identity(q(), 2));
  CHECK_THROWS_AS(mat(q(), {{"1", "2"}, {"2", "4"}}).inverse(), NotInvertible);
}

// Oracle for minimal polynomials of diagonal matrices: the product of (x - d)
// over the distinct diagonal values. For diag(1,2) that is (x-1)(x-2) = x^2-3x+2.
TEST_CASE("minimal polynomial: frozen diagonal oracle") {
  Mat d = mat(q(), {{"1", "0"}, {"0", "2"}});
  CHECK(minimal_polynomial(d) == th::coords(q(), {"2", "-3", "1"}));
  CHECK(minimal_polynomial(Mat::identity(q(), 4)) == th::coords(q(), {"-1", "1"}));
  // nilpotent E12: x^2
  Mat nil = mat(q(), {{"0", "1"}, {"0", "0"}});
  CHECK(minimal_polynomial(nil) == th::coords(q(), {"0", "0", "1"}));
  CHECK(poly_to_string(minimal_polynomial(d)) == "x^2 - 3*x + 2");
}

TEST_CASE("minimal polynomial annihilates and is minimal") {
  Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    Field f = trial % 2 ? q() : fp(5);
    Mat m = th::random_mat(rng, f, 3, 3);
    auto mp = minimal_polynomial(m);
    CHECK(eval_poly_at(mp, m).is_zero());
    CHECK(mp.back() == Scalar::one(f));
    // independent minimality oracle: powers below degree d are linearly independent,
    // checked by the rank of the stacked vectorized powers
    int d = static_cast<int>(mp.size()) - 1;
    Mat stacked(f, d, 9);
    Mat power = Mat::identity(f, 3);
    for (int t = 0; t < d; ++t) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) stacked.at(t, i * 3 + j) = power.at(i, j);
      power = power * m;
    }
    CHECK(rref(stacked).rank == d);
  }
}

TEST_CASE("companion matrix minimal polynomial") {
  // companion of x^2 + 1
  Mat c = mat(q(), {{"0", "-1"}, {"1", "0"}});
  CHECK(minimal_polynomial(c) == th::coords(q(), {"1", "0", "1"}));
}
