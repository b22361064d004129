#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "comdec/algebra.hpp"
#include "comdec/rng.hpp"

namespace comdec {

// word in the free monoid: sequence of variable indices; empty word = 1
using Word = std::vector<int>;

/** Free noncommutative polynomial: finite map word -> nonzero coefficient.
 *  Monomial product is word concatenation; everything is exact. */
class NcPoly {
 public:
  explicit NcPoly(const Field& f) : field_(f) {}  // zero polynomial
  static NcPoly constant(const Scalar& c);
  static NcPoly variable(const Field& f, int index);
  static NcPoly monomial(const Scalar& coeff, Word word);

  const Field& field() const { return field_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  int degree() const;  // max word length; -1 for the zero polynomial
  int degree_in(int var) const;
  std::set<int> variables() const;
  int max_variable() const;  // -1 when no variables occur

  NcPoly operator+(const NcPoly& o) const;
  NcPoly operator-(const NcPoly& o) const;
  NcPoly operator-() const;
  NcPoly operator*(const NcPoly& o) const;
  NcPoly scaled(const Scalar& c) const;
  bool operator==(const NcPoly& o) const;
  bool operator!=(const NcPoly& o) const { return !(*this == o); }

  // substitutes subs[v] for x_v; unmapped variables stay themselves
  NcPoly compose(const std::map<int, NcPoly>& subs) const;

  // in-place accumulation; drops terms whose coefficient cancels to zero
  void add_term(const Word& w, const Scalar& c);

  std::string to_string() const;

 private:
  void check_field(const NcPoly& o) const;
  Field field_;
  std::map<Word, Scalar> terms_;
};

NcPoly nc_commutator(const NcPoly& a, const NcPoly& b);
// standard polynomial s_n = sum over S_n of sign(s) x_{s(0)} ... x_{s(n-1)};
// SizeLimit for n > 6
NcPoly standard_polynomial(const Field& f, int n);

/** Evaluates f with x_i := args[i]. Throws MissingArgument when a variable
 *  index has no argument, AlgebraMismatch on mixed algebras. */
Element evaluate_poly(const NcPoly& f, const std::shared_ptr<const Algebra>& a,
                      const std::vector<Element>& args);
// matrix variant; args must be nonempty square matrices of one shape
Mat evaluate_poly_mat(const NcPoly& f, const std::vector<Mat>& args);

/** g_n = sum over S_{n+1} of sign(d) y0^{d(0)} y1 y0^{d(1)} ... yn y0^{d(n)},
 *  in variables y0..yn (indices 0..n). (n+1)! terms; materialization capped
 *  at n <= 5. */
NcPoly build_gn(const Field& f, int n);

/** Direct evaluation of g_n(a, rs[0], ..., rs[n-1]) from precomputed powers
 *  of a, without materializing the polynomial; capped at n <= 7. */
Element evaluate_gn(const Element& a, const std::vector<Element>& rs);
Mat evaluate_gn_mat(const Mat& a, const std::vector<Mat>& rs);

/** Lemma coherence report: a is algebraic of degree <= n over the base field
 *  exactly when g_n(a, r_1..r_n) vanishes identically. minpoly_degree comes
 *  from the exact minimal polynomial (via the regular representation for
 *  algebra elements); the g_n side is sampled `trials` times. */
struct AlgebraicityReport {
  int n;
  int minpoly_degree;
  int trials;
  bool gn_vanished_all;  // every sampled evaluation was zero
  bool consistent;       // degree <= n forces vanishing; violations flag false
  bool conclusive;       // proof (degree <= n) or an explicit nonzero witness
};

AlgebraicityReport algebraicity_test(const Mat& x, int n, int trials, Rng& rng,
                                     std::int64_t height = 3);
AlgebraicityReport algebraicity_test(const Element& x, int n, int trials, Rng& rng,
                                     std::int64_t height = 3);

enum class PolyClass { Identity, Central, Neither };

std::string poly_class_name(PolyClass c);

struct ClassificationReport {
  PolyClass verdict;
  bool randomized;  // finite-field path: sampled, not proven
  int trials;       // 0 on the deterministic path
};

/** Identity/central classification of f on a validated algebra.
 *  Characteristic 0: deterministic. f splits into multihomogeneous
 *  components, each is fully multilinearized and tested on all basis tuples;
 *  centrality reduces to [f, x_fresh] being an identity. Finite fields:
 *  randomized with `trials` samples, labeled as such. SizeLimit when the
 *  multilinearization or the tuple sweep would explode. */
ClassificationReport classify_identity_central(const NcPoly& f,
                                               const std::shared_ptr<const Algebra>& a,
                                               int trials = 200, std::uint64_t seed = 1);

/** Lower bound for span f(A): grows the span of random evaluations until
 *  `stability_rounds` rounds in a row add nothing. Deterministic per seed. */
Subspace image_span(const NcPoly& f, const std::shared_ptr<const Algebra>& a, std::uint64_t seed,
                    int stability_rounds = 3, int samples_per_round = 64,
                    std::int64_t height = 3);

struct SpanDecompositionReport {
  PolyClass classification;
  bool holds;                      // dim(Z(A) + span f(A)) == dim A
  bool hypothesis_met;             // f non-central non-identity, infinite center
  bool infinite_center_required;   // warning: finite base field
  int dim_center;
  int dim_span;
  int dim_sum;
  int dim_algebra;
};

/** Checks A = Z(A) + span f(A) with the classification attached. Over finite
 *  fields the theorem's infinite-center hypothesis fails; the report carries
 *  the warning instead of refusing to compute. */
SpanDecompositionReport check_span_decomposition(const NcPoly& f,
                                                 const std::shared_ptr<const Algebra>& a,
                                                 std::uint64_t seed = 7);

}  // namespace comdec
