#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "comdec/algebra.hpp"
#include "comdec/freepoly.hpp"
#include "comdec/linalg.hpp"
#include "comdec/quaternion.hpp"

namespace comdec {

/** The subfield F[alpha] of a division quaternion algebra over Q. */
struct SubfieldReport {
  Subspace subspace;            // span of the powers of alpha
  int dimension;                // = deg(minpoly) = subspace.dim()
  std::vector<Scalar> minpoly;  // monic, low coefficients first
  bool is_field;                // minpoly irreducible (degree <= 2 suffices here)
  bool is_maximal;              // is_field and dimension^2 = dim of the algebra
};

/** F[alpha] as a power span, with its minimal polynomial and field/maximality
 *  flags. The algebra must certify as a division algebra (classify_split);
 *  otherwise NotDivisionAlgebra. AlgebraMismatch for foreign alpha. */
SubfieldReport generated_subfield(const QuaternionAlgebra& d, const Element& alpha);

/** A subfield is maximal exactly when its dimension is the square root of the
 *  algebra dimension: 2 in the quaternion case. Throws NotAField when the
 *  report does not describe a field. */
bool is_maximal_subfield(const QuaternionAlgebra& d, const SubfieldReport& report);

/** Exact closure of the unital subalgebra generated by gens: grows the span
 *  of {1} and the generators under products until it stabilizes. */
Subspace subalgebra_generated(const std::shared_ptr<const Algebra>& a,
                              const std::vector<Element>& gens);

/** gamma^{-1} by solving (left multiplication by gamma) x = 1.
 *  Throws ZeroGamma for gamma = 0, NotInvertible when no inverse exists
 *  (possible only outside division algebras). */
Element invert_element(const Element& gamma);

struct ConjugationReport {
  Element conjugate;  // gamma * alpha * gamma^{-1}
  bool generates;     // {alpha, conjugate} generates the whole algebra
  Subspace closure;   // the subalgebra they do generate
};

/** Conjugates alpha by gamma and checks whether alpha together with its
 *  conjugate generates d as an algebra. Throws ZeroGamma when gamma = 0. */
ConjugationReport conjugate_generation(const QuaternionAlgebra& d, const Element& alpha,
                                       const Element& gamma);

struct GeneratingWitness {
  std::vector<Element> args;  // sampled arguments with alpha = f(args)
  Element alpha;              // generates a maximal subfield
  Element gamma;              // conjugator
  Element conjugate;          // gamma * alpha * gamma^{-1}
};

struct GeneratingSearchReport {
  bool found;
  std::optional<GeneratingWitness> witness;  // engaged iff found
  long tuples_tried;
  long gammas_tried;
};

/** Seeded search for a witness that the image of f generates d: samples
 *  height-bounded argument tuples until f(args) generates a maximal subfield,
 *  then samples conjugators gamma until {alpha, gamma alpha gamma^{-1}}
 *  generates everything. The identity
 *      gamma f(a_1,...,a_m) gamma^{-1} = f(gamma a_1 gamma^{-1}, ...)
 *  is re-verified exactly before the witness is returned. The budget bounds
 *  the total number of samples (tuples plus conjugators); running out is an
 *  outcome, not an error. Each sample is derived from (seed, attempt index),
 *  so any partition of the attempt range enumerates the same stream and the
 *  result is deterministic for a fixed seed. */
GeneratingSearchReport search_generating_image(const QuaternionAlgebra& d, const NcPoly& f,
                                               std::uint64_t seed, long budget = 10000,
                                               std::int64_t height = 5);

}  // namespace comdec
