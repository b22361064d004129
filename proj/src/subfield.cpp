#include "comdec/subfield.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>

#include "comdec/error.hpp"
#include "comdec/rng.hpp"

namespace comdec {

namespace {

void require_member(const std::shared_ptr<const Algebra>& a, const Element& x, const char* what) {
  if (&x.algebra() != a.get())
    throw AlgebraMismatch(std::string(what) + " lives in a different algebra");
}

void require_division(const QuaternionAlgebra& d) {
  if (classify_split(d).verdict != SplitVerdict::Division)
    throw NotDivisionAlgebra("quaternion algebra splits, so it has zero divisors and F[alpha] "
                             "need not be a field");
}

bool is_rational_square(const Scalar& s) {
  if (s.is_zero()) return true;
  if (s.num() < 0) return false;
  BigInt rn = boost::multiprecision::sqrt(s.num());
  BigInt rd = boost::multiprecision::sqrt(s.den());
  return rn * rn == s.num() && rd * rd == s.den();
}

// irreducibility over Q for the monic minpoly of a quaternion element; the
// degree never exceeds 2 because alpha^2 - tr(alpha) alpha + norm(alpha) = 0
bool irreducible_over_q(const std::vector<Scalar>& mp) {
  int deg = static_cast<int>(mp.size()) - 1;
  if (deg == 1) return true;
  if (deg == 2) {
    Scalar b = mp[1], c = mp[0];
    Scalar disc = b * b - Scalar::of_int(b.field(), 4) * c;
    return !is_rational_square(disc);
  }
  throw Error("minimal polynomial of degree " + std::to_string(deg) +
              " in a quaternion algebra");
}

// core without the division gate, for use inside the search loop
SubfieldReport subfield_core(const QuaternionAlgebra& d, const Element& alpha) {
  const auto& a = d.algebra();
  std::vector<Scalar> mp = minimal_polynomial(a->regular_representation(alpha));
  int deg = static_cast<int>(mp.size()) - 1;
  std::vector<std::vector<Scalar>> pows;
  Element p = a->one();
  for (int e = 0; e < deg; ++e) {
    pows.push_back(p.coords());
    if (e + 1 < deg) p = p * alpha;
  }
  Subspace span = Subspace::from_vectors(d.field(), a->dim(), pows);
  if (span.dim() != deg)
    throw Error("power span dimension disagrees with the minimal polynomial degree");
  bool field = irreducible_over_q(mp);
  bool maximal = field && deg * deg == a->dim();
  return SubfieldReport{span, deg, std::move(mp), field, maximal};
}

Element sample_element(Rng& rng, const std::shared_ptr<const Algebra>& a, std::int64_t height) {
  std::vector<Scalar> coords;
  for (int i = 0; i < a->dim(); ++i) coords.push_back(rng.scalar(a->field(), height));
  return a->element(std::move(coords));
}

// sample attempt t of a fixed seed: independent of how attempts are sliced
Rng attempt_rng(std::uint64_t seed, long attempt) {
  return Rng(seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(attempt) + 1));
}

}  // namespace

SubfieldReport generated_subfield(const QuaternionAlgebra& d, const Element& alpha) {
  require_division(d);
  require_member(d.algebra(), alpha, "alpha");
  return subfield_core(d, alpha);
}

bool is_maximal_subfield(const QuaternionAlgebra& d, const SubfieldReport& report) {
  if (!report.is_field) throw NotAField("the reported subspace is not a field");
  return report.dimension * report.dimension == d.algebra()->dim();
}

Subspace subalgebra_generated(const std::shared_ptr<const Algebra>& a,
                              const std::vector<Element>& gens) {
  std::vector<std::vector<Scalar>> vecs{a->one().coords()};
  for (const Element& g : gens) {
    require_member(a, g, "generator");
    vecs.push_back(g.coords());
  }
  Subspace span = Subspace::from_vectors(a->field(), a->dim(), vecs);
  while (span.dim() < a->dim()) {
    std::vector<Element> basis;
    for (int i = 0; i < span.dim(); ++i) basis.push_back(a->element(span.basis_vector(i)));
    std::vector<std::vector<Scalar>> products;
    for (const Element& x : basis)
      for (const Element& y : basis) products.push_back((x * y).coords());
    Subspace next = span.sum(Subspace::from_vectors(a->field(), a->dim(), products));
    if (next.dim() == span.dim()) break;
    span = next;
  }
  return span;
}

Element invert_element(const Element& gamma) {
  if (gamma.is_zero()) throw ZeroGamma("cannot invert zero");
  const Algebra& a = gamma.algebra();
  auto sol = solve_linear(a.regular_representation(gamma), a.one().coords());
  if (!sol) throw NotInvertible("element has no inverse");
  return gamma.algebra_ptr()->element(sol->particular);
}

ConjugationReport conjugate_generation(const QuaternionAlgebra& d, const Element& alpha,
                                       const Element& gamma) {
  require_member(d.algebra(), alpha, "alpha");
  require_member(d.algebra(), gamma, "gamma");
  if (gamma.is_zero()) throw ZeroGamma("conjugation by zero");
  Element conj = gamma * alpha * invert_element(gamma);
  Subspace closure = subalgebra_generated(d.algebra(), {alpha, conj});
  bool generates = closure.dim() == d.algebra()->dim();
  return ConjugationReport{std::move(conj), generates, std::move(closure)};
}

GeneratingSearchReport search_generating_image(const QuaternionAlgebra& d, const NcPoly& f,
                                               std::uint64_t seed, long budget,
                                               std::int64_t height) {
  require_division(d);
  if (!(f.field() == d.field()))
    throw FieldMismatch("polynomial and algebra over different fields");
  if (budget < 1) throw InvalidParams("search budget must be positive");
  if (height < 1) throw InvalidParams("search height must be positive");
  const auto& a = d.algebra();
  int argc = f.max_variable() + 1;

  long tuples = 0, gammas = 0;
  for (long attempt = 0; attempt < budget;) {
    Rng rng = attempt_rng(seed, attempt++);
    std::vector<Element> args;
    for (int i = 0; i < argc; ++i) args.push_back(sample_element(rng, a, height));
    ++tuples;
    Element alpha = evaluate_poly(f, a, args);
    if (!subfield_core(d, alpha).is_maximal) continue;

    while (attempt < budget) {
      Rng grng = attempt_rng(seed, attempt++);
      Element gamma = sample_element(grng, a, height);
      ++gammas;
      if (gamma.is_zero()) continue;
      ConjugationReport cg = conjugate_generation(d, alpha, gamma);
      if (!cg.generates) continue;

      // the conjugate is again a value of f; check the identity exactly
      Element ginv = invert_element(gamma);
      std::vector<Element> conj_args;
      for (const Element& x : args) conj_args.push_back(gamma * x * ginv);
      if (!(cg.conjugate == evaluate_poly(f, a, conj_args)))
        throw Error("conjugation image identity failed on a witness");
      return GeneratingSearchReport{
          true, GeneratingWitness{std::move(args), std::move(alpha), std::move(gamma),
                                  std::move(cg.conjugate)},
          tuples, gammas};
    }
  }
  return GeneratingSearchReport{false, std::nullopt, tuples, gammas};
}

}  // namespace comdec
