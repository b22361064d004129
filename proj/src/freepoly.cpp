#include "comdec/freepoly.hpp"

#include <algorithm>

namespace comdec {

namespace {

constexpr int kGnMaterializeCap = 5;
constexpr int kGnEvaluateCap = 7;
constexpr int kStandardCap = 6;
constexpr long kTermCap = 100000;
constexpr long kTupleCap = 2000000;

int perm_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

}  // namespace

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void NcPoly::check_field(const NcPoly& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch("polynomials over different fields");
}

NcPoly NcPoly::constant(const Scalar& c) {
  NcPoly p(c.field());
  p.add_term({}, c);
  return p;
}

NcPoly NcPoly::variable(const Field& f, int index) {
  if (index < 0) throw InvalidParams("variable indices must be non-negative");
  NcPoly p(f);
  p.add_term({index}, Scalar::one(f));
  return p;
}

NcPoly NcPoly::monomial(const Scalar& coeff, Word word) {
  for (int v : word)
    if (v < 0) throw InvalidParams("variable indices must be non-negative");
  NcPoly p(coeff.field());
  p.add_term(word, coeff);
  return p;
}

int NcPoly::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

int NcPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [w, c] : terms_)
    d = std::max(d, static_cast<int>(std::count(w.begin(), w.end(), var)));
  return d;
}

std::set<int> NcPoly::variables() const {
  std::set<int> vars;
  for (const auto& [w, c] : terms_) vars.insert(w.begin(), w.end());
  return vars;
}

int NcPoly::max_variable() const {
  int m = -1;
  for (const auto& [w, c] : terms_)
    for (int v : w) m = std::max(m, v);
  return m;
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  check_field(o);
  NcPoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const { return *this + (-o); }

NcPoly NcPoly::operator-() const {
  NcPoly r(field_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
  check_field(o);
  NcPoly r(field_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.add_term(w, c1 * c2);
    }
  return r;
}

NcPoly NcPoly::scaled(const Scalar& c) const {
  NcPoly r(field_);
  for (const auto& [w, cc] : terms_) r.add_term(w, cc * c);
  return r;
}

bool NcPoly::operator==(const NcPoly& o) const { return field_ == o.field_ && terms_ == o.terms_; }

NcPoly NcPoly::compose(const std::map<int, NcPoly>& subs) const {
  for (const auto& [v, p] : subs) check_field(p);
  NcPoly acc(field_);
  for (const auto& [w, c] : terms_) {
    NcPoly term = NcPoly::constant(Scalar::one(field_));
    for (int v : w) {
      auto it = subs.find(v);
      term = term * (it != subs.end() ? it->second : NcPoly::variable(field_, v));
    }
    acc = acc + term.scaled(c);
  }
  return acc;
}

std::string NcPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    std::string word;
    for (int v : w) {
      if (!word.empty()) word += "*";
      word += "x" + std::to_string(v);
    }
    bool negative = field_.is_rationals() && c.num() < 0;
    Scalar mag = negative ? -c : c;
    std::string coeff = mag.to_string();
    std::string body;
    if (word.empty())
      body = coeff;
    else if (coeff == "1")
      body = word;
    else
      body = coeff + "*" + word;
    if (out.empty())
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

NcPoly nc_commutator(const NcPoly& a, const NcPoly& b) { return a * b - b * a; }

NcPoly standard_polynomial(const Field& f, int n) {
  if (n < 1) throw InvalidParams("standard polynomial needs n >= 1");
  if (n > kStandardCap) throw SizeLimit("standard polynomial capped at n <= 6");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  NcPoly p(f);
  do {
    p.add_term(perm, Scalar::of_int(f, perm_sign(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p;
}

Element evaluate_poly(const NcPoly& f, const std::shared_ptr<const Algebra>& a,
                      const std::vector<Element>& args) {
  if (!(f.field() == a->field()))
    throw FieldMismatch("polynomial and algebra over different fields");
  for (const Element& arg : args)
    if (&arg.algebra() != a.get()) throw AlgebraMismatch("evaluation argument in another algebra");
  Element acc = a->zero();
  for (const auto& [w, c] : f.terms()) {
    Element t = a->one();
    for (int v : w) {
      if (v >= static_cast<int>(args.size()))
        throw MissingArgument("no argument for variable x" + std::to_string(v));
      t = t * args[v];
    }
    acc = acc + t.scaled(c);
  }
  return acc;
}

Mat evaluate_poly_mat(const NcPoly& f, const std::vector<Mat>& args) {
  if (args.empty()) throw MissingArgument("matrix evaluation needs at least one argument");
  const Mat& first = args[0];
  if (first.rows() != first.cols()) throw NotSquare("evaluation arguments must be square");
  for (const Mat& m : args)
    if (m.rows() != first.rows() || m.cols() != first.cols())
      throw DimensionMismatch("evaluation arguments of mixed shapes");
  if (!(f.field() == first.field()))
    throw FieldMismatch("polynomial and matrices over different fields");
  int n = first.rows();
  Mat acc(f.field(), n, n);
  for (const auto& [w, c] : f.terms()) {
    Mat t = Mat::identity(f.field(), n);
    for (int v : w) {
      if (v >= static_cast<int>(args.size()))
        throw MissingArgument("no argument for variable x" + std::to_string(v));
      t = t * args[v];
    }
    acc = acc + t.scaled(c);
  }
  return acc;
}

NcPoly build_gn(const Field& f, int n) {
  if (n < 1) throw InvalidParams("g_n needs n >= 1");
  if (n > kGnMaterializeCap) throw SizeLimit("g_n materialization capped at n <= 5");
  std::vector<int> delta(n + 1);
  for (int i = 0; i <= n; ++i) delta[i] = i;
  NcPoly p(f);
  do {
    Word w;
    for (int rep = 0; rep < delta[0]; ++rep) w.push_back(0);
    for (int i = 1; i <= n; ++i) {
      w.push_back(i);
      for (int rep = 0; rep < delta[i]; ++rep) w.push_back(0);
    }
    p.add_term(w, Scalar::of_int(f, perm_sign(delta)));
  } while (std::next_permutation(delta.begin(), delta.end()));
  return p;
}

namespace {

// shared permutation-sum core for both value types
template <typename V, typename Mul, typename Add, typename Sub>
V gn_accumulate(const std::vector<V>& powers, const std::vector<V>& rs, V acc, Mul mul, Add add,
                Sub sub) {
  int n = static_cast<int>(rs.size());
  std::vector<int> delta(n + 1);
  for (int i = 0; i <= n; ++i) delta[i] = i;
  do {
    V term = powers[delta[0]];
    for (int i = 1; i <= n; ++i) term = mul(mul(term, rs[i - 1]), powers[delta[i]]);
    acc = perm_sign(delta) > 0 ? add(acc, term) : sub(acc, term);
  } while (std::next_permutation(delta.begin(), delta.end()));
  return acc;
}

void check_gn_arity(std::size_t n) {
  if (n < 1) throw InvalidParams("g_n needs n >= 1");
  if (n > kGnEvaluateCap) throw SizeLimit("g_n evaluation capped at n <= 7");
}

}  // namespace

Element evaluate_gn(const Element& a, const std::vector<Element>& rs) {
  check_gn_arity(rs.size());
  int n = static_cast<int>(rs.size());
  std::vector<Element> powers{a.algebra().one()};
  for (int i = 1; i <= n; ++i) powers.push_back(powers.back() * a);
  return gn_accumulate(
      powers, rs, a.algebra().zero(), [](const Element& x, const Element& y) { return x * y; },
      [](const Element& x, const Element& y) { return x + y; },
      [](const Element& x, const Element& y) { return x - y; });
}

Mat evaluate_gn_mat(const Mat& a, const std::vector<Mat>& rs) {
  check_gn_arity(rs.size());
  if (a.rows() != a.cols()) throw NotSquare("g_n needs a square matrix");
  int n = static_cast<int>(rs.size());
  std::vector<Mat> powers{Mat::identity(a.field(), a.rows())};
  for (int i = 1; i <= n; ++i) powers.push_back(powers.back() * a);
  return gn_accumulate(
      powers, rs, Mat(a.field(), a.rows(), a.cols()),
      [](const Mat& x, const Mat& y) { return x * y; },
      [](const Mat& x, const Mat& y) { return x + y; },
      [](const Mat& x, const Mat& y) { return x - y; });
}

namespace {

Mat random_square(Rng& rng, const Field& f, int n, std::int64_t height) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rng.scalar(f, height);
  return m;
}

Element random_element(Rng& rng, const std::shared_ptr<const Algebra>& a, std::int64_t height) {
  std::vector<Scalar> coords;
  for (int i = 0; i < a->dim(); ++i) coords.push_back(rng.scalar(a->field(), height));
  return a->element(std::move(coords));
}

AlgebraicityReport finish_report(int n, int degree, int trials, bool all_zero) {
  bool consistent = degree > n || all_zero;
  bool conclusive = degree <= n || !all_zero;
  return AlgebraicityReport{n, degree, trials, all_zero, consistent, conclusive};
}

}  // namespace

AlgebraicityReport algebraicity_test(const Mat& x, int n, int trials, Rng& rng,
                                     std::int64_t height) {
  check_gn_arity(n);
  int degree = static_cast<int>(minimal_polynomial(x).size()) - 1;
  bool all_zero = true;
  for (int t = 0; t < trials; ++t) {
    std::vector<Mat> rs;
    for (int i = 0; i < n; ++i) rs.push_back(random_square(rng, x.field(), x.rows(), height));
    if (!evaluate_gn_mat(x, rs).is_zero()) all_zero = false;
  }
  return finish_report(n, degree, trials, all_zero);
}

AlgebraicityReport algebraicity_test(const Element& x, int n, int trials, Rng& rng,
                                     std::int64_t height) {
  check_gn_arity(n);
  x.algebra().require_validated("algebraicity_test");
  int degree = static_cast<int>(minimal_polynomial(x.algebra().regular_representation(x)).size()) -
               1;
  bool all_zero = true;
  auto alg = x.algebra_ptr();
  for (int t = 0; t < trials; ++t) {
    std::vector<Element> rs;
    for (int i = 0; i < n; ++i) rs.push_back(random_element(rng, alg, height));
    if (!evaluate_gn(x, rs).is_zero()) all_zero = false;
  }
  return finish_report(n, degree, trials, all_zero);
}

std::string poly_class_name(PolyClass c) {
  switch (c) {
    case PolyClass::Identity: return "Identity";
    case PolyClass::Central: return "Central";
    default: return "Neither";
  }
}

namespace {

// degree vector of a word restricted to the occurring variables
std::map<int, int> degree_vector(const Word& w) {
  std::map<int, int> d;
  for (int v : w) ++d[v];
  return d;
}

// full multilinearization of a multihomogeneous component: every variable of
// degree d is replaced by d fresh variables, summing over the assignments of
// distinct fresh variables to the occurrences
NcPoly multilinearize(const NcPoly& comp, int& next_fresh) {
  NcPoly cur = comp;
  std::map<int, int> degrees = degree_vector(cur.terms().begin()->first);
  for (const auto& [v, d] : degrees) {
    if (d < 2) continue;
    std::vector<int> fresh(d);
    for (int i = 0; i < d; ++i) fresh[i] = next_fresh++;
    NcPoly next(cur.field());
    for (const auto& [w, c] : cur.terms()) {
      std::vector<std::size_t> pos;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == v) pos.push_back(i);
      std::vector<int> assign(d);
      for (int i = 0; i < d; ++i) assign[i] = i;
      do {
        Word replaced = w;
        for (int i = 0; i < d; ++i) replaced[pos[i]] = fresh[assign[i]];
        next.add_term(replaced, c);
      } while (std::next_permutation(assign.begin(), assign.end()));
      if (next.term_count() > kTermCap) throw SizeLimit("multilinearization exceeds term cap");
    }
    cur = next;
  }
  return cur;
}

// exact identity test valid over characteristic 0: multilinear polynomials
// vanish on the algebra iff they vanish on all basis tuples
bool is_identity_char0(const NcPoly& f, const std::shared_ptr<const Algebra>& a) {
  std::map<std::map<int, int>, NcPoly> components;
  for (const auto& [w, c] : f.terms()) {
    auto key = degree_vector(w);
    auto it = components.find(key);
    if (it == components.end()) it = components.emplace(key, NcPoly(f.field())).first;
    it->second.add_term(w, c);
  }
  int fresh = f.max_variable() + 1;
  std::vector<Element> basis;
  for (int i = 0; i < a->dim(); ++i) basis.push_back(a->basis_element(i));
  for (auto& [key, comp] : components) {
    NcPoly ml = multilinearize(comp, fresh);
    std::set<int> var_set = ml.variables();
    std::vector<int> vars(var_set.begin(), var_set.end());
    int k = static_cast<int>(vars.size());
    long tuples = 1;
    for (int i = 0; i < k; ++i) {
      tuples *= a->dim();
      if (tuples > kTupleCap) throw SizeLimit("basis tuple sweep exceeds cap");
    }
    int argc = ml.max_variable() + 1;
    std::vector<Element> args(static_cast<std::size_t>(std::max(argc, 0)), a->zero());
    std::vector<int> odo(k, 0);
    for (long step = 0; step < tuples; ++step) {
      for (int i = 0; i < k; ++i) args[vars[i]] = basis[odo[i]];
      if (!evaluate_poly(ml, a, args).is_zero()) return false;
      for (int i = 0; i < k; ++i) {
        if (++odo[i] < a->dim()) break;
        odo[i] = 0;
      }
    }
  }
  return true;
}

}  // namespace

ClassificationReport classify_identity_central(const NcPoly& f,
                                               const std::shared_ptr<const Algebra>& a,
                                               int trials, std::uint64_t seed) {
  a->require_validated("classify_identity_central");
  if (!(f.field() == a->field()))
    throw FieldMismatch("polynomial and algebra over different fields");

  if (!a->field().finite()) {
    if (is_identity_char0(f, a)) return ClassificationReport{PolyClass::Identity, false, 0};
    NcPoly bracket = nc_commutator(f, NcPoly::variable(f.field(), f.max_variable() + 1));
    if (is_identity_char0(bracket, a)) return ClassificationReport{PolyClass::Central, false, 0};
    return ClassificationReport{PolyClass::Neither, false, 0};
  }

  // finite field: randomized verdict, explicitly labeled
  Rng rng(seed);
  Subspace center = a->center();
  int argc = f.max_variable() + 1;
  bool all_zero = true, all_central = true;
  for (int t = 0; t < trials; ++t) {
    std::vector<Element> args;
    for (int i = 0; i < argc; ++i) args.push_back(random_element(rng, a, 1));
    Element value = evaluate_poly(f, a, args);
    if (!value.is_zero()) all_zero = false;
    if (!center.contains(value.coords())) all_central = false;
  }
  PolyClass verdict = all_zero   ? PolyClass::Identity
                      : all_central ? PolyClass::Central
                                    : PolyClass::Neither;
  return ClassificationReport{verdict, true, trials};
}

Subspace image_span(const NcPoly& f, const std::shared_ptr<const Algebra>& a, std::uint64_t seed,
                    int stability_rounds, int samples_per_round, std::int64_t height) {
  a->require_validated("image_span");
  if (!(f.field() == a->field()))
    throw FieldMismatch("polynomial and algebra over different fields");
  Rng rng(seed);
  int argc = f.max_variable() + 1;
  Subspace span = Subspace::zero(a->field(), a->dim());
  int stall = 0;
  while (stall < stability_rounds && span.dim() < a->dim()) {
    std::vector<std::vector<Scalar>> vecs;
    for (int s = 0; s < samples_per_round; ++s) {
      std::vector<Element> args;
      for (int i = 0; i < argc; ++i) args.push_back(random_element(rng, a, height));
      vecs.push_back(evaluate_poly(f, a, args).coords());
    }
    Subspace grown = span.sum(Subspace::from_vectors(a->field(), a->dim(), vecs));
    if (grown.dim() == span.dim())
      ++stall;
    else
      stall = 0;
    span = grown;
  }
  return span;
}

SpanDecompositionReport check_span_decomposition(const NcPoly& f,
                                                 const std::shared_ptr<const Algebra>& a,
                                                 std::uint64_t seed) {
  auto cls = classify_identity_central(f, a);
  Subspace center = a->center();
  Subspace span = image_span(f, a, seed);
  Subspace sum = center.sum(span);
  bool finite = a->field().finite();
  return SpanDecompositionReport{cls.verdict,
                                 sum.dim() == a->dim(),
                                 cls.verdict == PolyClass::Neither && !finite,
                                 finite,
                                 center.dim(),
                                 span.dim(),
                                 sum.dim(),
                                 a->dim()};
}

}  // namespace comdec
