#include "comdec/algebra.hpp"

#include <sstream>

namespace comdec {

Element::Element(std::shared_ptr<const Algebra> alg, std::vector<Scalar> coords)
    : alg_(std::move(alg)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != alg_->dim())
    throw DimensionMismatch("coordinate count differs from algebra dimension");
  for (const auto& c : coords_)
    if (c.field() != alg_->field()) throw FieldMismatch("coordinate field differs");
}

void Element::check_same(const Element& o) const {
  if (alg_.get() != o.alg_.get()) throw AlgebraMismatch("elements of different algebras");
}

bool Element::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

Element Element::operator+(const Element& o) const {
  check_same(o);
  std::vector<Scalar> r = coords_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.coords_[i];
  return Element(alg_, std::move(r));
}

Element Element::operator-(const Element& o) const {
  check_same(o);
  std::vector<Scalar> r = coords_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.coords_[i];
  return Element(alg_, std::move(r));
}

Element Element::operator-() const {
  std::vector<Scalar> r = coords_;
  for (auto& c : r) c = -c;
  return Element(alg_, std::move(r));
}

Element Element::scaled(const Scalar& c) const {
  std::vector<Scalar> r = coords_;
  for (auto& x : r) x = x * c;
  return Element(alg_, std::move(r));
}

Element Element::operator*(const Element& o) const {
  check_same(o);
  const Algebra& a = *alg_;
  std::vector<Scalar> r(a.dim(), Scalar::zero(a.field()));
  for (int i = 0; i < a.dim(); ++i) {
    if (coords_[i].is_zero()) continue;
    for (int j = 0; j < a.dim(); ++j) {
      if (o.coords_[j].is_zero()) continue;
      Scalar cij = coords_[i] * o.coords_[j];
      auto it = a.table().find({i, j});
      if (it == a.table().end()) continue;
      for (const auto& [k, coeff] : it->second) r[k] += cij * coeff;
    }
  }
  return Element(alg_, std::move(r));
}

Element Element::pow(int e) const {
  if (e < 0) throw Error("negative element power");
  Element acc = alg_->one();
  Element base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Element::operator==(const Element& o) const {
  check_same(o);
  return coords_ == o.coords_;
}

std::string Element::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < alg_->dim(); ++i) {
    if (coords_[i].is_zero()) continue;
    os << (first ? "" : " + ") << coords_[i].to_string() << "*" << alg_->label(i);
    first = false;
  }
  return first ? "0" : os.str();
}

Algebra::Algebra(Field field, int dim, std::vector<std::string> labels,
                 std::vector<Scalar> unit_coords,
                 std::map<std::pair<int, int>, SparseVec> table)
    : field_(std::move(field)), dim_(dim), labels_(std::move(labels)),
      unit_coords_(std::move(unit_coords)), table_(std::move(table)) {}

std::shared_ptr<Algebra> Algebra::make(Field field, int dim,
                                       std::vector<std::string> labels,
                                       std::vector<Scalar> unit_coords,
                                       std::map<std::pair<int, int>, SparseVec> table) {
  if (dim <= 0) throw DimensionMismatch("algebra dimension must be positive");
  if (static_cast<int>(labels.size()) != dim) throw DimensionMismatch("label count");
  if (static_cast<int>(unit_coords.size()) != dim) throw DimensionMismatch("unit coordinate count");
  for (const auto& [key, vec] : table) {
    if (key.first < 0 || key.first >= dim || key.second < 0 || key.second >= dim)
      throw DimensionMismatch("structure constant index out of range");
    for (const auto& [k, c] : vec) {
      if (k < 0 || k >= dim) throw DimensionMismatch("structure constant target out of range");
      if (c.field() != field) throw FieldMismatch("structure constant field differs");
    }
  }
  for (const auto& c : unit_coords)
    if (c.field() != field) throw FieldMismatch("unit coordinate field differs");
  return std::shared_ptr<Algebra>(
      new Algebra(std::move(field), dim, std::move(labels), std::move(unit_coords),
                  std::move(table)));
}

Element Algebra::element(std::vector<Scalar> coords) const {
  return Element(shared_from_this(), std::move(coords));
}

Element Algebra::zero() const {
  return element(std::vector<Scalar>(dim_, Scalar::zero(field_)));
}

Element Algebra::one() const {
  return element(unit_coords_);
}

Element Algebra::basis_element(int i) const {
  if (i < 0 || i >= dim_) throw DimensionMismatch("basis index out of range");
  std::vector<Scalar> c(dim_, Scalar::zero(field_));
  c[i] = Scalar::one(field_);
  return element(std::move(c));
}

std::vector<Scalar> Algebra::basis_product(int i, int j) const {
  std::vector<Scalar> r(dim_, Scalar::zero(field_));
  auto it = table_.find({i, j});
  if (it != table_.end())
    for (const auto& [k, c] : it->second) r[k] += c;
  return r;
}

ValidationReport Algebra::validate() const {
  ValidationReport report;
  auto mul_coords = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    std::vector<Scalar> r(dim_, Scalar::zero(field_));
    for (int i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        Scalar cij = x[i] * y[j];
        auto it = table_.find({i, j});
        if (it == table_.end()) continue;
        for (const auto& [k, c] : it->second) r[k] += cij * c;
      }
    }
    return r;
  };
  auto is_zero_vec = [](const std::vector<Scalar>& v) {
    for (const auto& c : v)
      if (!c.is_zero()) return false;
    return true;
  };

  // unit laws on every basis vector
  for (int i = 0; i < dim_; ++i) {
    std::vector<Scalar> e(dim_, Scalar::zero(field_));
    e[i] = Scalar::one(field_);
    std::vector<Scalar> left = mul_coords(unit_coords_, e);
    std::vector<Scalar> right = mul_coords(e, unit_coords_);
    for (int t = 0; t < dim_; ++t) left[t] -= e[t];
    for (int t = 0; t < dim_; ++t) right[t] -= e[t];
    if (!is_zero_vec(left)) {
      report.ok = false;
      report.violations.push_back(
          {Violation::Kind::UnitLeft, i, -1, -1, "1*" + labels_[i] + " != " + labels_[i]});
    }
    if (!is_zero_vec(right)) {
      report.ok = false;
      report.violations.push_back(
          {Violation::Kind::UnitRight, i, -1, -1, labels_[i] + "*1 != " + labels_[i]});
    }
  }

  // associativity on all dim^3 basis triples
  for (int i = 0; i < dim_; ++i) {
    std::vector<Scalar> ei(dim_, Scalar::zero(field_));
    ei[i] = Scalar::one(field_);
    for (int j = 0; j < dim_; ++j) {
      std::vector<Scalar> ij = basis_product(i, j);
      for (int k = 0; k < dim_; ++k) {
        std::vector<Scalar> ek(dim_, Scalar::zero(field_));
        ek[k] = Scalar::one(field_);
        std::vector<Scalar> lhs = mul_coords(ij, ek);
        std::vector<Scalar> rhs = mul_coords(ei, basis_product(j, k));
        bool equal = true;
        for (int t = 0; t < dim_; ++t)
          if (lhs[t] != rhs[t]) { equal = false; break; }
        if (!equal) {
          report.ok = false;
          report.violations.push_back({Violation::Kind::Associativity, i, j, k,
                                       "(" + labels_[i] + "*" + labels_[j] + ")*" + labels_[k] +
                                           " != " + labels_[i] + "*(" + labels_[j] + "*" +
                                           labels_[k] + ")"});
        }
      }
    }
  }

  if (report.ok) validated_ = true;
  return report;
}

void Algebra::require_validated(const char* op) const {
  if (!validated_)
    throw NotValidated(std::string(op) + " requires a validated algebra; call validate() first");
}

Mat Algebra::regular_representation(const Element& x) const {
  if (&x.algebra() != this) throw AlgebraMismatch("element of a different algebra");
  Mat m(field_, dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Element col = x * basis_element(j);
    for (int i = 0; i < dim_; ++i) m.at(i, j) = col.coord(i);
  }
  return m;
}

Mat Algebra::right_representation(const Element& x) const {
  if (&x.algebra() != this) throw AlgebraMismatch("element of a different algebra");
  Mat m(field_, dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Element col = basis_element(j) * x;
    for (int i = 0; i < dim_; ++i) m.at(i, j) = col.coord(i);
  }
  return m;
}

Subspace Algebra::center() const {
  require_validated("center");
  // x central iff (L_{b_i} - R_{b_i}) x = 0 for every basis element b_i
  Mat stacked(field_, 0, dim_);
  for (int i = 0; i < dim_; ++i) {
    Element bi = basis_element(i);
    Mat diff = regular_representation(bi) - right_representation(bi);
    stacked = stacked.vstack(diff);
  }
  return Subspace::from_rows(kernel(stacked));
}

Subspace Algebra::commutator_subspace() const {
  require_validated("commutator_subspace");
  std::vector<std::vector<Scalar>> gens;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      Element c = basis_element(i) * basis_element(j) - basis_element(j) * basis_element(i);
      if (!c.is_zero()) gens.push_back(c.coords());
    }
  return Subspace::from_vectors(field_, dim_, gens);
}

DecompositionReport Algebra::check_decomposition() const {
  require_validated("check_decomposition");
  Subspace z = center();
  Subspace c = commutator_subspace();
  Subspace s = z.sum(c);
  return DecompositionReport{s.dim() == dim_, z.dim(), c.dim(), s.dim(),
                             z.dim() + c.dim() - s.dim()};
}

ElementSplit Algebra::decompose_element(const Element& x) const {
  require_validated("decompose_element");
  if (&x.algebra() != this) throw AlgebraMismatch("element of a different algebra");
  Subspace z = center();
  Subspace c = commutator_subspace();
  // columns: center basis then commutator basis; first solution is canonical
  int k = z.dim(), l = c.dim();
  Mat a(field_, dim_, k + l);
  for (int t = 0; t < k; ++t)
    for (int i = 0; i < dim_; ++i) a.at(i, t) = z.basis().at(t, i);
  for (int t = 0; t < l; ++t)
    for (int i = 0; i < dim_; ++i) a.at(i, k + t) = c.basis().at(t, i);
  auto sol = solve_linear(a, x.coords());
  if (!sol) throw NotInSum("element is not in Z(A) + [A,A]");
  std::vector<Scalar> zc(dim_, Scalar::zero(field_)), cc(dim_, Scalar::zero(field_));
  for (int t = 0; t < k; ++t)
    for (int i = 0; i < dim_; ++i) zc[i] += sol->particular[t] * z.basis().at(t, i);
  for (int t = 0; t < l; ++t)
    for (int i = 0; i < dim_; ++i) cc[i] += sol->particular[k + t] * c.basis().at(t, i);
  return ElementSplit{element(std::move(zc)), element(std::move(cc))};
}

Subspace Algebra::subalgebra_generated(const std::vector<Element>& gens) const {
  for (const auto& g : gens)
    if (&g.algebra() != this) throw AlgebraMismatch("generator from a different algebra");
  std::vector<std::vector<Scalar>> vecs{unit_coords_};
  for (const auto& g : gens) vecs.push_back(g.coords());
  Subspace span = Subspace::from_vectors(field_, dim_, vecs);
  // grow span under products until it stabilizes
  while (true) {
    std::vector<std::vector<Scalar>> next;
    for (int i = 0; i < span.dim(); ++i)
      for (int j = 0; j < span.dim(); ++j) {
        Element p = element(span.basis_vector(i)) * element(span.basis_vector(j));
        if (!span.contains(p.coords())) next.push_back(p.coords());
      }
    if (next.empty()) return span;
    for (int i = 0; i < span.dim(); ++i) next.push_back(span.basis_vector(i));
    span = Subspace::from_vectors(field_, dim_, next);
  }
}

Subspace Algebra::jacobson_radical_char0() const {
  require_validated("jacobson_radical_char0");
  if (!field_.is_rationals())
    throw UnsupportedCharacteristic("radical via the trace form needs characteristic 0");
  // Dickson: rad A = kernel of the trace form T_ij = trace(L_{b_i} L_{b_j})
  std::vector<Mat> left;
  left.reserve(dim_);
  for (int i = 0; i < dim_; ++i) left.push_back(regular_representation(basis_element(i)));
  Mat gram(field_, dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) gram.at(i, j) = (left[i] * left[j]).trace();
  return Subspace::from_rows(kernel(gram));
}

std::shared_ptr<Algebra> field_algebra(const Field& f) {
  std::map<std::pair<int, int>, Algebra::SparseVec> table;
  table[{0, 0}] = {{0, Scalar::one(f)}};
  return Algebra::make(f, 1, {"1"}, {Scalar::one(f)}, std::move(table));
}

std::shared_ptr<Algebra> build_matrix_algebra(const AlgebraPtr& inner, int n) {
  if (n <= 0) throw DimensionMismatch("matrix size must be positive");
  const Field& f = inner->field();
  int d = inner->dim();
  int dim = n * n * d;
  // basis index of E_{rc} tensor (inner basis t)
  auto idx = [&](int r, int c, int t) { return (r * n + c) * d + t; };
  std::vector<std::string> labels(dim);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int t = 0; t < d; ++t) {
        std::string lbl = "E" + std::to_string(r + 1) + std::to_string(c + 1);
        if (d > 1) lbl += "(" + inner->label(t) + ")";
        labels[idx(r, c, t)] = lbl;
      }
  std::vector<Scalar> unit(dim, Scalar::zero(f));
  for (int r = 0; r < n; ++r)
    for (int t = 0; t < d; ++t) {
      const Scalar& u = inner->unit_coords()[t];
      if (!u.is_zero()) unit[idx(r, r, t)] = u;
    }
  // (E_{rc} x_s)(E_{c'c''} x_t) = delta_{c c'} E_{r c''} (x_s x_t)
  std::map<std::pair<int, int>, Algebra::SparseVec> table;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int c2 = 0; c2 < n; ++c2)
        for (int s = 0; s < d; ++s)
          for (int t = 0; t < d; ++t) {
            auto prod = inner->basis_product(s, t);
            Algebra::SparseVec out;
            for (int k = 0; k < d; ++k)
              if (!prod[k].is_zero()) out.push_back({idx(r, c2, k), prod[k]});
            if (!out.empty()) table[{idx(r, c, s), idx(c, c2, t)}] = std::move(out);
          }
  return Algebra::make(f, dim, std::move(labels), std::move(unit), std::move(table));
}

std::shared_ptr<Algebra> build_matrix_algebra(const Field& f, int n) {
  return build_matrix_algebra(field_algebra(f), n);
}

std::shared_ptr<Algebra> direct_product(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->field() != b->field()) throw FieldMismatch("product factors over different fields");
  const Field& f = a->field();
  int da = a->dim(), db = b->dim();
  std::vector<std::string> labels;
  labels.reserve(da + db);
  for (int i = 0; i < da; ++i) labels.push_back("l:" + a->label(i));
  for (int i = 0; i < db; ++i) labels.push_back("r:" + b->label(i));
  std::vector<Scalar> unit;
  unit.reserve(da + db);
  for (const auto& c : a->unit_coords()) unit.push_back(c);
  for (const auto& c : b->unit_coords()) unit.push_back(c);
  std::map<std::pair<int, int>, Algebra::SparseVec> table;
  for (const auto& [key, vec] : a->table()) table[key] = vec;
  for (const auto& [key, vec] : b->table()) {
    Algebra::SparseVec shifted;
    for (const auto& [k, c] : vec) shifted.push_back({k + da, c});
    table[{key.first + da, key.second + da}] = std::move(shifted);
  }
  return Algebra::make(f, da + db, std::move(labels), std::move(unit), std::move(table));
}

Element matrix_to_element(const AlgebraPtr& matrix_alg, const Mat& m) {
  int n = m.rows();
  if (!m.is_square() || matrix_alg->dim() != n * n)
    throw DimensionMismatch("matrix does not fit the algebra");
  if (m.field() != matrix_alg->field()) throw FieldMismatch("matrix field differs");
  std::vector<Scalar> coords;
  coords.reserve(n * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) coords.push_back(m.at(r, c));
  return matrix_alg->element(std::move(coords));
}

Mat element_to_matrix(const Element& x, int n) {
  if (x.algebra().dim() != n * n) throw DimensionMismatch("element does not fit n x n");
  Mat m(x.algebra().field(), n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = x.coord(r * n + c);
  return m;
}

}  // namespace comdec
