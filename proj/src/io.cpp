#include "comdec/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "comdec/error.hpp"

namespace comdec {

namespace {

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "." + key + ": missing");
  return *it;
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path + ": expected an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path + ": expected a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected an array");
  return j;
}

void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed,
                         const std::string& path) {
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw SchemaError(path + "." + key + ": unknown key");
}

std::string idx(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

}  // namespace

Json field_to_json(const Field& f) {
  if (f.is_rationals()) return Json{{"kind", "Q"}};
  return Json{{"kind", "Fp"}, {"p", f.modulus()}};
}

Field parse_field(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  reject_unknown_keys(j, {"kind", "p"}, path);
  std::string kind = as_string(member(j, "kind", path), path + ".kind");
  if (kind == "Q") return Field::rationals();
  if (kind == "Fp") {
    const Json& pj = member(j, "p", path);
    if (!pj.is_number_integer()) throw SchemaError(path + ".p: expected an integer");
    try {
      return Field::prime(pj.get<std::int64_t>());
    } catch (const NonPrimeModulus& e) {
      throw SchemaError(path + ".p: " + e.what());
    }
  }
  throw SchemaError(path + ".kind: unknown field kind '" + kind + "'");
}

Json scalar_to_json(const Scalar& s) { return Json(s.to_string()); }

Scalar parse_scalar(const Field& f, const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar::of_int(f, j.get<std::int64_t>());
  if (!j.is_string()) throw SchemaError(path + ": expected a scalar string");
  try {
    return Scalar::parse(f, j.get<std::string>());
  } catch (const ParseError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

namespace {

std::vector<Scalar> parse_scalar_vector(const Field& f, const Json& j, const std::string& path) {
  as_array(j, path);
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_scalar(f, j[i], idx(path, i)));
  return out;
}

Json scalar_vector_to_json(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const Scalar& s : v) out.push_back(scalar_to_json(s));
  return out;
}

}  // namespace

Json matrix_to_json(const Mat& m) {
  Json entries = Json::array();
  for (int r = 0; r < m.rows(); ++r) entries.push_back(scalar_vector_to_json(m.row(r)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Mat parse_matrix(const Field& f, const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  reject_unknown_keys(j, {"rows", "cols", "entries"}, path);
  const Json& entries = as_array(member(j, "entries", path), path + ".entries");
  std::vector<std::vector<Scalar>> parsed;
  for (std::size_t r = 0; r < entries.size(); ++r)
    parsed.push_back(parse_scalar_vector(f, entries[r], idx(path + ".entries", r)));
  for (std::size_t r = 1; r < parsed.size(); ++r)
    if (parsed[r].size() != parsed[0].size())
      throw SchemaError(idx(path + ".entries", r) + ": ragged row lengths");
  if (j.contains("rows") && as_int(j["rows"], path + ".rows") != static_cast<int>(parsed.size()))
    throw SchemaError(path + ".rows: does not match the entry count");
  int cols = parsed.empty() ? 0 : static_cast<int>(parsed[0].size());
  if (j.contains("cols") && as_int(j["cols"], path + ".cols") != cols)
    throw SchemaError(path + ".cols: does not match the entry rows");
  return Mat::from_rows(f, parsed);
}

Json subspace_to_json(const Subspace& s) {
  Json basis = Json::array();
  for (int i = 0; i < s.dim(); ++i) basis.push_back(scalar_vector_to_json(s.basis_vector(i)));
  return Json{{"ambient", s.ambient_dim()}, {"basis", basis}};
}

Subspace parse_subspace(const Field& f, const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  reject_unknown_keys(j, {"ambient", "basis"}, path);
  int ambient = as_int(member(j, "ambient", path), path + ".ambient");
  if (ambient < 0) throw SchemaError(path + ".ambient: negative dimension");
  const Json& basis = as_array(member(j, "basis", path), path + ".basis");
  std::vector<std::vector<Scalar>> vecs;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    vecs.push_back(parse_scalar_vector(f, basis[i], idx(path + ".basis", i)));
    if (static_cast<int>(vecs.back().size()) != ambient)
      throw SchemaError(idx(path + ".basis", i) + ": vector length differs from ambient");
  }
  return Subspace::from_vectors(f, ambient, vecs);
}

Json group_to_json(const FiniteGroup& g) {
  Json table = Json::array();
  for (const auto& row : g.cayley()) table.push_back(row);
  return Json{{"order", g.order()},
              {"labels", g.labels()},
              {"table", table},
              {"identity", g.identity()}};
}

FiniteGroup parse_group(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  reject_unknown_keys(j, {"order", "labels", "table", "cayley", "identity", "cyclic", "name"},
                      path);
  if (j.contains("table") && j.contains("cayley"))
    throw SchemaError(path + ": give either table or cayley, not both");
  int forms = (j.contains("table") || j.contains("cayley") ? 1 : 0) +
              (j.contains("cyclic") ? 1 : 0) + (j.contains("name") ? 1 : 0);
  if (forms != 1)
    throw SchemaError(path + ": expected exactly one of table, cyclic, name");

  if (j.contains("cyclic")) {
    int n = as_int(j["cyclic"], path + ".cyclic");
    if (n < 1) throw SchemaError(path + ".cyclic: order must be positive");
    return FiniteGroup::cyclic(n);
  }
  if (j.contains("name")) {
    std::string name = as_string(j["name"], path + ".name");
    if (name == "klein4") return FiniteGroup::klein4();
    if (name == "symmetric3") return FiniteGroup::symmetric3();
    if (name == "dihedral4") return FiniteGroup::dihedral4();
    if (name == "quaternion8") return FiniteGroup::quaternion8();
    throw SchemaError(path + ".name: unknown group name '" + name + "'");
  }

  const std::string tkey = j.contains("table") ? "table" : "cayley";
  const Json& cj = as_array(j[tkey], path + "." + tkey);
  std::vector<std::vector<int>> cayley;
  for (std::size_t r = 0; r < cj.size(); ++r) {
    const Json& row = as_array(cj[r], idx(path + "." + tkey, r));
    std::vector<int> parsed;
    for (std::size_t c = 0; c < row.size(); ++c)
      parsed.push_back(as_int(row[c], idx(idx(path + "." + tkey, r), c)));
    cayley.push_back(std::move(parsed));
  }
  int order = static_cast<int>(cayley.size());
  if (j.contains("order") && as_int(j["order"], path + ".order") != order)
    throw SchemaError(path + ".order: does not match the table size");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& lj = as_array(j["labels"], path + ".labels");
    for (std::size_t i = 0; i < lj.size(); ++i)
      labels.push_back(as_string(lj[i], idx(path + ".labels", i)));
  } else {
    for (int i = 0; i < order; ++i) labels.push_back("g" + std::to_string(i));
  }
  int identity = j.contains("identity") ? as_int(j["identity"], path + ".identity") : 0;
  try {
    return FiniteGroup(std::move(labels), std::move(cayley), identity);
  } catch (const InvalidParams& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

Json cocycle_to_json(const TwistingFunction& t) {
  int n = t.group().order();
  Json values = Json::array();
  for (int x = 0; x < n; ++x) {
    Json row = Json::array();
    for (int y = 0; y < n; ++y) row.push_back(scalar_to_json(t.value(x, y)));
    values.push_back(row);
  }
  return Json{{"values", values}};
}

TwistingFunction parse_cocycle(const FiniteGroup& g, const Field& f, const Json& j,
                               const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  reject_unknown_keys(j, {"values", "kind"}, path);
  if (j.contains("values") == j.contains("kind"))
    throw SchemaError(path + ": expected exactly one of values, kind");

  if (j.contains("kind")) {
    std::string kind = as_string(j["kind"], path + ".kind");
    if (kind == "trivial") return TwistingFunction::trivial(g, f);
    if (kind == "quaternionic") return TwistingFunction::quaternionic(g, f);
    if (kind == "sign_carry") return TwistingFunction::sign_carry(g, f);
    throw SchemaError(path + ".kind: unknown cocycle kind '" + kind + "'");
  }

  const Json& vj = as_array(j["values"], path + ".values");
  std::vector<std::vector<Scalar>> values;
  for (std::size_t r = 0; r < vj.size(); ++r)
    values.push_back(parse_scalar_vector(f, vj[r], idx(path + ".values", r)));
  return TwistingFunction(g, std::move(values));
}

Json poly_to_json(const NcPoly& p) {
  Json terms = Json::array();
  for (const auto& [word, coeff] : p.terms())
    terms.push_back(Json{{"word", word}, {"coeff", scalar_to_json(coeff)}});
  return Json{{"field", field_to_json(p.field())}, {"terms", terms}};
}

NcPoly parse_poly(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  reject_unknown_keys(j, {"field", "terms", "standard", "gn"}, path);
  Field f = parse_field(member(j, "field", path), path + ".field");
  int forms = (j.contains("terms") ? 1 : 0) + (j.contains("standard") ? 1 : 0) +
              (j.contains("gn") ? 1 : 0);
  if (forms != 1)
    throw SchemaError(path + ": expected exactly one of terms, standard, gn");
  if (j.contains("standard"))
    return standard_polynomial(f, as_int(j["standard"], path + ".standard"));
  if (j.contains("gn")) return build_gn(f, as_int(j["gn"], path + ".gn"));

  const Json& terms = as_array(j["terms"], path + ".terms");
  NcPoly p(f);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tp = idx(path + ".terms", t);
    const Json& term = terms[t];
    const Json* wordj = nullptr;
    const Json* coeffj = nullptr;
    std::string wp, cp;
    if (term.is_object()) {
      reject_unknown_keys(term, {"word", "coeff"}, tp);
      wordj = &member(term, "word", tp);
      coeffj = &member(term, "coeff", tp);
      wp = tp + ".word";
      cp = tp + ".coeff";
    } else {
      const Json& pair = as_array(term, tp);
      if (pair.size() != 2) throw SchemaError(tp + ": expected {word, coeff} or [word, coeff]");
      wordj = &pair[0];
      coeffj = &pair[1];
      wp = tp + "[0]";
      cp = tp + "[1]";
    }
    const Json& wj = as_array(*wordj, wp);
    Word w;
    for (std::size_t i = 0; i < wj.size(); ++i) {
      int v = as_int(wj[i], idx(wp, i));
      if (v < 0) throw SchemaError(idx(wp, i) + ": negative variable index");
      w.push_back(v);
    }
    p.add_term(w, parse_scalar(f, *coeffj, cp));
  }
  return p;
}

Json element_to_json(const Element& x) { return Json{{"coords", scalar_vector_to_json(x.coords())}}; }

Element parse_element(const AlgebraPtr& a, const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  reject_unknown_keys(j, {"coords"}, path);
  std::vector<Scalar> coords =
      parse_scalar_vector(a->field(), member(j, "coords", path), path + ".coords");
  if (static_cast<int>(coords.size()) != a->dim())
    throw SchemaError(path + ".coords: expected " + std::to_string(a->dim()) + " coordinates");
  return a->element(std::move(coords));
}

Json algebra_to_json(const Algebra& a) {
  Json mul = Json::array();
  for (const auto& [pair, vec] : a.table())
    for (const auto& [k, c] : vec) mul.push_back(Json{pair.first, pair.second, k, scalar_to_json(c)});
  return Json{{"field", field_to_json(a.field())},
              {"dim", a.dim()},
              {"basis", a.labels()},
              {"unit", scalar_vector_to_json(a.unit_coords())},
              {"mul", mul}};
}

namespace {

AlgebraPtr parse_spec_inner(const Json& j, const std::string& path);

AlgebraPtr finalize(AlgebraPtr a) {
  if (!a->validated()) {
    ValidationReport r = a->validate();
    if (!r.ok) throw InvalidParams(r.violations.front().message);
  }
  return a;
}

AlgebraPtr parse_raw_algebra(const Json& j, const std::string& path) {
  Field f = parse_field(member(j, "field", path), path + ".field");
  int dim = as_int(member(j, "dim", path), path + ".dim");
  if (dim < 1) throw SchemaError(path + ".dim: must be positive");

  const Json& bj = as_array(member(j, "basis", path), path + ".basis");
  if (static_cast<int>(bj.size()) != dim)
    throw SchemaError(path + ".basis: expected " + std::to_string(dim) + " labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < bj.size(); ++i)
    labels.push_back(as_string(bj[i], idx(path + ".basis", i)));

  std::vector<Scalar> unit =
      parse_scalar_vector(f, member(j, "unit", path), path + ".unit");
  if (static_cast<int>(unit.size()) != dim)
    throw SchemaError(path + ".unit: expected " + std::to_string(dim) + " coordinates");

  const Json& mul = as_array(member(j, "mul", path), path + ".mul");
  std::map<std::pair<int, int>, std::map<int, Scalar>> sparse;
  for (std::size_t e = 0; e < mul.size(); ++e) {
    const std::string ep = idx(path + ".mul", e);
    const Json& entry = as_array(mul[e], ep);
    if (entry.size() != 4) throw SchemaError(ep + ": expected [i, j, k, coeff]");
    int i = as_int(entry[0], ep + "[0]");
    int jj = as_int(entry[1], ep + "[1]");
    int k = as_int(entry[2], ep + "[2]");
    if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
      throw SchemaError(ep + ": basis index out of range");
    if (sparse[{i, jj}].count(k)) throw SchemaError(ep + ": duplicate product entry");
    Scalar c = parse_scalar(f, entry[3], ep + "[3]");
    if (!c.is_zero()) sparse[{i, jj}].emplace(k, std::move(c));
  }
  std::map<std::pair<int, int>, Algebra::SparseVec> table;
  for (auto& [pair, entries] : sparse) {
    if (entries.empty()) continue;
    Algebra::SparseVec sv(entries.begin(), entries.end());
    table.emplace(pair, std::move(sv));
  }
  return finalize(Algebra::make(f, dim, std::move(labels), std::move(unit), std::move(table)));
}

AlgebraPtr parse_matrix_builder(const Json& j, const std::string& path) {
  const Json& mj = member(j, "matrix", path);
  if (!mj.is_object()) throw SchemaError(path + ".matrix: expected an object");
  reject_unknown_keys(mj, {"n", "over"}, path + ".matrix");
  int n = as_int(member(mj, "n", path + ".matrix"), path + ".matrix.n");
  if (n < 1) throw SchemaError(path + ".matrix.n: must be positive");
  if (mj.contains("over")) {
    if (j.contains("field"))
      throw SchemaError(path + ": give either matrix.over or a top-level field, not both");
    AlgebraPtr inner = parse_spec_inner(mj["over"], path + ".matrix.over");
    return finalize(build_matrix_algebra(inner, n));
  }
  Field f = parse_field(member(j, "field", path), path + ".field");
  return finalize(build_matrix_algebra(f, n));
}

AlgebraPtr parse_quaternion_builder(const Json& j, const std::string& path) {
  const Json& qj = member(j, "quaternion", path);
  if (!qj.is_object()) throw SchemaError(path + ".quaternion: expected an object");
  reject_unknown_keys(qj, {"a", "b", "char2"}, path + ".quaternion");
  Field f = parse_field(member(j, "field", path), path + ".field");
  Scalar a = parse_scalar(f, member(qj, "a", path + ".quaternion"), path + ".quaternion.a");
  Scalar b = parse_scalar(f, member(qj, "b", path + ".quaternion"), path + ".quaternion.b");
  bool char2_field = f.finite() && f.modulus() == 2;
  if (qj.contains("char2")) {
    const Json& cj = qj["char2"];
    if (!cj.is_boolean()) throw SchemaError(path + ".quaternion.char2: expected a boolean");
    if (cj.get<bool>() != char2_field)
      throw SchemaError(path + ".quaternion.char2: flag disagrees with the field characteristic");
  }
  return QuaternionAlgebra(f, a, b).algebra();
}

AlgebraPtr parse_group_algebra_builder(const Json& j, const std::string& path) {
  const Json& gj = member(j, "group_algebra", path);
  if (!gj.is_object()) throw SchemaError(path + ".group_algebra: expected an object");
  reject_unknown_keys(gj, {"group"}, path + ".group_algebra");
  Field f = parse_field(member(j, "field", path), path + ".field");
  FiniteGroup g =
      parse_group(member(gj, "group", path + ".group_algebra"), path + ".group_algebra.group");
  g.require_valid();
  return build_group_algebra(g, f);
}

AlgebraPtr parse_twisted_builder(const Json& j, const std::string& path) {
  const Json& tj = member(j, "twisted_group", path);
  if (!tj.is_object()) throw SchemaError(path + ".twisted_group: expected an object");
  reject_unknown_keys(tj, {"group", "tau"}, path + ".twisted_group");
  Field f = parse_field(member(j, "field", path), path + ".field");
  FiniteGroup g =
      parse_group(member(tj, "group", path + ".twisted_group"), path + ".twisted_group.group");
  g.require_valid();
  TwistingFunction tau =
      parse_cocycle(g, f, member(tj, "tau", path + ".twisted_group"), path + ".twisted_group.tau");
  return build_twisted_group_algebra(g, tau);
}

AlgebraPtr parse_product_builder(const Json& j, const std::string& path) {
  const Json& pj = as_array(member(j, "product", path), path + ".product");
  if (pj.size() < 2) throw SchemaError(path + ".product: expected at least two factors");
  AlgebraPtr acc = parse_spec_inner(pj[0], idx(path + ".product", 0));
  for (std::size_t i = 1; i < pj.size(); ++i)
    acc = finalize(direct_product(acc, parse_spec_inner(pj[i], idx(path + ".product", i))));
  return acc;
}

AlgebraPtr parse_spec_inner(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  bool raw = j.contains("dim") || j.contains("mul") || j.contains("unit") || j.contains("basis");
  int forms = (raw ? 1 : 0) + (j.contains("matrix") ? 1 : 0) + (j.contains("quaternion") ? 1 : 0) +
              (j.contains("twisted_group") ? 1 : 0) + (j.contains("group_algebra") ? 1 : 0) +
              (j.contains("product") ? 1 : 0);
  if (forms != 1)
    throw SchemaError(path + ": expected exactly one algebra form (raw, matrix, quaternion, "
                             "twisted_group, group_algebra, product)");
  if (raw) {
    reject_unknown_keys(j, {"field", "dim", "basis", "unit", "mul"}, path);
    return parse_raw_algebra(j, path);
  }
  if (j.contains("matrix")) {
    reject_unknown_keys(j, {"matrix", "field"}, path);
    return parse_matrix_builder(j, path);
  }
  if (j.contains("quaternion")) {
    reject_unknown_keys(j, {"quaternion", "field"}, path);
    return parse_quaternion_builder(j, path);
  }
  if (j.contains("twisted_group")) {
    reject_unknown_keys(j, {"twisted_group", "field"}, path);
    return parse_twisted_builder(j, path);
  }
  if (j.contains("group_algebra")) {
    reject_unknown_keys(j, {"group_algebra", "field"}, path);
    return parse_group_algebra_builder(j, path);
  }
  reject_unknown_keys(j, {"product"}, path);
  return parse_product_builder(j, path);
}

}  // namespace

AlgebraPtr parse_algebra_spec(const Json& j) { return parse_spec_inner(j, "$"); }

AlgebraPtr parse_algebra_spec_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
  return parse_algebra_spec(j);
}

Json load_json_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw SchemaError(filename + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw SchemaError(filename + ": not valid JSON: " + e.what());
  }
}

}  // namespace comdec
