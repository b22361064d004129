#include "comdec/twisted.hpp"

#include <algorithm>
#include <deque>

namespace comdec {

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> cayley,
                         int identity)
    : labels_(std::move(labels)), cayley_(std::move(cayley)), identity_(identity) {
  int m = static_cast<int>(labels_.size());
  if (m == 0) throw InvalidParams("group must have at least one element");
  if (static_cast<int>(cayley_.size()) != m)
    throw InvalidParams("cayley table must have one row per element");
  for (const auto& row : cayley_) {
    if (static_cast<int>(row.size()) != m)
      throw InvalidParams("cayley table rows must have one entry per element");
    for (int v : row)
      if (v < 0 || v >= m) throw InvalidParams("cayley entry out of range");
  }
  if (identity_ < 0 || identity_ >= m) throw InvalidParams("identity index out of range");
}

int FiniteGroup::inverse(int x) const {
  for (int y = 0; y < order(); ++y)
    if (mul(x, y) == identity_ && mul(y, x) == identity_) return y;
  throw InvalidParams("element has no inverse: " + labels_[x]);
}

std::optional<GroupViolation> FiniteGroup::validate() const {
  int m = order();
  for (int x = 0; x < m; ++x) {
    std::vector<bool> seen_row(m, false), seen_col(m, false);
    for (int y = 0; y < m; ++y) {
      if (seen_row[mul(x, y)])
        return GroupViolation{GroupViolation::Kind::Latin, x, y, -1,
                              "row " + labels_[x] + " repeats " + labels_[mul(x, y)]};
      seen_row[mul(x, y)] = true;
      if (seen_col[mul(y, x)])
        return GroupViolation{GroupViolation::Kind::Latin, y, x, -1,
                              "column " + labels_[x] + " repeats " + labels_[mul(y, x)]};
      seen_col[mul(y, x)] = true;
    }
  }
  for (int x = 0; x < m; ++x)
    if (mul(identity_, x) != x || mul(x, identity_) != x)
      return GroupViolation{GroupViolation::Kind::Identity, x, -1, -1,
                            labels_[identity_] + " is not an identity at " + labels_[x]};
  for (int x = 0; x < m; ++x) {
    bool has_inverse = false;
    for (int y = 0; y < m && !has_inverse; ++y)
      has_inverse = mul(x, y) == identity_ && mul(y, x) == identity_;
    if (!has_inverse)
      return GroupViolation{GroupViolation::Kind::Inverse, x, -1, -1,
                            labels_[x] + " has no inverse"};
  }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          return GroupViolation{GroupViolation::Kind::Associativity, x, y, z,
                                "(" + labels_[x] + " " + labels_[y] + ") " + labels_[z] +
                                    " != " + labels_[x] + " (" + labels_[y] + " " + labels_[z] +
                                    ")"};
  return std::nullopt;
}

void FiniteGroup::require_valid() const {
  if (auto v = validate()) throw InvalidParams("not a group: " + v->message);
}

std::set<int> FiniteGroup::subgroup_generated(const std::set<int>& seeds) const {
  std::set<int> closure{identity_};
  std::deque<int> work(seeds.begin(), seeds.end());
  for (int s : seeds) closure.insert(s);
  while (!work.empty()) {
    int x = work.front();
    work.pop_front();
    std::vector<int> next;
    next.push_back(inverse(x));
    for (int y : closure) {
      next.push_back(mul(x, y));
      next.push_back(mul(y, x));
    }
    for (int n : next)
      if (closure.insert(n).second) work.push_back(n);
  }
  return closure;
}

bool FiniteGroup::same_structure(const FiniteGroup& o) const {
  return cayley_ == o.cayley_ && identity_ == o.identity_;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw InvalidParams("cyclic group needs n >= 1");
  std::vector<std::string> labels{"e"};
  if (n > 1) labels.push_back("g");
  for (int i = 2; i < n; ++i) labels.push_back("g" + std::to_string(i));
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return FiniteGroup(std::move(labels), std::move(table), 0);
}

FiniteGroup FiniteGroup::klein4() {
  std::vector<std::vector<int>> table(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) table[i][j] = i ^ j;
  return FiniteGroup({"e", "a", "b", "ab"}, std::move(table), 0);
}

namespace {

// r^a s^b with s r = r^{-1} s; index = a + n*b
FiniteGroup dihedral_like(int n, std::vector<std::string> labels) {
  std::vector<std::vector<int>> table(2 * n, std::vector<int>(2 * n));
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) {
      int a1 = i % n, b1 = i / n, a2 = j % n, b2 = j / n;
      int a = (a1 + (b1 ? n - a2 : a2)) % n;
      table[i][j] = a + n * (b1 ^ b2);
    }
  return FiniteGroup(std::move(labels), std::move(table), 0);
}

}  // namespace

FiniteGroup FiniteGroup::symmetric3() {
  return dihedral_like(3, {"e", "r", "r2", "s", "rs", "r2s"});
}

FiniteGroup FiniteGroup::dihedral4() {
  return dihedral_like(4, {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"});
}

FiniteGroup FiniteGroup::quaternion8() {
  // elements (sign, axis) with axis in {1, i, j, k}; index = 2*axis + (sign<0)
  auto mul_axes = [](int u, int v, int& sign) -> int {
    // returns u*v among axes 0..3 = {1, i, j, k}, accumulating the sign
    if (u == 0) return v;
    if (v == 0) return u;
    if (u == v) {
      sign = -sign;
      return 0;
    }
    // cyclic: i*j = k, j*k = i, k*i = j; reversed pairs flip the sign
    static const int cyc[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    bool forward = (u == 1 && v == 2) || (u == 2 && v == 3) || (u == 3 && v == 1);
    if (!forward) sign = -sign;
    return cyc[u][v];
  };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      int sign = (i % 2 ? -1 : 1) * (j % 2 ? -1 : 1);
      int axis = mul_axes(i / 2, j / 2, sign);
      table[i][j] = 2 * axis + (sign < 0 ? 1 : 0);
    }
  return FiniteGroup({"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, std::move(table), 0);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int ma = a.order(), mb = b.order();
  std::vector<std::string> labels;
  for (int i = 0; i < ma; ++i)
    for (int j = 0; j < mb; ++j) labels.push_back(a.label(i) + "," + b.label(j));
  std::vector<std::vector<int>> table(ma * mb, std::vector<int>(ma * mb));
  for (int i1 = 0; i1 < ma; ++i1)
    for (int j1 = 0; j1 < mb; ++j1)
      for (int i2 = 0; i2 < ma; ++i2)
        for (int j2 = 0; j2 < mb; ++j2)
          table[i1 * mb + j1][i2 * mb + j2] = a.mul(i1, i2) * mb + b.mul(j1, j2);
  return FiniteGroup(std::move(labels), std::move(table),
                     a.identity() * mb + b.identity());
}

TwistingFunction::TwistingFunction(FiniteGroup group, std::vector<std::vector<Scalar>> values)
    : group_(std::move(group)),
      field_(values.empty() || values[0].empty() ? Field::rationals() : values[0][0].field()),
      values_(std::move(values)) {
  int m = group_.order();
  if (static_cast<int>(values_.size()) != m)
    throw InvalidParams("twisting table must have one row per group element");
  for (const auto& row : values_) {
    if (static_cast<int>(row.size()) != m)
      throw InvalidParams("twisting table rows must have one entry per group element");
    for (const Scalar& s : row)
      if (!(s.field() == field_)) throw FieldMismatch("twisting values in mixed fields");
  }
}

std::optional<CocycleViolation> TwistingFunction::validate() const {
  if (auto g = group_.validate())
    throw InvalidParams("twisting function over an invalid group: " + g->message);
  int m = group_.order(), e = group_.identity();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (values_[x][y].is_zero())
        return CocycleViolation{CocycleViolation::Kind::Zero, x, y, -1,
                                "tau(" + group_.label(x) + ", " + group_.label(y) + ") = 0"};
  Scalar one = Scalar::one(field_);
  for (int x = 0; x < m; ++x) {
    if (values_[e][x] != one)
      return CocycleViolation{CocycleViolation::Kind::NotNormalized, e, x, -1,
                              "tau(1, " + group_.label(x) + ") != 1; normalize the cocycle"};
    if (values_[x][e] != one)
      return CocycleViolation{CocycleViolation::Kind::NotNormalized, x, e, -1,
                              "tau(" + group_.label(x) + ", 1) != 1; normalize the cocycle"};
  }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z) {
        Scalar lhs = values_[x][y] * values_[group_.mul(x, y)][z];
        Scalar rhs = values_[y][z] * values_[x][group_.mul(y, z)];
        if (lhs != rhs)
          return CocycleViolation{CocycleViolation::Kind::Cocycle, x, y, z,
                                  "cocycle identity fails at (" + group_.label(x) + ", " +
                                      group_.label(y) + ", " + group_.label(z) + ")"};
      }
  return std::nullopt;
}

void TwistingFunction::require_valid() const {
  if (auto v = validate()) throw InvalidParams("not a 2-cocycle: " + v->message);
}

TwistingFunction TwistingFunction::trivial(const FiniteGroup& g, const Field& f) {
  std::vector<std::vector<Scalar>> values(g.order(),
                                          std::vector<Scalar>(g.order(), Scalar::one(f)));
  return TwistingFunction(g, std::move(values));
}

TwistingFunction TwistingFunction::quaternionic(const FiniteGroup& klein, const Field& f) {
  if (!klein.same_structure(FiniteGroup::klein4()))
    throw InvalidParams("quaternionic twist needs the Klein four-group table");
  // rows/columns ordered e, a, b, ab; signs chosen so that a -> i, b -> j,
  // ab -> k reproduces the (-1,-1) quaternions
  static const int signs[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<Scalar>> values(4, std::vector<Scalar>(4, Scalar::one(f)));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) values[x][y] = Scalar::of_int(f, signs[x][y]);
  return TwistingFunction(klein, std::move(values));
}

TwistingFunction TwistingFunction::sign_carry(const FiniteGroup& cyclic, const Field& f) {
  int n = cyclic.order();
  if (!cyclic.same_structure(FiniteGroup::cyclic(n)))
    throw InvalidParams("sign carry twist needs a cyclic group table");
  std::vector<std::vector<Scalar>> values(n, std::vector<Scalar>(n, Scalar::one(f)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      values[i][j] = Scalar::of_int(f, i + j >= n ? -1 : 1);
  return TwistingFunction(cyclic, std::move(values));
}

std::shared_ptr<const Algebra> build_twisted_group_algebra(const FiniteGroup& g,
                                                           const TwistingFunction& tau) {
  if (!tau.group().same_structure(g))
    throw InvalidParams("twisting function belongs to a different group");
  g.require_valid();
  tau.require_valid();

  const Field& f = tau.field();
  int m = g.order();
  std::map<std::pair<int, int>, Algebra::SparseVec> table;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) table[{x, y}] = {{g.mul(x, y), tau.value(x, y)}};
  std::vector<Scalar> unit(m, Scalar::zero(f));
  unit[g.identity()] = Scalar::one(f);

  auto alg = Algebra::make(f, m, g.labels(), std::move(unit), std::move(table));
  auto report = alg->validate();
  if (!report.ok) throw Error("internal: twisted group table failed validation");
  return alg;
}

std::shared_ptr<const Algebra> build_group_algebra(const FiniteGroup& g, const Field& f) {
  return build_twisted_group_algebra(g, TwistingFunction::trivial(g, f));
}

std::set<int> support(const Element& x) {
  std::set<int> s;
  for (int i = 0; i < static_cast<int>(x.coords().size()); ++i)
    if (!x.coord(i).is_zero()) s.insert(i);
  return s;
}

CommutatorCentralReport audit_commutator_central(const std::shared_ptr<const Algebra>& a) {
  Subspace center = a->center();
  Subspace commutators = a->commutator_subspace();
  bool hypothesis = center.contains(commutators);
  bool commutative = commutators.dim() == 0;
  return CommutatorCentralReport{hypothesis, commutative, hypothesis && !commutative};
}

std::vector<std::pair<std::string, FiniteGroup>> groups_up_to_order8() {
  using FG = FiniteGroup;
  std::vector<std::pair<std::string, FiniteGroup>> out;
  for (int n = 1; n <= 8; ++n) out.emplace_back("C" + std::to_string(n), FG::cyclic(n));
  out.emplace_back("V4", FG::klein4());
  out.emplace_back("S3", FG::symmetric3());
  out.emplace_back("C4xC2", FG::direct_product(FG::cyclic(4), FG::cyclic(2)));
  out.emplace_back("C2xC2xC2",
                   FG::direct_product(FG::direct_product(FG::cyclic(2), FG::cyclic(2)),
                                      FG::cyclic(2)));
  out.emplace_back("D4", FG::dihedral4());
  out.emplace_back("Q8", FG::quaternion8());
  return out;
}

std::vector<CorpusEntry> twisted_corpus(const Field& f) {
  std::vector<CorpusEntry> out;
  for (const auto& [name, g] : groups_up_to_order8())
    out.push_back({name, "trivial", g, TwistingFunction::trivial(g, f)});
  FiniteGroup v4 = FiniteGroup::klein4();
  out.push_back({"V4", "quaternionic", v4, TwistingFunction::quaternionic(v4, f)});
  for (int n : {2, 4, 8}) {
    FiniteGroup cn = FiniteGroup::cyclic(n);
    out.push_back({"C" + std::to_string(n), "sign_carry", cn,
                   TwistingFunction::sign_carry(cn, f)});
  }
  return out;
}

}  // namespace comdec
