#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "comdec/algebra.hpp"

namespace comdec {

struct GroupViolation {
  enum class Kind { Latin, Identity, Inverse, Associativity };
  Kind kind;
  int x = -1, y = -1, z = -1;  // offending indices where applicable
  std::string message;
};

/** Finite group as an explicit Cayley table over element indices. The
 *  constructor checks shape only; validate() checks the group axioms. */
class FiniteGroup {
 public:
  // cayley[x][y] = index of x*y; throws InvalidParams on malformed shape
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> cayley,
              int identity);

  int order() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::vector<int>>& cayley() const { return cayley_; }
  int identity() const { return identity_; }
  int mul(int x, int y) const { return cayley_[x][y]; }
  int inverse(int x) const;  // assumes a valid group

  // first group-axiom violation, or nullopt for a genuine group
  std::optional<GroupViolation> validate() const;
  void require_valid() const;  // throws InvalidParams with the violation

  // closure of seeds plus the identity under products and inverses
  std::set<int> subgroup_generated(const std::set<int>& seeds) const;

  // tables agree (labels are cosmetic)
  bool same_structure(const FiniteGroup& o) const;

  static FiniteGroup cyclic(int n);
  static FiniteGroup klein4();
  static FiniteGroup symmetric3();
  static FiniteGroup dihedral4();
  static FiniteGroup quaternion8();
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> cayley_;
  int identity_;
};

struct CocycleViolation {
  enum class Kind { Zero, NotNormalized, Cocycle };
  Kind kind;
  int x = -1, y = -1, z = -1;
  std::string message;
};

/** Twisting function tau: G x G -> F \ {0}, held as a full table. Required
 *  normalized (tau(1,.) = tau(.,1) = 1) so the twisted unit is \bar 1;
 *  unnormalized input is reported, never rescaled. */
class TwistingFunction {
 public:
  // shape-checked; group axioms and cocycle law via validate()
  TwistingFunction(FiniteGroup group, std::vector<std::vector<Scalar>> values);

  const FiniteGroup& group() const { return group_; }
  const Field& field() const { return field_; }
  const Scalar& value(int x, int y) const { return values_[x][y]; }

  std::optional<CocycleViolation> validate() const;
  void require_valid() const;

  static TwistingFunction trivial(const FiniteGroup& g, const Field& f);
  // the Klein-four twist with quaternion signs; g must have the Klein table
  static TwistingFunction quaternionic(const FiniteGroup& klein, const Field& f);
  // carrying cocycle on a cyclic group: tau(g^i, g^j) = -1 when i + j wraps
  static TwistingFunction sign_carry(const FiniteGroup& cyclic, const Field& f);

 private:
  FiniteGroup group_;
  Field field_;
  std::vector<std::vector<Scalar>> values_;
};

/** Twisted group algebra F^tau G on basis {\bar g}: \bar x \bar y =
 *  tau(x, y) \overline{xy}. Validates the result (the cocycle law is exactly
 *  associativity) and returns a pre-validated algebra. */
std::shared_ptr<const Algebra> build_twisted_group_algebra(const FiniteGroup& g,
                                                           const TwistingFunction& tau);

// plain group algebra FG: the trivial twist
std::shared_ptr<const Algebra> build_group_algebra(const FiniteGroup& g, const Field& f);

// indices of the basis vectors with nonzero coefficient
std::set<int> support(const Element& x);

struct CommutatorCentralReport {
  bool hypothesis_holds;    // [A,A] contained in Z(A)
  bool commutative;         // [A,A] = 0
  bool corollary_violated;  // hypothesis holds yet A is noncommutative
};

/** The commutativity audit: over a field of characteristic 0, a twisted group
 *  algebra whose commutators are all central must already be commutative, so
 *  corollary_violated is expected false on every valid input. */
CommutatorCentralReport audit_commutator_central(const std::shared_ptr<const Algebra>& a);

struct CorpusEntry {
  std::string group_name;
  std::string cocycle_name;
  FiniteGroup group;
  TwistingFunction tau;
};

// all fourteen groups of order <= 8
std::vector<std::pair<std::string, FiniteGroup>> groups_up_to_order8();

// every corpus group with its trivial twist, plus the nontrivial cocycles
// (quaternionic Klein four, sign carries on C_2, C_4, C_8)
std::vector<CorpusEntry> twisted_corpus(const Field& f);

}  // namespace comdec
