#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "comdec/linalg.hpp"

namespace comdec {

class Algebra;

/** Element: coordinates of an algebra element in the structural basis.
 *  Carries a shared handle to its algebra; mixing elements of different
 *  algebras throws AlgebraMismatch. */
class Element {
 public:
  Element(std::shared_ptr<const Algebra> alg, std::vector<Scalar> coords);

  const Algebra& algebra() const { return *alg_; }
  const std::shared_ptr<const Algebra>& algebra_ptr() const { return alg_; }
  const std::vector<Scalar>& coords() const { return coords_; }
  const Scalar& coord(int i) const { return coords_[i]; }

  bool is_zero() const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;  // structure-constant product
  Element operator-() const;
  Element scaled(const Scalar& c) const;
  Element pow(int e) const;  // e >= 0
  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_same(const Element& o) const;
  std::shared_ptr<const Algebra> alg_;
  std::vector<Scalar> coords_;
};

/** One structured violation from validate(); never thrown. */
struct Violation {
  enum class Kind { Associativity, UnitLeft, UnitRight };
  Kind kind;
  int i, j, k;  // basis indices of the failing triple (k = -1 for unit laws)
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/** Decomposition report for A = Z(A) + [A,A]. */
struct DecompositionReport {
  bool holds;
  int dim_center;
  int dim_commutator;
  int dim_sum;
  int dim_intersection;
};

struct ElementSplit {
  Element central;
  Element commutator_part;
};

/** Algebra: finite-dimensional associative unital algebra given by structure
 *  constants on a distinguished basis. The multiplication table is sparse:
 *  (i, j) -> coordinates of b_i * b_j, with absent pairs meaning zero.
 *  validate() is opt-in, but center/commutator/decomposition/radical queries
 *  insist on a validated table (NotValidated otherwise). */
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  using SparseVec = std::vector<std::pair<int, Scalar>>;

  static std::shared_ptr<Algebra> make(Field field, int dim,
                                       std::vector<std::string> basis_labels,
                                       std::vector<Scalar> unit_coords,
                                       std::map<std::pair<int, int>, SparseVec> table);

  const Field& field() const { return field_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<Scalar>& unit_coords() const { return unit_coords_; }
  const std::map<std::pair<int, int>, SparseVec>& table() const { return table_; }

  Element element(std::vector<Scalar> coords) const;
  Element zero() const;
  Element one() const;
  Element basis_element(int i) const;

  // coordinates of b_i * b_j
  std::vector<Scalar> basis_product(int i, int j) const;

  ValidationReport validate() const;  // checks all dim^3 triples + unit laws
  bool validated() const { return validated_; }
  void require_validated(const char* op) const;

  // matrix of left multiplication L_x in the structural basis
  Mat regular_representation(const Element& x) const;
  // matrix of right multiplication R_x
  Mat right_representation(const Element& x) const;

  Subspace center() const;
  Subspace commutator_subspace() const;
  DecompositionReport check_decomposition() const;
  // splits x = z + c with z central, c in [A,A]; throws NotInSum
  ElementSplit decompose_element(const Element& x) const;
  Subspace subalgebra_generated(const std::vector<Element>& gens) const;
  Subspace jacobson_radical_char0() const;  // UnsupportedCharacteristic over F_p

 private:
  Algebra(Field field, int dim, std::vector<std::string> labels,
          std::vector<Scalar> unit_coords, std::map<std::pair<int, int>, SparseVec> table);

  Field field_;
  int dim_;
  std::vector<std::string> labels_;
  std::vector<Scalar> unit_coords_;
  std::map<std::pair<int, int>, SparseVec> table_;
  mutable bool validated_ = false;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// M_n(inner): basis = matrix units tensor inner basis, dimension n^2 * dim(inner)
std::shared_ptr<Algebra> build_matrix_algebra(const AlgebraPtr& inner, int n);
std::shared_ptr<Algebra> build_matrix_algebra(const Field& f, int n);
// one-dimensional algebra F itself
std::shared_ptr<Algebra> field_algebra(const Field& f);
// block-diagonal product A x B
std::shared_ptr<Algebra> direct_product(const AlgebraPtr& a, const AlgebraPtr& b);

// element of a matrix algebra built by build_matrix_algebra(f, n) from a Mat
Element matrix_to_element(const AlgebraPtr& matrix_alg, const Mat& m);
Mat element_to_matrix(const Element& x, int n);

}  // namespace comdec
