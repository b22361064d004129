#pragma once

#include <optional>
#include <vector>

#include "comdec/field.hpp"

namespace comdec {

/** Mat: dense matrix over an exact field. Value-semantic; all operations
 *  return new matrices. Entries are stored row-major. */
class Mat {
 public:
  Mat(const Field& f, int rows, int cols);  // zero-filled
  static Mat identity(const Field& f, int n);
  static Mat from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows);

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Scalar& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Scalar& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  // true iff square and equal to c*I for some scalar c (including 0)
  bool is_scalar() const;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Scalar& c) const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  std::vector<Scalar> row(int r) const;
  std::vector<Scalar> col(int c) const;
  Mat vstack(const Mat& below) const;
  Mat hstack(const Mat& right) const;

  Scalar trace() const;  // throws NotSquare
  Mat inverse() const;   // throws NotSquare / NotInvertible

  std::string to_string() const;

 private:
  Field field_;
  int rows_, cols_;
  std::vector<Scalar> data_;
};

/** Result of Gauss-Jordan elimination: canonical reduced row echelon form. */
struct Rref {
  Mat matrix;
  int rank;
  std::vector<int> pivot_cols;
};

Rref rref(const Mat& m);

/** Particular solution plus kernel of the homogeneous system. */
class Subspace;
struct LinearSolution {
  std::vector<Scalar> particular;  // free variables set to zero
  Subspace kernel() const;
  Mat kernel_basis;  // rows form the canonical kernel basis (may have 0 rows)
};

// Solves a*x = b (b a column of length a.rows()); nullopt when inconsistent.
std::optional<LinearSolution> solve_linear(const Mat& a, const std::vector<Scalar>& b);

// Canonical basis of {x : a*x = 0}, rows in reduced row echelon form.
Mat kernel(const Mat& a);

/** Subspace: subspace of F^n held as a canonical RREF basis, so two subspaces
 *  are equal exactly when their stored bases are equal row-by-row. */
class Subspace {
 public:
  static Subspace zero(const Field& f, int ambient_dim);
  static Subspace full(const Field& f, int ambient_dim);
  static Subspace from_vectors(const Field& f, int ambient_dim,
                               const std::vector<std::vector<Scalar>>& vectors);
  static Subspace from_rows(const Mat& rows);

  const Field& field() const { return field_; }
  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  std::vector<Scalar> basis_vector(int i) const { return basis_.row(i); }

  Subspace sum(const Subspace& o) const;        // throws AmbientMismatch
  Subspace intersect(const Subspace& o) const;  // throws AmbientMismatch
  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  Subspace(const Field& f, int ambient, Mat basis)
      : field_(f), ambient_(ambient), basis_(std::move(basis)) {}
  Field field_;
  int ambient_;
  Mat basis_;  // rank x ambient, canonical RREF, no zero rows
};

// Monic minimal polynomial of a square matrix, low-degree coefficients first
// (coeffs[i] multiplies x^i; leading coefficient 1 is included). Found by
// growing the power list I, m, m^2, ... until the first linear dependence.
std::vector<Scalar> minimal_polynomial(const Mat& m);

// Evaluates a dense polynomial (low-first coefficients) at a square matrix.
Mat eval_poly_at(const std::vector<Scalar>& coeffs, const Mat& m);

std::string poly_to_string(const std::vector<Scalar>& coeffs);  // e.g. "x^2 - 3x + 2"

}  // namespace comdec
