#include "comdec/linalg.hpp"

#include <sstream>

namespace comdec {

Mat::Mat(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {
  if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
}

Mat Mat::identity(const Field& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Mat m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw DimensionMismatch("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool Mat::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Mat::is_scalar() const {
  if (!is_square() || rows_ == 0) return true;
  const Scalar& d = at(0, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i == j ? (at(i, j) != d) : !at(i, j).is_zero()) return false;
  return true;
}

static void check_same_shape(const Mat& a, const Mat& b) {
  if (a.field() != b.field()) throw FieldMismatch("matrices over different fields");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix shapes differ");
}

Mat Mat::operator+(const Mat& o) const {
  check_same_shape(*this, o);
  Mat r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  check_same_shape(*this, o);
  Mat r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& s : r.data_) s = -s;
  return r;
}

Mat Mat::scaled(const Scalar& c) const {
  Mat r = *this;
  for (auto& s : r.data_) s = s * c;
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (field_ != o.field_) throw FieldMismatch("matrices over different fields");
  if (cols_ != o.rows_) throw DimensionMismatch("inner dimensions differ");
  Mat r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

bool Mat::operator==(const Mat& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Scalar> Mat::row(int r) const {
  std::vector<Scalar> v;
  v.reserve(cols_);
  for (int j = 0; j < cols_; ++j) v.push_back(at(r, j));
  return v;
}

std::vector<Scalar> Mat::col(int c) const {
  std::vector<Scalar> v;
  v.reserve(rows_);
  for (int i = 0; i < rows_; ++i) v.push_back(at(i, c));
  return v;
}

Mat Mat::vstack(const Mat& below) const {
  if (field_ != below.field_) throw FieldMismatch("matrices over different fields");
  if (cols_ != below.cols_) throw DimensionMismatch("column counts differ");
  Mat r(field_, rows_ + below.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < below.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = below.at(i, j);
  return r;
}

Mat Mat::hstack(const Mat& right) const {
  if (field_ != right.field_) throw FieldMismatch("matrices over different fields");
  if (rows_ != right.rows_) throw DimensionMismatch("row counts differ");
  Mat r(field_, rows_, cols_ + right.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < right.cols_; ++j) r.at(i, cols_ + j) = right.at(i, j);
  }
  return r;
}

Scalar Mat::trace() const {
  if (!is_square()) throw NotSquare("trace of a non-square matrix");
  Scalar t = Scalar::zero(field_);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Mat Mat::inverse() const {
  if (!is_square()) throw NotSquare("inverse of a non-square matrix");
  Rref r = rref(hstack(identity(field_, rows_)));
  // invertible iff the left block reduces to the identity: pivots stay left
  for (int i = 0; i < rows_; ++i)
    if (i >= static_cast<int>(r.pivot_cols.size()) || r.pivot_cols[i] != i)
      throw NotInvertible("matrix is singular");
  Mat inv(field_, rows_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < rows_; ++j) inv.at(i, j) = r.matrix.at(i, rows_ + j);
  return inv;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

Rref rref(const Mat& m) {
  Mat a = m;
  int rows = a.rows(), cols = a.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!a.at(i, c).is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(r, j));
    Scalar inv = a.at(r, c).inverse();
    for (int j = c; j < cols; ++j) a.at(r, j) = a.at(r, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar factor = a.at(i, c);
      for (int j = c; j < cols; ++j) a.at(i, j) = a.at(i, j) - factor * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{std::move(a), r, std::move(pivots)};
}

Mat kernel(const Mat& a) {
  Rref r = rref(a);
  const Field& f = a.field();
  int n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int freec = 0; freec < n; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<Scalar> v(n, Scalar::zero(f));
    v[freec] = Scalar::one(f);
    for (int i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = -r.matrix.at(i, freec);
    basis.push_back(std::move(v));
  }
  Mat k = Mat::from_rows(f, basis);
  if (basis.empty()) k = Mat(f, 0, n);
  return rref(k).matrix;  // canonicalize (already independent, keeps row order stable)
}

std::optional<LinearSolution> solve_linear(const Mat& a, const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw DimensionMismatch("rhs length");
  const Field& f = a.field();
  Mat rhs(f, a.rows(), 1);
  for (int i = 0; i < a.rows(); ++i) rhs.at(i, 0) = b[i];
  Rref r = rref(a.hstack(rhs));
  // inconsistent iff some pivot lands in the appended column
  for (int c : r.pivot_cols)
    if (c == a.cols()) return std::nullopt;
  std::vector<Scalar> x(a.cols(), Scalar::zero(f));
  for (int i = 0; i < r.rank; ++i) x[r.pivot_cols[i]] = r.matrix.at(i, a.cols());
  return LinearSolution{std::move(x), kernel(a)};
}

Subspace LinearSolution::kernel() const {
  return Subspace::from_rows(kernel_basis);
}

Subspace Subspace::zero(const Field& f, int ambient_dim) {
  return Subspace(f, ambient_dim, Mat(f, 0, ambient_dim));
}

Subspace Subspace::full(const Field& f, int ambient_dim) {
  return Subspace(f, ambient_dim, Mat::identity(f, ambient_dim));
}

Subspace Subspace::from_vectors(const Field& f, int ambient_dim,
                                const std::vector<std::vector<Scalar>>& vectors) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient_dim)
      throw AmbientMismatch("vector length differs from ambient dimension");
  Mat stacked = vectors.empty() ? Mat(f, 0, ambient_dim) : Mat::from_rows(f, vectors);
  return from_rows(stacked);
}

Subspace Subspace::from_rows(const Mat& rows) {
  Rref r = rref(rows);
  Mat basis(rows.field(), r.rank, rows.cols());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < rows.cols(); ++j) basis.at(i, j) = r.matrix.at(i, j);
  return Subspace(rows.field(), rows.cols(), std::move(basis));
}

static void check_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.field() != b.field()) throw FieldMismatch("subspaces over different fields");
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("ambient dimensions differ");
}

Subspace Subspace::sum(const Subspace& o) const {
  check_same_ambient(*this, o);
  return from_rows(basis_.vstack(o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  check_same_ambient(*this, o);
  // columns of [U^T | -W^T] weighted by (a | b) with a^T U = b^T W
  int k = dim(), l = o.dim();
  if (k == 0 || l == 0) return zero(field_, ambient_);
  Mat m = basis_.transpose().hstack(o.basis_.transpose().scaled(-Scalar::one(field_)));
  Mat ker = kernel(m);
  std::vector<std::vector<Scalar>> vecs;
  for (int i = 0; i < ker.rows(); ++i) {
    std::vector<Scalar> v(ambient_, Scalar::zero(field_));
    for (int t = 0; t < k; ++t) {
      const Scalar& c = ker.at(i, t);
      if (c.is_zero()) continue;
      for (int j = 0; j < ambient_; ++j) v[j] += c * basis_.at(t, j);
    }
    vecs.push_back(std::move(v));
  }
  return from_vectors(field_, ambient_, vecs);
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw AmbientMismatch("vector length");
  // reduce against the RREF basis; containment iff the remainder vanishes
  std::vector<Scalar> rem = v;
  for (int i = 0; i < basis_.rows(); ++i) {
    int pc = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!basis_.at(i, j).is_zero()) { pc = j; break; }
    if (pc < 0 || rem[pc].is_zero()) continue;
    Scalar factor = rem[pc];  // pivot entry is 1
    for (int j = 0; j < ambient_; ++j) rem[j] -= factor * basis_.at(i, j);
  }
  for (const auto& s : rem)
    if (!s.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& o) const {
  check_same_ambient(*this, o);
  for (int i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_vector(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  check_same_ambient(*this, o);
  return basis_ == o.basis_;
}

static std::vector<Scalar> vec_of(const Mat& m) {
  std::vector<Scalar> v;
  v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

std::vector<Scalar> minimal_polynomial(const Mat& m) {
  if (!m.is_square()) throw NotSquare("minimal polynomial of a non-square matrix");
  const Field& f = m.field();
  int n = m.rows();
  if (n == 0) return {Scalar::one(f)};
  std::vector<Mat> powers{Mat::identity(f, n)};
  for (int d = 1; d <= n; ++d) {
    powers.push_back(powers.back() * m);
    // solve sum_{t<d} c_t m^t = m^d
    Mat a(f, n * n, d);
    for (int t = 0; t < d; ++t) {
      auto v = vec_of(powers[t]);
      for (int i = 0; i < n * n; ++i) a.at(i, t) = v[i];
    }
    auto b = vec_of(powers[d]);
    if (auto sol = solve_linear(a, b)) {
      std::vector<Scalar> coeffs;
      coeffs.reserve(d + 1);
      for (int t = 0; t < d; ++t) coeffs.push_back(-sol->particular[t]);
      coeffs.push_back(Scalar::one(f));
      return coeffs;
    }
  }
  throw Error("minimal polynomial not found below dimension bound");  // unreachable
}

Mat eval_poly_at(const std::vector<Scalar>& coeffs, const Mat& m) {
  if (!m.is_square()) throw NotSquare("polynomial at a non-square matrix");
  const Field& f = m.field();
  Mat acc(f, m.rows(), m.rows());
  Mat power = Mat::identity(f, m.rows());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) acc = acc + power.scaled(coeffs[i]);
    if (i + 1 < coeffs.size()) power = power * m;
  }
  return acc;
}

std::string poly_to_string(const std::vector<Scalar>& coeffs) {
  if (coeffs.empty()) return "0";
  std::string s;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const Scalar& c = coeffs[i];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    bool unit_coeff = (cs == "1") && i > 0;
    if (!unit_coeff) s += cs;
    if (i > 0) {
      if (!unit_coeff) s += "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace comdec
