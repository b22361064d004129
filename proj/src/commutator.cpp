#include "comdec/commutator.hpp"

namespace comdec {

namespace {

Mat submat(const Mat& m, int r0, int c0, int rows, int cols) {
  Mat s(m.field(), rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) s.at(i, j) = m.at(r0 + i, c0 + j);
  return s;
}

// 1 (+) q
Mat blockdiag1(const Mat& q) {
  const Field& f = q.field();
  Mat m(f, q.rows() + 1, q.cols() + 1);
  m.at(0, 0) = Scalar::one(f);
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j) m.at(i + 1, j + 1) = q.at(i, j);
  return m;
}

std::vector<Scalar> unit_vec(const Field& f, int n, int i) {
  std::vector<Scalar> v(n, Scalar::zero(f));
  v[i] = Scalar::one(f);
  return v;
}

std::vector<Scalar> mat_apply(const Mat& a, const std::vector<Scalar>& v) {
  std::vector<Scalar> r(a.rows(), Scalar::zero(a.field()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero() && !v[j].is_zero()) r[i] += a.at(i, j) * v[j];
  return r;
}

bool dependent_pair(const Field& f, const std::vector<Scalar>& v, const std::vector<Scalar>& w) {
  Mat m = Mat::from_rows(f, {v, w});
  return rref(m).rank <= 1;
}

// columns: v, av, then standard basis vectors keeping the set independent
Mat complete_basis(const Field& f, const std::vector<Scalar>& v, const std::vector<Scalar>& av) {
  int n = static_cast<int>(v.size());
  std::vector<std::vector<Scalar>> chosen{v, av};
  for (int k = 0; k < n && static_cast<int>(chosen.size()) < n; ++k) {
    chosen.push_back(unit_vec(f, n, k));
    if (rref(Mat::from_rows(f, chosen)).rank != static_cast<int>(chosen.size()))
      chosen.pop_back();
  }
  Mat p(f, n, n);
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < n; ++i) p.at(i, c) = chosen[c][i];
  return p;
}

// elementary conjugation by (I + c * E_{jk}), j != k, applied to b;
// transform accumulates into t
void elem_conjugate(Mat& b, Mat& t, int j, int k, const Scalar& c) {
  const Field& f = b.field();
  Mat m = Mat::identity(f, b.rows());
  m.at(j, k) = c;
  Mat minv = Mat::identity(f, b.rows());
  minv.at(j, k) = -c;
  b = m * b * minv;
  t = m * t;
}

// p with (p a p^{-1}) having diagonal (0, ..., 0, trace(a)); requires a
// non-scalar, or zero, or 1x1
Mat reduce(const Mat& a) {
  const Field& f = a.field();
  int n = a.rows();
  if (n == 1) return Mat::identity(f, 1);
  if (a.is_scalar()) {
    if (a.is_zero()) return Mat::identity(f, n);
    throw ScalarObstruction("scalar matrix cannot reach a zero diagonal by similarity");
  }

  // deterministic pivot scan: e_i, then e_i + e_j; every non-scalar matrix
  // admits one (a matrix fixing all these lines is scalar)
  std::vector<std::vector<Scalar>> candidates;
  for (int i = 0; i < n; ++i) candidates.push_back(unit_vec(f, n, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<Scalar> v = unit_vec(f, n, i);
      v[j] = Scalar::one(f);
      candidates.push_back(std::move(v));
    }

  bool have_fallback = false;
  Mat fb_b(f, 0, 0), fb_t(f, 0, 0);
  for (const auto& v : candidates) {
    std::vector<Scalar> av = mat_apply(a, v);
    if (dependent_pair(f, v, av)) continue;
    Mat pcols = complete_basis(f, v, av);
    Mat t = pcols.inverse();
    Mat b = t * a * pcols;  // b(0,0) = 0, first column = e_1
    Mat block = submat(b, 1, 1, n - 1, n - 1);
    if (n == 2 || block.is_zero() || !block.is_scalar()) {
      if (n == 2 || block.is_zero()) return t;
      Mat q = reduce(block);
      return blockdiag1(q) * t;
    }
    if (!have_fallback) {
      fb_b = b;
      fb_t = t;
      have_fallback = true;
    }
  }

  // every pivot left a scalar trailing block mu*I (mu != 0), n >= 3
  if (!have_fallback) throw Error("internal: non-scalar matrix without a valid pivot");
  Mat b = fb_b, t = fb_t;
  Scalar mu = b.at(1, 1);

  bool row_has_nonzero = false, row_has_zero = false;
  for (int k = 1; k < n; ++k) {
    if (b.at(0, k).is_zero()) row_has_zero = true;
    else row_has_nonzero = true;
  }

  if (row_has_nonzero) {
    if (!row_has_zero) {
      // clear b(0,2) by conjugating with I + s*E_{1,2}; block stays mu*I
      Scalar s = b.at(0, 2) / b.at(0, 1);
      elem_conjugate(b, t, 1, 2, s);
    }
    int j0 = -1, k0 = -1;
    for (int k = 1; k < n; ++k) {
      if (j0 < 0 && b.at(0, k).is_zero()) j0 = k;
      if (k0 < 0 && !b.at(0, k).is_zero()) k0 = k;
    }
    // I + E_{j0,0} keeps b(0,0) = 0 (row j0 of b's first row is zero there)
    // and adds the first row into block row j0, making the block non-scalar
    elem_conjugate(b, t, j0, 0, Scalar::one(f));
  } else {
    // irreducible shape: first row zero, first column e_1, block mu*I.
    // explicit corner basis u0 = e0+e2, u1 = e0, u2 = mu*e0+e1+mu*e2 zeroes
    // two diagonal positions and leaves a non-scalar trailing block
    Mat u = Mat::identity(f, n);
    u.at(0, 0) = Scalar::one(f);  u.at(2, 0) = Scalar::one(f);
    u.at(0, 1) = Scalar::one(f);  u.at(1, 1) = Scalar::zero(f);
    u.at(0, 2) = mu;              u.at(1, 2) = Scalar::one(f);  u.at(2, 2) = mu;
    // (columns 3.. stay standard)
    u.at(1, 0) = Scalar::zero(f);
    u.at(2, 1) = Scalar::zero(f);
    Mat uinv = u.inverse();
    b = uinv * b * u;
    t = uinv * t;
  }

  if (!b.at(0, 0).is_zero()) throw Error("internal: pivot normalization lost");
  Mat block = submat(b, 1, 1, n - 1, n - 1);
  Mat q = reduce(block);
  return blockdiag1(q) * t;
}

}  // namespace

ZeroDiagonalResult zero_diagonal_similarity(const Mat& a) {
  if (!a.is_square()) throw NotSquare("zero-diagonal similarity of a non-square matrix");
  if (!a.trace().is_zero()) throw NotTraceless("matrix has nonzero trace");
  Mat p = reduce(a);
  Mat b = p * a * p.inverse();
  for (int i = 0; i < b.rows(); ++i)
    if (!b.at(i, i).is_zero()) throw Error("internal: diagonal not cleared");
  return {std::move(p), std::move(b)};
}

CommutatorPair express_traceless_as_commutator(const Mat& a) {
  if (!a.is_square()) throw NotSquare("commutator expression of a non-square matrix");
  if (!a.trace().is_zero()) throw NotTraceless("matrix has nonzero trace");
  const Field& f = a.field();
  int n = a.rows();
  if (a.is_zero()) return {Mat(f, n, n), Mat(f, n, n)};
  if (f.finite() && n > f.modulus())
    throw InsufficientFieldElements("need " + std::to_string(n) +
                                    " distinct elements in F_" + std::to_string(f.modulus()));
  auto zd = zero_diagonal_similarity(a);
  // x0 = diag(0, 1, ..., n-1); y0 = b_ij / (d_i - d_j) off the diagonal
  Mat x0(f, n, n), y0(f, n, n);
  std::vector<Scalar> d;
  for (int i = 0; i < n; ++i) d.push_back(Scalar::of_int(f, i));
  for (int i = 0; i < n; ++i) x0.at(i, i) = d[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) y0.at(i, j) = zd.b.at(i, j) / (d[i] - d[j]);
  Mat pinv = zd.p.inverse();
  return {pinv * x0 * zd.p, pinv * y0 * zd.p};
}

CentralSplit central_plus_commutator(const Mat& a) {
  if (!a.is_square()) throw NotSquare("central split of a non-square matrix");
  const Field& f = a.field();
  int n = a.rows();
  Scalar n_in_f = Scalar::of_int(f, n);
  if (n_in_f.is_zero())
    throw CharDividesN("characteristic divides the matrix size; trace/n undefined");
  Scalar lambda = a.trace() / n_in_f;
  Mat traceless = a - Mat::identity(f, n).scaled(lambda);
  auto pair = express_traceless_as_commutator(traceless);
  return {std::move(lambda), std::move(pair.x), std::move(pair.y)};
}

}  // namespace comdec
