#pragma once

#include "comdec/linalg.hpp"

namespace comdec {

struct ZeroDiagonalResult {
  Mat p;  // invertible change of basis
  Mat b;  // b = p * a * p^{-1}, all diagonal entries zero
};

struct CommutatorPair {
  Mat x;
  Mat y;  // a = x*y - y*x
};

struct CentralSplit {
  Scalar lambda;  // a = lambda * I + (x*y - y*x)
  Mat x;
  Mat y;
};

// Conjugates a traceless matrix to one with zero diagonal. Deterministic:
// pivot vectors are scanned in a fixed order (standard basis vectors first,
// then pairwise sums). Throws NotTraceless for nonzero trace and
// ScalarObstruction for nonzero scalar input (possible only when the
// characteristic divides n).
ZeroDiagonalResult zero_diagonal_similarity(const Mat& a);

// Writes a traceless matrix as a single commutator x*y - y*x. Needs n
// pairwise-distinct field elements (0..n-1); throws InsufficientFieldElements
// over F_p when n > p, and ScalarObstruction when the zero-diagonal
// reduction is impossible.
CommutatorPair express_traceless_as_commutator(const Mat& a);

// Splits any square matrix as (trace(a)/n) * I + a single commutator.
// Throws CharDividesN when the characteristic divides n.
CentralSplit central_plus_commutator(const Mat& a);

}  // namespace comdec
