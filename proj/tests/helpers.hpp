#pragma once

#include <string>
#include <vector>

#include "comdec/algebra.hpp"
#include "comdec/linalg.hpp"
#include "comdec/rng.hpp"

namespace th {

using namespace comdec;

inline Field q() { return Field::rationals(); }
inline Field fp(std::int64_t p) { return Field::prime(p); }

inline Scalar sc(const Field& f, const std::string& s) { return Scalar::parse(f, s); }
inline Scalar si(const Field& f, std::int64_t n) { return Scalar::of_int(f, n); }

inline Mat mat(const Field& f, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Scalar>> parsed;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (const auto& e : r) row.push_back(sc(f, e));
    parsed.push_back(std::move(row));
  }
  return Mat::from_rows(f, parsed);
}

inline Mat random_mat(Rng& rng, const Field& f, int n, std::int64_t height) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rng.scalar(f, height);
  return m;
}

inline Mat random_traceless(Rng& rng, const Field& f, int n, std::int64_t height) {
  Mat m = random_mat(rng, f, n, height);
  // push the trace into the last diagonal entry's negative partial sums
  Scalar t = Scalar::zero(f);
  for (int i = 0; i + 1 < n; ++i) t += m.at(i, i);
  m.at(n - 1, n - 1) = -t;
  return m;
}

inline std::vector<Scalar> coords(const Field& f, const std::vector<std::string>& v) {
  std::vector<Scalar> out;
  for (const auto& s : v) out.push_back(sc(f, s));
  return out;
}

}  // namespace th
