#pragma once

#include <cstdint>
#include <random>

#include "comdec/field.hpp"

namespace comdec {

/** Rng: seeded deterministic sampler. Integer draws are derived directly from
 *  mt19937_64 output (std distributions are implementation-defined and would
 *  not reproduce across standard libraries). */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // uniform-ish integer in [lo, hi]; modulo bias is irrelevant at desk scale
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // over Q: numerator in [-height, height], denominator in [1, height];
  // over F_p: uniform residue
  Scalar scalar(const Field& f, std::int64_t height) {
    if (f.is_rationals())
      return Scalar(f, range(-height, height), range(1, height < 1 ? 1 : height));
    return Scalar(f, range(0, f.modulus() - 1), 1);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace comdec
