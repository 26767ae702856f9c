#pragma once

// Seeded generators and small exact oracles shared by the test binaries.

#include <cstdint>
#include <random>
#include <vector>

#include "schmidt/schmidt.hpp"

namespace schmidt::testing {

inline const std::vector<std::int64_t>& all_fields() {
  static const std::vector<std::int64_t> v{-3, -4, -7, -8, -11, -15, -19, -20, -23};
  return v;
}

inline const std::vector<std::int64_t>& euclidean_fields() {
  static const std::vector<std::int64_t> v{-3, -4, -7, -8, -11};
  return v;
}

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline QuadInt random_quadint(Discriminant d, Rng& rng, std::int64_t r) {
  return {d, uniform(rng, -r, r), uniform(rng, -r, r)};
}

/// A product of `length` random factors E(a), its transpose, S and S-map
/// matrices, so that non-Euclidean fields also reach beyond the elementary
/// subgroup.
inline Matrix2 random_sl2(Discriminant d, Rng& rng, int length) {
  Matrix2 m = Matrix2::identity(d);
  const QuadInt zero(d, 0), one(d, 1);
  for (int i = 0; i < length; ++i) {
    switch (uniform(rng, 0, 3)) {
      case 0:
        m = m * Matrix2::elementary(random_quadint(d, rng, 2));
        break;
      case 1:
        m = m * Matrix2{one, zero, random_quadint(d, rng, 2), one};
        break;
      case 2:
        m = m * Matrix2::swap(d);
        break;
      default: {
        const Integer f = uniform(rng, 1, 4);
        const auto res = enumerate_residues(d, f);
        m = m * s_map_matrix(f, res[uniform(rng, 0, static_cast<std::int64_t>(res.size()) - 1)]);
      }
    }
  }
  return m;
}

/// N(a + b tau) written out from tau^2 = t tau - n.
inline Integer norm_oracle(Discriminant d, const Integer& a, const Integer& b) {
  if (d.value() % 4 == 0) return a * a - (d.value() / 4) * b * b;
  return a * a + a * b + ((1 - d.value()) / 4) * b * b;
}

}  // namespace schmidt::testing
