#pragma once

// Small dense integer linear algebra: unimodular column echelon form, integer
// solutions of A v = b, integer kernels, and Hermite bases of sublattices of Z^2.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "schmidt/error.hpp"
#include "schmidt/integer.hpp"

namespace schmidt {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;  // row-major

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// A * U = H with U unimodular and H in column echelon form: column k < rank
/// has a positive pivot in row pivot_rows[k] and zeros above it; columns
/// from rank on are zero.
struct ColumnEchelon {
  IntMatrix h;
  IntMatrix u;
  std::vector<std::size_t> pivot_rows;
  std::size_t rank = 0;
};

inline ColumnEchelon column_echelon(const IntMatrix& a) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  ColumnEchelon out{a, identity_matrix(n), {}, 0};
  auto& h = out.h;
  auto& u = out.u;

  // Replace columns (c, j) by (x*Cc + y*Cj, -(b/g)*Cc + (a/g)*Cj).
  auto combine = [&](std::size_t c, std::size_t j, const Integer& x, const Integer& y, const Integer& p,
                     const Integer& q) {
    for (auto* mat : {&h, &u}) {
      for (auto& row : *mat) {
        Integer vc = row[c], vj = row[j];
        row[c] = x * vc + y * vj;
        row[j] = p * vc + q * vj;
      }
    }
  };

  std::size_t col = 0;
  for (std::size_t r = 0; r < m && col < n; ++r) {
    for (std::size_t j = col + 1; j < n; ++j) {
      if (h[r][j] == 0) continue;
      const Integer av = h[r][col], bv = h[r][j];
      const auto eg = extended_gcd(av, bv);
      combine(col, j, eg.x, eg.y, -bv / eg.g, av / eg.g);
    }
    if (h[r][col] == 0) continue;
    if (h[r][col] < 0) {
      for (auto* mat : {&h, &u})
        for (auto& row : *mat) row[col] = -row[col];
    }
    out.pivot_rows.push_back(r);
    ++col;
  }
  out.rank = col;
  return out;
}

/// One integer solution of A v = b, or nullopt if none exists.
inline std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  const auto ce = column_echelon(a);
  const std::size_t n = ce.u.size();
  IntVector w(n, 0);
  for (std::size_t k = 0; k < ce.rank; ++k) {
    const std::size_t r = ce.pivot_rows[k];
    Integer rest = b[r];
    for (std::size_t j = 0; j < k; ++j) rest -= ce.h[r][j] * w[j];
    if (rest % ce.h[r][k] != 0) return std::nullopt;
    w[k] = rest / ce.h[r][k];
  }
  for (std::size_t r = 0; r < a.size(); ++r) {
    Integer acc = 0;
    for (std::size_t j = 0; j < ce.rank; ++j) acc += ce.h[r][j] * w[j];
    if (acc != b[r]) return std::nullopt;
  }
  IntVector v(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v[i] += ce.u[i][j] * w[j];
  return v;
}

/// A Z-basis of {v : A v = 0}.
inline std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  const auto ce = column_echelon(a);
  const std::size_t n = ce.u.size();
  std::vector<IntVector> basis;
  for (std::size_t k = ce.rank; k < n; ++k) {
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = ce.u[i][k];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Hermite basis of a rank-2 sublattice of Z^2 spanned by `gens`:
/// first = (x, 0) with x > 0, second = (y, z) with z > 0 and 0 <= y < x.
/// Throws errc::rank_deficient if the span has rank < 2.
struct Hermite2 {
  Integer x, y, z;
  Integer covolume() const { return x * z; }
  friend bool operator==(const Hermite2& p, const Hermite2& q) { return p.x == q.x && p.y == q.y && p.z == q.z; }
};

inline Hermite2 hermite2(std::vector<std::pair<Integer, Integer>> gens) {
  // Collect gcd of second coordinates into one pivot row, eliminating the rest.
  std::pair<Integer, Integer> pivot{0, 0};
  std::vector<Integer> firsts;
  for (auto& g : gens) {
    if (g.second == 0) {
      firsts.push_back(g.first);
      continue;
    }
    if (pivot.second == 0) {
      pivot = g;
      continue;
    }
    const auto eg = extended_gcd(pivot.second, g.second);
    std::pair<Integer, Integer> np{eg.x * pivot.first + eg.y * g.first, eg.g};
    // the eliminated combination has zero second coordinate
    const Integer rest = (g.second / eg.g) * pivot.first - (pivot.second / eg.g) * g.first;
    firsts.push_back(rest);
    pivot = np;
  }
  Integer x = 0;
  for (auto& f : firsts) x = gcd(x, f);
  if (x == 0 || pivot.second == 0) throw error(errc::rank_deficient, "generators span a lattice of rank < 2");
  if (pivot.second < 0) pivot = {-pivot.first, -pivot.second};
  return {x, mod(pivot.first, x), pivot.second};
}

}  // namespace schmidt
