#pragma once

// Rank-2 sublattices of O_K in Hermite form, their conductors, primeval
// lattices, the residue classes (O_K/f)^* / (Z/f)^*, the maps between
// circles and lattices, and class numbers of O_K and of its orders.

#include <algorithm>
#include <numeric>
#include <tuple>
#include <optional>
#include <set>
#include <vector>

#include "schmidt/circle.hpp"
#include "schmidt/error.hpp"
#include "schmidt/intmat.hpp"
#include "schmidt/moebius.hpp"
#include "schmidt/quadint.hpp"

namespace schmidt {

/// Basis x, y + z tau with x, z > 0 and 0 <= y < x.
struct Lattice2 {
  Discriminant disc;
  Hermite2 h;

  QuadInt first() const { return {disc, h.x, 0}; }
  QuadInt second() const { return {disc, h.y, h.z}; }
  Integer covolume() const { return h.covolume(); }

  bool contains(const QuadInt& v) const {
    if (v.b() % h.z != 0) return false;
    return (v.a() - (v.b() / h.z) * h.y) % h.x == 0;
  }

  friend bool operator==(const Lattice2& p, const Lattice2& q) { return p.disc == q.disc && p.h == q.h; }
  friend bool operator!=(const Lattice2& p, const Lattice2& q) { return !(p == q); }
  friend bool operator<(const Lattice2& p, const Lattice2& q) {
    return std::tie(p.h.x, p.h.y, p.h.z) < std::tie(q.h.x, q.h.y, q.h.z);
  }
};

inline std::string to_string(const Lattice2& l) {
  return "<" + to_string(l.first()) + ", " + to_string(l.second()) + ">";
}

inline Lattice2 hnf(Discriminant d, const std::vector<QuadInt>& gens) {
  std::vector<std::pair<Integer, Integer>> coords;
  for (const auto& g : gens) {
    require_same(d, g.disc());
    coords.emplace_back(g.a(), g.b());
  }
  return {d, hermite2(std::move(coords))};
}

/// The conductor f of {a in O_K : a L in L} = Z + f O_K: the least f with
/// f tau v in L for both basis vectors v.
inline Integer order_conductor(const Lattice2& l) {
  Integer f = 1;
  for (const QuadInt& v : {l.first(), l.second()}) {
    const QuadInt w = v.times_tau();  // coordinates (c, d)
    const Integer f1 = l.h.z / gcd(w.b(), l.h.z);
    const Integer e = f1 * w.a() - (f1 * w.b() / l.h.z) * l.h.y;
    f = lcm(f, f1 * (l.h.x / gcd(e, l.h.x)));
  }
  return f;
}

inline bool is_primeval(const Lattice2& l) { return order_conductor(l) == l.covolume(); }

struct PrimevalLattice {
  Lattice2 lattice;
  Integer conductor;
};

/// Checks primevality and records the conductor.
inline PrimevalLattice make_primeval(const Lattice2& l) {
  const Integer f = order_conductor(l);
  if (f != l.covolume())
    throw error(errc::not_primeval, to_string(l) + " has conductor " + f.str() + " but covolume " + l.covolume().str());
  return {l, f};
}

/// A basis of coprime elements. (beta) + (delta) is the ideal generated by
/// the lattice, which does not depend on the basis, so the Hermite basis is
/// coprime exactly when any basis is.
inline std::pair<QuadInt, QuadInt> coprime_basis(const Lattice2& l) {
  if (!is_primeval(l)) throw error(errc::not_primeval, to_string(l) + " is not primeval");
  if (!is_coprime(l.first(), l.second()))
    throw error(errc::search_exhausted, "Hermite basis of primeval " + to_string(l) + " is not coprime");
  return {l.first(), l.second()};
}

/// Representatives s + t tau (0 <= s, t < f) of (O_K/f)^* / (Z/f)^*, each
/// the lexicographically least (s, t) of its class. For f = 1 the single
/// class is represented by 1.
inline std::vector<QuadInt> enumerate_residues(Discriminant d, const Integer& f) {
  if (f < 1) throw error(errc::parse_error, "conductor must be positive");
  if (f == 1) return {QuadInt(d, 1)};
  std::vector<Integer> scalars;
  for (Integer n = 1; n < f; ++n)
    if (gcd(n, f) == 1) scalars.push_back(n);
  std::vector<QuadInt> out;
  for (Integer s = 0; s < f; ++s) {
    for (Integer t = 0; t < f; ++t) {
      const QuadInt b(d, s, t);
      if (gcd(b.norm(), f) != 1) continue;
      bool least = true;
      for (const auto& n : scalars) {
        const Integer s2 = mod(n * s, f), t2 = mod(n * t, f);
        if (std::tie(s2, t2) < std::tie(s, t)) {
          least = false;
          break;
        }
      }
      if (least) out.push_back(b);
    }
  }
  return out;
}

/// f O_K + beta Z.
inline Lattice2 residue_lattice(const Integer& f, const QuadInt& beta) {
  const Discriminant d = beta.disc();
  return hnf(d, {QuadInt(d, f), f * QuadInt::tau(d), beta});
}

/// A det-1 matrix whose bottom row is the Hermite basis of f O_K + beta Z.
/// Its circle has reduced curvature f.
inline Matrix2 s_map_matrix(const Integer& f, const QuadInt& beta) {
  if (f < 1) throw error(errc::parse_error, "conductor must be positive");
  if (gcd(beta.norm(), f) != 1)
    throw error(errc::not_invertible_residue, to_string(beta) + " is not invertible modulo " + f.str());
  const auto [b, dl] = coprime_basis(residue_lattice(f, beta));
  const Bezout bz = solve_bezout(dl, b);  // dl * alpha - b * gamma = 1
  return {bz.delta, bz.gamma, b, dl};
}

inline OrientedCircle s_map(const Integer& f, const QuadInt& beta) { return circle_from_matrix(s_map_matrix(f, beta)); }

/// The lattice spanned by the bottom row of M, or nullopt when it has rank 1
/// (M maps the real line to a line).
inline std::optional<PrimevalLattice> i_map(const Matrix2& m) {
  require_unit_det(m);
  const OrientedCircle c = circle_from_matrix(m);
  if (c.is_line()) return std::nullopt;
  return make_primeval(hnf(m.disc(), {m.beta, m.delta}));
}

/// Whether l2 = u l1 for a unit u.
inline bool unit_homothetic(const Lattice2& l1, const Lattice2& l2) {
  for (const auto& u : units(l1.disc))
    if (hnf(l1.disc, {u * l1.first(), u * l1.second()}) == l2) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Class numbers.

/// Number of reduced primitive forms (a, b, c) with b^2 - 4ac = delta.
inline std::int64_t class_number_hK(Discriminant d) {
  const std::int64_t delta = d.value();
  std::int64_t h = 0;
  for (std::int64_t a = 1; 3 * a * a <= -delta; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b - delta;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

/// [O_K^* : O_f^*] for f > 1.
inline int unit_index(Discriminant d) {
  if (d.value() == -4) return 2;
  if (d.value() == -3) return 3;
  return 1;
}

/// f * prod_{p | f} (1 - (delta/p)/p): the order of (O_K/f)^* / (Z/f)^*.
inline Integer residue_group_order(Discriminant d, std::int64_t f) {
  Rational r = f;
  for (auto p : prime_divisors(f)) r *= Rational(p - kronecker(d, p), p);
  if (denominator(r) != 1) throw error(errc::non_integer_result, "residue group order is not an integer");
  return numerator(r);
}

inline Integer class_number_hf(Discriminant d, std::int64_t f) {
  if (f < 1) throw error(errc::parse_error, "conductor must be positive");
  const std::int64_t hk = class_number_hK(d);
  if (f == 1) return hk;
  const Rational h = Rational(hk * residue_group_order(d, f), unit_index(d));
  if (denominator(h) != 1) throw error(errc::non_integer_result, "h_f formula gave " + h.str());
  return numerator(h);
}

}  // namespace schmidt
