#pragma once

// Oriented K-Bianchi circles as integer triples (c, c', zeta):
//   curvature b = c * sqrt(D), co-curvature b' = c' * sqrt(D) (D = -delta),
//   curvature-centre i * zeta, with norm(zeta) = 1 - delta * c * c'.
// A line has c = 0 and zeta a unit.

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "schmidt/error.hpp"
#include "schmidt/intmat.hpp"
#include "schmidt/moebius.hpp"
#include "schmidt/quadint.hpp"
#include "schmidt/surd.hpp"

namespace schmidt {

struct OrientedCircle {
  Integer curv;    // reduced curvature
  Integer cocurv;  // reduced co-curvature
  QuadInt zeta;

  Discriminant disc() const { return zeta.disc(); }
  bool is_line() const { return curv == 0; }

  bool satisfies_invariant() const {
    return zeta.norm() == 1 - Integer(disc().value()) * curv * cocurv;
  }

  /// Same circle with the opposite orientation.
  OrientedCircle reversed() const { return {-curv, -cocurv, -zeta}; }

  /// The orientation-independent representative: the one of {C, reversed C}
  /// whose (curv, cocurv, zeta.a, zeta.b) is lexicographically positive.
  OrientedCircle unoriented() const {
    if (curv != 0) return curv > 0 ? *this : reversed();
    if (cocurv != 0) return cocurv > 0 ? *this : reversed();
    return zeta.lex_positive() ? *this : reversed();
  }

  friend bool operator==(const OrientedCircle& x, const OrientedCircle& y) {
    return x.curv == y.curv && x.cocurv == y.cocurv && x.zeta == y.zeta;
  }
  friend bool operator!=(const OrientedCircle& x, const OrientedCircle& y) { return !(x == y); }

  /// Total order used for deterministic output.
  friend bool operator<(const OrientedCircle& x, const OrientedCircle& y) {
    return std::tie(x.curv, x.cocurv, x.zeta.a(), x.zeta.b()) < std::tie(y.curv, y.cocurv, y.zeta.a(), y.zeta.b());
  }
};

inline std::string to_string(const OrientedCircle& c) {
  return "(" + c.curv.str() + ", " + c.cocurv.str() + ", " + to_string(c.zeta) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const OrientedCircle& c) { return os << to_string(c); }

/// Builds a circle from raw data, rejecting triples that break the invariant.
inline OrientedCircle make_circle(Integer curv, Integer cocurv, QuadInt zeta) {
  OrientedCircle c{std::move(curv), std::move(cocurv), std::move(zeta)};
  if (!c.satisfies_invariant()) throw error(errc::parse_error, "triple " + to_string(c) + " is not a circle");
  return c;
}

inline OrientedCircle real_line(Discriminant d) { return {0, 0, {d, 1}}; }

// ---------------------------------------------------------------------------
// Matrices and the action.

/// [[c sqrt(delta), zeta], [-conj(zeta), c' sqrt(delta)]], of determinant 1.
inline Matrix2 reduced_gram(const OrientedCircle& c) {
  const QuadInt s = sqrt_delta(c.disc());
  return {c.curv * s, c.zeta, -c.zeta.conj(), c.cocurv * s};
}

namespace detail {
/// m with x = m * sqrt(delta), for x with x = -conj(x).
inline Integer sqrt_delta_multiple(const QuadInt& x) { return x.b() / 2; }
}  // namespace detail

inline OrientedCircle circle_from_gram(const Matrix2& g) {
  return {detail::sqrt_delta_multiple(g.alpha), detail::sqrt_delta_multiple(g.delta), g.gamma};
}

/// The image of the oriented real line under M. Any unit determinant is
/// accepted.
inline OrientedCircle circle_from_matrix(const Matrix2& m) {
  require_unit_det(m);
  return {-(m.beta * m.delta.conj()).b(), -(m.alpha * m.gamma.conj()).b(),
          m.alpha * m.delta.conj() - m.gamma * m.beta.conj()};
}

inline Matrix2 conjugate_transpose(const Matrix2& m) {
  return {m.alpha.conj(), m.beta.conj(), m.gamma.conj(), m.delta.conj()};
}

/// M(C), computed through the Gram congruence G -> (M^-1)^* G M^-1.
inline OrientedCircle transform(const Matrix2& m, const OrientedCircle& c) {
  require_same(m.disc(), c.disc());
  const Matrix2 mi = inverse(m);
  return circle_from_gram(conjugate_transpose(mi) * reduced_gram(c) * mi);
}

inline OrientedCircle translate(const OrientedCircle& c, const QuadInt& w) {
  return transform(Matrix2::elementary(w), c);
}

/// Rotation z -> u z about the origin, keeping the orientation.
inline OrientedCircle rotate(const OrientedCircle& c, const QuadInt& u) {
  if (!u.is_unit()) throw error(errc::not_a_unit, to_string(u) + " is not a unit");
  return {c.curv, c.cocurv, u * c.zeta};
}

/// Units u for which z -> u z maps the arrangement to itself: u = +-e^2 for
/// a unit e. This drops +-tau (= +-i) when delta = -4.
inline std::vector<QuadInt> symmetry_units(Discriminant d) {
  std::vector<QuadInt> out;
  for (const auto& e : units(d)) {
    for (const QuadInt& u : {e * e, -(e * e)}) {
      if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end(), [](const QuadInt& x, const QuadInt& y) { return lex_less(y, x); });
  return out;
}

// ---------------------------------------------------------------------------
// Pedoe product and intersection classes.

/// Twice the Pedoe product: delta (c1 c2' + c1' c2) + trace(zeta1 conj(zeta2)).
inline Integer pedoe_twice(const OrientedCircle& x, const OrientedCircle& y) {
  require_same(x.disc(), y.disc());
  return Integer(x.disc().value()) * (x.curv * y.cocurv + x.cocurv * y.curv) + (x.zeta * y.zeta.conj()).trace();
}

/// Cosine of the angle between x and y (1 for equal circles).
inline HalfInt pedoe_product(const OrientedCircle& x, const OrientedCircle& y) { return {pedoe_twice(x, y)}; }

struct IntersectionClass {
  enum class Kind {
    Coincident,
    DisjointNested,
    DisjointOutside,
    ExternallyTangent,
    InternallyTangent,
    Orthogonal,
    UnitAngle,
    Crossing,
  };
  Kind kind;
  HalfInt cosine;

  bool is_tangent() const { return kind == Kind::ExternallyTangent || kind == Kind::InternallyTangent; }
  bool is_disjoint() const { return kind == Kind::DisjointNested || kind == Kind::DisjointOutside; }
};

inline std::string_view to_string(IntersectionClass::Kind k) {
  using K = IntersectionClass::Kind;
  switch (k) {
    case K::Coincident: return "Coincident";
    case K::DisjointNested: return "DisjointNested";
    case K::DisjointOutside: return "DisjointOutside";
    case K::ExternallyTangent: return "ExternallyTangent";
    case K::InternallyTangent: return "InternallyTangent";
    case K::Orthogonal: return "Orthogonal";
    case K::UnitAngle: return "UnitAngle";
    case K::Crossing: return "Crossing";
  }
  return "Unknown";
}

/// Tangency signs follow the orientations: product -1 is external, +1
/// internal. Disjoint circles with s1 s2 p > 1 (s the orientation signs) are
/// nested, since d^2 = r1^2 + r2^2 - 2 r1 r2 s1 s2 p.
inline IntersectionClass classify_intersection(const OrientedCircle& x, const OrientedCircle& y) {
  using K = IntersectionClass::Kind;
  const Integer p = pedoe_twice(x, y);
  const HalfInt cosine{p};
  if (x == y || x == y.reversed()) return {K::Coincident, cosine};
  if (abs(p) > 2) {
    if (x.is_line() || y.is_line()) return {K::DisjointOutside, cosine};
    const Integer s = p * sign(x.curv) * sign(y.curv);
    return {s > 2 ? K::DisjointNested : K::DisjointOutside, cosine};
  }
  if (p == -2) return {K::ExternallyTangent, cosine};
  if (p == 2) return {K::InternallyTangent, cosine};
  if (p == 0) return {K::Orthogonal, cosine};
  if (abs(p) == 1) return {K::UnitAngle, cosine};
  return {K::Crossing, cosine};
}

// ---------------------------------------------------------------------------
// Points.

/// X/Y lies on C iff c N(X) + c' N(Y) + m = 0, where zeta Y conj(X) has tau
/// coordinate m.
inline bool point_on_circle(const OrientedCircle& c, const ProjPoint& p) {
  require_same(c.disc(), p.disc());
  const Integer m = (c.zeta * p.den * p.num.conj()).b();
  return c.curv * p.num.norm() + c.cocurv * p.den.norm() + m == 0;
}

/// The common point of two tangent circles, reduced.
inline ProjPoint tangency_point(const OrientedCircle& x, const OrientedCircle& y) {
  const Integer p = pedoe_twice(x, y);
  if (abs(p) != 2 || x == y || x == y.reversed())
    throw error(errc::not_tangent, to_string(x) + " and " + to_string(y) + " are not tangent");
  const OrientedCircle z = p == 2 ? y.reversed() : y;
  const Discriminant d = x.disc();
  const Integer sum = x.curv + z.curv;
  if (sum == 0) return ProjPoint::infinity(d);
  const ProjPoint raw{-((x.zeta + z.zeta) * sqrt_delta(d)), QuadInt(d, sum * d.value())};
  return reduce(raw);
}

/// Exact centre (real part, imaginary part) of a proper circle.
struct ExactCentre {
  Surd x, y;
};

inline ExactCentre centre(const OrientedCircle& c) {
  if (c.is_line()) throw error(errc::division_by_zero, "a line has no centre");
  const Discriminant d = c.disc();
  const QuadInt w = -(c.zeta * sqrt_delta(d));
  const Integer den = 2 * c.curv * d.value();
  return {Surd::rational(ratio(2 * w.a() + w.b() * d.trace_tau(), den), d.abs_value()),
          Surd(0, ratio(w.b(), den), d.abs_value())};
}

/// Centre as a K-element with rational coordinates in the basis (1, tau).
inline std::pair<Rational, Rational> centre_coordinates(const OrientedCircle& c) {
  if (c.is_line()) throw error(errc::division_by_zero, "a line has no centre");
  const QuadInt w = -(c.zeta * sqrt_delta(c.disc()));
  const Integer den = c.curv * c.disc().value();
  return {ratio(w.a(), den), ratio(w.b(), den)};
}

inline Rational radius_squared(const OrientedCircle& c) {
  if (c.is_line()) throw error(errc::division_by_zero, "a line has no radius");
  return Rational(1, c.curv * c.curv * c.disc().abs_value());
}

struct FloatCircle {
  double x, y, r;
};

inline FloatCircle float_shadow(const OrientedCircle& c) {
  const auto ce = centre(c);
  return {ce.x.to_double(), ce.y.to_double(), std::sqrt(to_double(radius_squared(c)))};
}

// ---------------------------------------------------------------------------
// Bezout completion and tangent families.

/// gamma, delta with alpha delta - beta gamma = 1.
struct Bezout {
  QuadInt gamma, delta;
};

/// Solves alpha delta - beta gamma = 1 as a 2x4 integer system, then moves
/// along the solution line (delta + e beta, gamma + e alpha) to the solution
/// of smallest (norm delta, norm gamma).
inline Bezout solve_bezout(const QuadInt& alpha, const QuadInt& beta) {
  require_same(alpha.disc(), beta.disc());
  const Discriminant d = alpha.disc();
  if (alpha.is_zero() && beta.is_zero()) throw error(errc::not_coprime, "solve_bezout(0, 0)");
  const QuadInt cols[4] = {alpha, alpha.times_tau(), -beta, -beta.times_tau()};
  IntMatrix a(2, IntVector(4));
  for (int j = 0; j < 4; ++j) {
    a[0][j] = cols[j].a();
    a[1][j] = cols[j].b();
  }
  const auto sol = solve_integer(a, {1, 0});
  if (!sol)
    throw error(errc::not_coprime, to_string(alpha) + " and " + to_string(beta) + " are not coprime");
  QuadInt delta(d, (*sol)[0], (*sol)[1]);
  QuadInt gamma(d, (*sol)[2], (*sol)[3]);

  const QuadInt e0 = beta.is_zero() ? -round_quotient(gamma, alpha) : -round_quotient(delta, beta);
  auto key = [&](const QuadInt& e) {
    const QuadInt dd = delta + e * beta, gg = gamma + e * alpha;
    return std::make_tuple(dd.norm(), gg.norm(), dd.a(), dd.b(), gg.a(), gg.b());
  };
  QuadInt best = e0;
  auto best_key = key(e0);
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) {
      const QuadInt e = e0 + QuadInt(d, i, j);
      auto k = key(e);
      if (k < best_key) {
        best_key = std::move(k);
        best = e;
      }
    }
  }
  return {gamma + best * alpha, delta + best * beta};
}

/// The matrix [[alpha, u gamma + k tau alpha], [beta, u delta + k tau beta]]
/// whose circles are the family through x = alpha/beta.
inline Matrix2 tangent_family_matrix(const ProjPoint& x, const QuadInt& u, const Integer& k) {
  if (!x.is_reduced()) throw error(errc::not_reduced, to_string(x) + " is not reduced");
  if (!u.is_unit()) throw error(errc::not_a_unit, to_string(u) + " is not a unit");
  const Bezout b = solve_bezout(x.num, x.den);
  const QuadInt kt = k * QuadInt::tau(x.disc());
  return {x.num, u * b.gamma + kt * x.num, x.den, u * b.delta + kt * x.den};
}

inline OrientedCircle tangent_family(const ProjPoint& x, const QuadInt& u, const Integer& k) {
  return circle_from_matrix(tangent_family_matrix(x, u, k));
}

/// M [[1, tau], [0, -1]]: the circle immediately tangent to circle(M) at M(infinity).
inline Matrix2 immediate_tangent_at(const Matrix2& m) {
  require_unit_det(m);
  const Discriminant d = m.disc();
  return m * Matrix2{{d, 1}, QuadInt::tau(d), {d, 0}, {d, -1}};
}

/// Reduced curvatures at most `bound` of the circles immediately tangent to
/// circle(M): N(p beta + q delta) - c over coprime (p, q) up to sign, as a
/// sorted multiset. For a line the tangent circles at infinitely many points
/// share each value s^2, so the distinct values are returned.
inline std::vector<Integer> tangent_curvatures(const Matrix2& m, const Integer& bound) {
  const OrientedCircle c = circle_from_matrix(m);
  std::vector<Integer> out;
  if (c.is_line()) {
    for (Integer s = 1; s * s <= bound; ++s) out.push_back(s * s);
    return out;
  }
  const Integer x = bound + c.curv;
  if (x < 1) return out;
  const Integer e = c.curv * c.curv * c.disc().abs_value();
  const Integer qmax = isqrt(4 * m.beta.norm() * x / e) + 1;
  const Integer pmax = isqrt(4 * m.delta.norm() * x / e) + 1;
  for (Integer q = 0; q <= qmax; ++q) {
    for (Integer p = q == 0 ? Integer(1) : -pmax; p <= (q == 0 ? Integer(1) : pmax); ++p) {
      if (gcd(p, q) != 1) continue;
      const Integer v = (p * m.beta + q * m.delta).norm() - c.curv;
      if (v <= bound) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace schmidt
