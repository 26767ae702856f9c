#pragma once

// 2x2 matrices over O_K acting by z -> (alpha z + gamma) / (beta z + delta),
// projective K-points, and decomposition of SL2 elements into elementary
// generators E(a) = [[1, a], [0, 1]] and S = [[0, -1], [1, 0]].

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schmidt/error.hpp"
#include "schmidt/intmat.hpp"
#include "schmidt/quadint.hpp"

namespace schmidt {

/// Stored as [[alpha, gamma], [beta, delta]].
struct Matrix2 {
  QuadInt alpha, gamma, beta, delta;

  Matrix2(QuadInt a, QuadInt g, QuadInt b, QuadInt d)
      : alpha(std::move(a)), gamma(std::move(g)), beta(std::move(b)), delta(std::move(d)) {
    require_same(alpha.disc(), gamma.disc());
    require_same(alpha.disc(), beta.disc());
    require_same(alpha.disc(), delta.disc());
  }

  static Matrix2 identity(Discriminant d) { return {{d, 1}, {d, 0}, {d, 0}, {d, 1}}; }
  static Matrix2 elementary(const QuadInt& a) {
    const Discriminant d = a.disc();
    return {{d, 1}, a, {d, 0}, {d, 1}};
  }
  static Matrix2 swap(Discriminant d) { return {{d, 0}, {d, -1}, {d, 1}, {d, 0}}; }

  Discriminant disc() const { return alpha.disc(); }
  QuadInt det() const { return alpha * delta - beta * gamma; }

  Matrix2 operator-() const { return {-alpha, -gamma, -beta, -delta}; }

  friend Matrix2 operator*(const Matrix2& m, const Matrix2& n) {
    return {m.alpha * n.alpha + m.gamma * n.beta, m.alpha * n.gamma + m.gamma * n.delta,
            m.beta * n.alpha + m.delta * n.beta, m.beta * n.gamma + m.delta * n.delta};
  }
  friend Matrix2 operator*(const QuadInt& s, const Matrix2& m) {
    return {s * m.alpha, s * m.gamma, s * m.beta, s * m.delta};
  }

  friend bool operator==(const Matrix2& m, const Matrix2& n) {
    return m.alpha == n.alpha && m.gamma == n.gamma && m.beta == n.beta && m.delta == n.delta;
  }
  friend bool operator!=(const Matrix2& m, const Matrix2& n) { return !(m == n); }
};

/// Throws errc::non_unit_determinant unless det(m) is a unit.
inline QuadInt require_unit_det(const Matrix2& m) {
  QuadInt d = m.det();
  if (!d.is_unit()) throw error(errc::non_unit_determinant, "determinant " + to_string(d) + " is not a unit");
  return d;
}

inline void require_det_one(const Matrix2& m) {
  const QuadInt d = m.det();
  if (d != QuadInt(m.disc(), 1))
    throw error(errc::non_unit_determinant, "determinant " + to_string(d) + " is not 1");
}

inline Matrix2 inverse(const Matrix2& m) {
  const QuadInt dinv = unit_inverse(require_unit_det(m));
  return dinv * Matrix2{m.delta, -m.gamma, -m.beta, m.alpha};
}

/// Of {M, -M}, the one whose first nonzero entry in the order
/// alpha, gamma, beta, delta is lexicographically positive.
inline Matrix2 psl2_canonical(const Matrix2& m) {
  for (const QuadInt* e : {&m.alpha, &m.gamma, &m.beta, &m.delta}) {
    if (e->is_zero()) continue;
    return e->lex_positive() ? m : -m;
  }
  return m;
}

inline bool equal_up_to_sign(const Matrix2& m, const Matrix2& n) { return m == n || m == -n; }

inline std::string to_string(const Matrix2& m) {
  return "[[" + to_string(m.alpha) + ", " + to_string(m.gamma) + "],[" + to_string(m.beta) + ", " +
         to_string(m.delta) + "]]";
}

inline std::ostream& operator<<(std::ostream& os, const Matrix2& m) { return os << to_string(m); }

/// Parses "[[a, b],[c, d]]" with entries in the text form of parse_quadint.
inline Matrix2 parse_matrix(Discriminant d, std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw error(errc::parse_error, msg + " in \"" + std::string(text) + "\"");
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  auto entry = [&](char stop) {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != stop && text[pos] != '[' && text[pos] != ']' && text[pos] != ',') ++pos;
    if (pos >= text.size() || text[pos] != stop) fail("malformed entry");
    return parse_quadint(d, text.substr(start, pos - start));
  };
  expect('[');
  expect('[');
  QuadInt a = entry(',');
  expect(',');
  QuadInt g = entry(']');
  expect(']');
  expect(',');
  expect('[');
  QuadInt b = entry(',');
  expect(',');
  QuadInt e = entry(']');
  expect(']');
  expect(']');
  skip();
  if (pos != text.size()) fail("trailing characters");
  return {a, g, b, e};
}

// ---------------------------------------------------------------------------
// Projective points num/den of K u {infinity}.

struct ProjPoint {
  QuadInt num, den;

  ProjPoint(QuadInt n, QuadInt d) : num(std::move(n)), den(std::move(d)) {
    require_same(num.disc(), den.disc());
    if (num.is_zero() && den.is_zero()) throw error(errc::both_zero, "projective point (0:0)");
  }

  static ProjPoint infinity(Discriminant d) { return {{d, 1}, {d, 0}}; }
  static ProjPoint finite(const QuadInt& x) { return {x, {x.disc(), 1}}; }

  Discriminant disc() const { return num.disc(); }
  bool is_infinity() const { return den.is_zero(); }
  bool is_reduced() const { return is_coprime(num, den); }

  /// Same point of K u {infinity}.
  friend bool same_point(const ProjPoint& p, const ProjPoint& q) { return p.num * q.den == q.num * p.den; }
  /// Identical representatives.
  friend bool operator==(const ProjPoint& p, const ProjPoint& q) { return p.num == q.num && p.den == q.den; }
};

inline std::string to_string(const ProjPoint& p) { return "(" + to_string(p.num) + " : " + to_string(p.den) + ")"; }

namespace detail {

/// x / y when y divides x in O_K.
inline std::optional<QuadInt> exact_quotient(const QuadInt& x, const QuadInt& y) {
  const QuadInt z = x * y.conj();
  const Integer n = y.norm();
  if (z.a() % n != 0 || z.b() % n != 0) return std::nullopt;
  return QuadInt(x.disc(), z.a() / n, z.b() / n);
}

/// A shortest nonzero vector of the lattice with Hermite basis h, in
/// coordinates (a, b) of O_K, found by Lagrange-Gauss reduction.
inline QuadInt shortest_vector(Discriminant d, const Hermite2& h) {
  QuadInt u(d, h.x, 0), v(d, h.y, h.z);
  if (v.norm() < u.norm()) std::swap(u, v);
  while (true) {
    // v <- v - round(<u,v>/<u,u>) u, with <x,y> = trace(x conj y)/2
    const Integer num = (v * u.conj()).trace();
    const Integer den = 2 * u.norm();
    const Integer k = round_half_toward_zero(num, den);
    v = v - k * u;
    if (v.norm() >= u.norm()) return u;
    std::swap(u, v);
  }
}

/// Of the unit multiples of x, the lexicographically greatest; returns the unit.
inline QuadInt canonical_unit(const QuadInt& x) {
  const auto us = units(x.disc());
  QuadInt best_u = us.front();
  QuadInt best = x;
  for (const auto& u : us) {
    const QuadInt c = u * x;
    if (lex_less(best, c)) {
      best = c;
      best_u = u;
    }
  }
  return best_u;
}

}  // namespace detail

/// The coprime representative of p, normalised so that den (or num, when
/// den = 0) is the lexicographically greatest of its unit multiples.
/// Throws errc::not_principal when (num, den) is not a principal ideal, in
/// which case no coprime representative exists.
inline ProjPoint reduce(const ProjPoint& p) {
  const Discriminant d = p.disc();
  if (p.den.is_zero()) return ProjPoint::infinity(d);
  if (p.num.is_zero()) return {{d, 0}, {d, 1}};
  const QuadInt gens[4] = {p.num, p.num.times_tau(), p.den, p.den.times_tau()};
  std::vector<std::pair<Integer, Integer>> coords;
  for (const auto& g : gens) coords.emplace_back(g.a(), g.b());
  const Hermite2 h = hermite2(coords);
  const QuadInt g = detail::shortest_vector(d, h);
  if (g.norm() != h.covolume())
    throw error(errc::not_principal, "ideal generated by " + to_string(p) + " is not principal");
  QuadInt n = *detail::exact_quotient(p.num, g);
  QuadInt m = *detail::exact_quotient(p.den, g);
  const QuadInt u = detail::canonical_unit(m);
  return {u * n, u * m};
}

inline ProjPoint apply_point(const Matrix2& m, const ProjPoint& p) {
  require_same(m.disc(), p.disc());
  return {m.alpha * p.num + m.gamma * p.den, m.beta * p.num + m.delta * p.den};
}

// ---------------------------------------------------------------------------
// Elementary words.

struct Generator {
  enum class Kind { E, S } kind;
  std::optional<QuadInt> shift;  // set for E

  static Generator e(QuadInt a) { return {Kind::E, std::move(a)}; }
  static Generator s() { return {Kind::S, std::nullopt}; }

  Matrix2 matrix(Discriminant d) const { return kind == Kind::S ? Matrix2::swap(d) : Matrix2::elementary(*shift); }

  friend bool operator==(const Generator& a, const Generator& b) { return a.kind == b.kind && a.shift == b.shift; }
};

using ElementaryWord = std::vector<Generator>;

inline Matrix2 evaluate(Discriminant d, const ElementaryWord& w) {
  Matrix2 m = Matrix2::identity(d);
  for (const auto& g : w) m = m * g.matrix(d);
  return m;
}

inline std::string to_string(const ElementaryWord& w) {
  std::string s;
  for (const auto& g : w) {
    if (!s.empty()) s += " ";
    s += g.kind == Generator::Kind::S ? std::string("S") : "E(" + to_string(*g.shift) + ")";
  }
  return s.empty() ? std::string("I") : s;
}

struct Decomposition {
  ElementaryWord word;
  /// norm(beta) before each division step, strictly decreasing.
  std::vector<Integer> beta_norms;
};

/// Writes M (det 1) as +-E(q1) S E(q2) S ... E(qk) S E(g) [diag(u, 1/u)],
/// reducing the bottom row by Euclidean division. diag(u, 1/u) is expanded
/// as E(u) S E(1/u) S E(u) S, which equals -diag(u, 1/u).
inline Decomposition elementary_decomposition(const Matrix2& m) {
  const Discriminant d = m.disc();
  if (!d.is_euclidean())
    throw error(errc::not_euclidean_field, "no elementary decomposition for delta = " + std::to_string(d.value()));
  require_det_one(m);
  Decomposition out;
  auto push_e = [&](const QuadInt& a) {
    if (!a.is_zero()) out.word.push_back(Generator::e(a));
  };
  Matrix2 a = m;
  while (!a.beta.is_zero()) {
    out.beta_norms.push_back(a.beta.norm());
    const QuadInt q = euclidean_div(a.alpha, a.beta).q;
    // a = E(q) (-S) (S E(-q) a)
    a = Matrix2{a.beta, a.delta, q * a.beta - a.alpha, q * a.delta - a.gamma};
    a = -a;
    push_e(q);
    out.word.push_back(Generator::s());
  }
  const QuadInt u = a.alpha;  // a = [[u, g], [0, 1/u]]
  push_e(a.gamma * u);
  if (u != QuadInt(d, 1) && u != QuadInt(d, -1)) {
    const QuadInt ui = unit_inverse(u);
    push_e(u);
    out.word.push_back(Generator::s());
    push_e(ui);
    out.word.push_back(Generator::s());
    push_e(u);
    out.word.push_back(Generator::s());
  }
  return out;
}

}  // namespace schmidt
