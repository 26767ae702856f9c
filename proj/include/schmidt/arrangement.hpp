#pragma once

// The arrangement up to a curvature bound inside a window: enumeration from
// residue classes, breadth-first orbit search, tangency graph and paths,
// and the ghost circle with its separation certificates.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "schmidt/circle.hpp"
#include "schmidt/error.hpp"
#include "schmidt/lattice.hpp"
#include "schmidt/moebius.hpp"
#include "schmidt/quadint.hpp"
#include "schmidt/surd.hpp"

namespace schmidt {

// ---------------------------------------------------------------------------
// Windows.

/// Closed rectangle [x0, x1] x [y0, y1] with exact corners.
struct Window {
  Surd x0, x1, y0, y1;

  static Window make(Surd x0, Surd x1, Surd y0, Surd y1) {
    if (!(x0 < x1) || !(y0 < y1)) throw error(errc::parse_error, "window must satisfy x0 < x1 and y0 < y1");
    return {std::move(x0), std::move(x1), std::move(y0), std::move(y1)};
  }

  /// Bounding box of {a + b tau : 0 <= a, b <= 1}.
  static Window fundamental(Discriminant d) {
    const std::int64_t r = d.abs_value();
    const Rational half_t(d.trace_tau(), 2);
    return make(Surd::rational(0, r), Surd::rational(1 + half_t, r), Surd::rational(0, r), Surd(0, Rational(1, 2), r));
  }

  /// [-2, 3] x [-sqrt(D), 3 sqrt(D) / 2], a few parallelograms around the ghost circle.
  static Window ghost_neighbourhood(Discriminant d) {
    const std::int64_t r = d.abs_value();
    return make(Surd::rational(-2, r), Surd::rational(3, r), Surd(0, -1, r), Surd(0, Rational(3, 2), r));
  }

  double width() const { return (x1 - x0).to_double(); }
  double height() const { return (y1 - y0).to_double(); }
};

namespace detail {

/// Decimal digits with an optional sign. cpp_int's string constructor reads
/// a leading 0 as octal, so leading zeros are stripped first.
inline Integer parse_decimal_integer(std::string_view text, bool allow_sign) {
  bool neg = false;
  if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) {
    neg = text[0] == '-';
    text.remove_prefix(1);
  }
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw error(errc::parse_error, "bad number \"" + std::string(text) + "\"");
  const auto nz = text.find_first_not_of('0');
  const Integer v = nz == std::string_view::npos ? Integer(0) : Integer(std::string(text.substr(nz)));
  return neg ? Integer(-v) : v;
}

}  // namespace detail

/// Parses a decimal or fractional rational such as "-2", "0.25" or "3/4".
inline Rational parse_rational(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer n = detail::parse_decimal_integer(text.substr(0, slash), true);
    const Integer d = detail::parse_decimal_integer(text.substr(slash + 1), true);
    if (d == 0) throw error(errc::parse_error, "zero denominator in \"" + std::string(text) + "\"");
    return ratio(n, d);
  }
  bool neg = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    neg = text[0] == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  std::string digits(text.substr(0, dot));
  std::size_t places = 0;
  if (dot != std::string_view::npos) {
    const std::string_view frac = text.substr(dot + 1);
    digits += frac;
    places = frac.size();
  }
  const Integer n = detail::parse_decimal_integer(digits, false);
  const Rational r(n, boost::multiprecision::pow(Integer(10), static_cast<unsigned>(places)));
  return neg ? Rational(-r) : r;
}

/// "q" or "q*sqrtD" (also "sqrtD", "-sqrtD") with q as in parse_rational,
/// where D = -delta.
inline Surd parse_surd(Discriminant d, std::string_view text) {
  const std::int64_t r = d.abs_value();
  constexpr std::string_view root = "sqrtD";
  if (text.size() >= root.size() && text.substr(text.size() - root.size()) == root) {
    std::string_view coeff = text.substr(0, text.size() - root.size());
    if (coeff.empty() || coeff == "+") return Surd(0, 1, r);
    if (coeff == "-") return Surd(0, -1, r);
    if (coeff.back() != '*') throw error(errc::parse_error, "bad number \"" + std::string(text) + "\"");
    return Surd(0, parse_rational(coeff.substr(0, coeff.size() - 1)), r);
  }
  return Surd::rational(parse_rational(text), r);
}

/// "x0,x1,y0,y1" (each as in parse_surd), "fund" or "ghost".
inline Window parse_window(Discriminant d, std::string_view text) {
  if (text == "fund") return Window::fundamental(d);
  if (text == "ghost") return Window::ghost_neighbourhood(d);
  std::vector<Surd> v;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    v.push_back(parse_surd(d, text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (v.size() != 4) throw error(errc::parse_error, "window needs four numbers x0,x1,y0,y1");
  return Window::make(v[0], v[1], v[2], v[3]);
}

namespace detail {

/// Signed value of Im(zeta conj(z)) + c' sqrt(D)/2 at z = x + i y; zero on the line.
inline Surd line_value(const OrientedCircle& c, const Surd& x, const Surd& y) {
  const Discriminant d = c.disc();
  const std::int64_t r = d.abs_value();
  const Surd zr = Surd::rational(Rational(c.zeta.trace(), 2), r);
  const Surd zi(0, Rational(c.zeta.b(), 2), r);
  return zi * x - zr * y + Surd(0, Rational(c.cocurv, 2), r);
}

inline double line_value(const OrientedCircle& c, double x, double y) {
  const double sd = std::sqrt(static_cast<double>(c.disc().abs_value()));
  const double zr = c.zeta.trace().convert_to<double>() / 2, zi = c.zeta.b().convert_to<double>() * sd / 2;
  return zi * x - zr * y + c.cocurv.convert_to<double>() * sd / 2;
}

}  // namespace detail

/// Whether the circle (as a curve) meets the closed window.
inline bool meets_window(const OrientedCircle& c, const Window& w) {
  if (c.is_line()) {
    int pos = 0, neg = 0;
    for (const Surd* x : {&w.x0, &w.x1})
      for (const Surd* y : {&w.y0, &w.y1}) {
        const int s = detail::line_value(c, *x, *y).sign();
        if (s == 0) return true;
        (s > 0 ? pos : neg)++;
      }
    return pos > 0 && neg > 0;
  }
  const FloatCircle fc = float_shadow(c);
  const double fx0 = w.x0.to_double(), fx1 = w.x1.to_double(), fy0 = w.y0.to_double(), fy1 = w.y1.to_double();
  const double dx = std::max({fx0 - fc.x, 0.0, fc.x - fx1}), dy = std::max({fy0 - fc.y, 0.0, fc.y - fy1});
  const double near = std::hypot(dx, dy);
  const double far = std::hypot(std::max(std::abs(fc.x - fx0), std::abs(fc.x - fx1)),
                                std::max(std::abs(fc.y - fy0), std::abs(fc.y - fy1)));
  const double eps = 1e-9 * (1 + fc.r);
  if (near > fc.r + eps || far < fc.r - eps) return false;
  if (near < fc.r - eps && far > fc.r + eps) return true;

  const ExactCentre ce = centre(c);
  const Surd zero = Surd::rational(0, c.disc().abs_value());
  const Surd ex = max(max(w.x0 - ce.x, zero), ce.x - w.x1);
  const Surd ey = max(max(w.y0 - ce.y, zero), ce.y - w.y1);
  const Surd r2 = Surd::rational(radius_squared(c), c.disc().abs_value());
  if (ex * ex + ey * ey > r2) return false;
  const Surd fx = max(ce.x - w.x0, w.x1 - ce.x);
  const Surd fy = max(ce.y - w.y0, w.y1 - ce.y);
  return fx * fx + fy * fy >= r2;
}

// ---------------------------------------------------------------------------
// Enumeration.

/// A circle of the arrangement with the data that rebuilds a matrix for it:
/// E(shift) * R(unit) * base, base the S-map matrix of (f, residue) or the
/// identity for lines (f = 0).
struct PlacedCircle {
  OrientedCircle circle;
  Integer f;
  QuadInt residue;
  QuadInt unit;
  QuadInt shift;
};

/// Keyed by the unoriented circle unless oriented mode was requested.
using CircleSet = std::map<OrientedCircle, PlacedCircle>;

/// A det-1 matrix realising z -> u z on the arrangement: diag(e, 1/e) when
/// u = e^2; when only -u is a square, conjugation by diag(-1, 1) supplies
/// the extra sign, reversing orientation.
inline Matrix2 rotation_applied(const QuadInt& u, const Matrix2& m) {
  const Discriminant d = u.disc();
  for (const auto& e : units(d)) {
    if (e * e == u) return Matrix2{e, {d, 0}, {d, 0}, unit_inverse(e)} * m;
  }
  for (const auto& e : units(d)) {
    if (-(e * e) == u) {
      const Matrix2 flip{{d, -1}, {d, 0}, {d, 0}, {d, 1}};
      return flip * Matrix2{e, {d, 0}, {d, 0}, unit_inverse(e)} * m * flip;
    }
  }
  throw error(errc::not_a_unit, to_string(u) + " is not a symmetry unit");
}

inline Matrix2 matrix_of(const PlacedCircle& p) {
  const Discriminant d = p.circle.disc();
  const Matrix2 base = p.f == 0 ? Matrix2::identity(d) : s_map_matrix(p.f, p.residue);
  return Matrix2::elementary(p.shift) * rotation_applied(p.unit, base);
}

/// Circle translated by w: zeta' = zeta - c sqrt(delta) w, c' from the invariant.
inline OrientedCircle translate_proper(const OrientedCircle& c, const QuadInt& w) {
  const Discriminant d = c.disc();
  QuadInt z = c.zeta - c.curv * sqrt_delta(d) * w;
  const Integer num = 1 - z.norm();
  const Integer den = Integer(d.value()) * c.curv;
  return {c.curv, num / den, std::move(z)};
}

struct EnumerateOptions {
  Integer max_curv = 1;
  bool include_lines = false;
  bool oriented = false;
};

namespace detail {

inline void insert(CircleSet& out, PlacedCircle p, bool oriented) {
  OrientedCircle key = oriented ? p.circle : p.circle.unoriented();
  out.emplace(std::move(key), std::move(p));
}

inline double sqrt_abs(Discriminant d) { return std::sqrt(static_cast<double>(d.abs_value())); }

}  // namespace detail

/// All circles of the arrangement with 1 <= |c| <= max_curv (and lines, on
/// request) meeting the window. Each residue-class circle of S_map is
/// rotated by the symmetry units and translated by every w in O_K that can
/// bring it into the window.
inline CircleSet enumerate_arrangement(Discriminant d, const Window& w, const EnumerateOptions& opt) {
  CircleSet out;
  const double sd = detail::sqrt_abs(d);
  const double half_t = d.trace_tau() / 2.0, tau_im = sd / 2;
  const double fx0 = w.x0.to_double(), fx1 = w.x1.to_double(), fy0 = w.y0.to_double(), fy1 = w.y1.to_double();
  const auto sym = symmetry_units(d);

  for (Integer f = 1; f <= opt.max_curv; ++f) {
    for (const auto& res : enumerate_residues(d, f)) {
      const Matrix2 base = s_map_matrix(f, res);
      for (const auto& u : sym) {
        const OrientedCircle c0 = circle_from_matrix(rotation_applied(u, base));
        const FloatCircle fc = float_shadow(c0);
        const auto b_lo = static_cast<long long>(std::floor((fy0 - fc.r - fc.y) / tau_im)) - 1;
        const auto b_hi = static_cast<long long>(std::ceil((fy1 + fc.r - fc.y) / tau_im)) + 1;
        for (long long b = b_lo; b <= b_hi; ++b) {
          const double cx = fc.x + b * half_t;
          const auto a_lo = static_cast<long long>(std::floor(fx0 - fc.r - cx)) - 1;
          const auto a_hi = static_cast<long long>(std::ceil(fx1 + fc.r - cx)) + 1;
          for (long long a = a_lo; a <= a_hi; ++a) {
            const QuadInt shift(d, a, b);
            OrientedCircle c = translate_proper(c0, shift);
            if (!meets_window(c, w)) continue;
            detail::insert(out, {std::move(c), f, res, u, shift}, opt.oriented);
          }
        }
      }
    }
  }

  if (opt.include_lines) {
    const QuadInt tau_conj = QuadInt::tau(d).conj();
    for (const auto& u : sym) {
      const Matrix2 rot = rotation_applied(u, Matrix2::identity(d));
      const OrientedCircle l0 = circle_from_matrix(rot);
      // c' ranges over the values of -2 Im(zeta conj z)/sqrt(D) at the corners
      double lo = 1e300, hi = -1e300;
      for (double x : {fx0, fx1})
        for (double y : {fy0, fy1}) {
          const double v = -2 * (detail::line_value(l0, x, y)) / sd;
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
      for (auto k = static_cast<long long>(std::floor(lo)) - 1; k <= static_cast<long long>(std::ceil(hi)) + 1; ++k) {
        const QuadInt shift = -(Integer(k) * l0.zeta * tau_conj);
        OrientedCircle c = circle_from_matrix(Matrix2::elementary(shift) * rot);
        if (!meets_window(c, w)) continue;
        detail::insert(out, {std::move(c), 0, {d, 1}, u, shift}, opt.oriented);
      }
    }
  }
  return out;
}

/// Translation classes of circles with |c| = f, each represented by the
/// translate whose centre lies in the half-open parallelogram
/// {a + b tau : 0 <= a, b < 1}. Unoriented.
inline std::set<OrientedCircle> parallelogram_circles(Discriminant d, const Integer& f) {
  std::set<OrientedCircle> out;
  for (const auto& res : enumerate_residues(d, f)) {
    const Matrix2 base = s_map_matrix(f, res);
    for (const auto& u : symmetry_units(d)) {
      const OrientedCircle c = circle_from_matrix(rotation_applied(u, base));
      const auto [a, b] = centre_coordinates(c);
      const QuadInt shift(d, -floor_div(numerator(a), denominator(a)), -floor_div(numerator(b), denominator(b)));
      out.insert(translate_proper(c, shift).unoriented());
    }
  }
  return out;
}

/// Reduced bound equivalent to |curvature| <= bound_abs: the largest f with
/// f^2 D <= bound_abs^2.
inline Integer reduced_from_absolute(Discriminant d, const Rational& bound_abs) {
  if (bound_abs < 0) return -1;
  Integer f = 0;
  while (Rational((f + 1) * (f + 1) * d.abs_value()) <= bound_abs * bound_abs) ++f;
  return f;
}

// ---------------------------------------------------------------------------
// Breadth-first orbit search.

/// Circles reachable from the real line by words of length <= depth in
/// E(+-1), E(+-tau), S, keeping only circles with |c| <= max_curv.
/// Unoriented. S inverts the whole plane, so restricting to a window must
/// happen after the search, not during it.
inline std::set<OrientedCircle> bfs_enumerate(Discriminant d, const Integer& max_curv, int depth) {
  const QuadInt one(d, 1), tau = QuadInt::tau(d);
  const std::vector<Matrix2> gens{Matrix2::elementary(one), Matrix2::elementary(-one), Matrix2::elementary(tau),
                                  Matrix2::elementary(-tau), Matrix2::swap(d)};
  std::set<OrientedCircle> seen{real_line(d)};
  std::vector<OrientedCircle> frontier{real_line(d)};
  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<OrientedCircle> next;
    for (const auto& c : frontier) {
      for (const auto& g : gens) {
        OrientedCircle n = transform(g, c);
        if (abs(n.curv) > max_curv) continue;
        if (seen.insert(n.unoriented()).second) next.push_back(std::move(n));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

// ---------------------------------------------------------------------------
// Tangency graph.

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace detail

/// Calls fn(i, j) (i < j) for every pair whose floating-point shadows touch
/// or cross, plus every pair involving a line. Circles are bucketed by
/// reduced curvature on grids of cell size equal to that level's diameter.
template <class Fn>
void for_each_meeting_pair(const std::vector<OrientedCircle>& circles, Fn&& fn) {
  struct Shadow {
    FloatCircle fc;
    std::size_t index;
  };
  std::map<Integer, std::vector<Shadow>> levels;
  std::vector<std::size_t> lines;
  for (std::size_t i = 0; i < circles.size(); ++i) {
    if (circles[i].is_line())
      lines.push_back(i);
    else
      levels[abs(circles[i].curv)].push_back({float_shadow(circles[i]), i});
  }
  using Cell = std::pair<long long, long long>;
  struct CellHash {
    std::size_t operator()(const Cell& c) const { return std::hash<long long>()(c.first * 1000003LL + c.second); }
  };
  struct Grid {
    double size;
    std::unordered_map<Cell, std::vector<std::size_t>, CellHash> cells;  // positions in the level vector
  };
  std::map<Integer, Grid> grids;
  for (auto& [f, v] : levels) {
    Grid g{2 * v.front().fc.r, {}};
    for (std::size_t k = 0; k < v.size(); ++k)
      g.cells[{static_cast<long long>(std::floor(v[k].fc.x / g.size)),
               static_cast<long long>(std::floor(v[k].fc.y / g.size))}]
          .push_back(k);
    grids.emplace(f, std::move(g));
  }
  const double eps = 1e-9;
  // each pair is visited from its larger circle (smaller level), ties by index
  for (auto& [f1, v1] : levels) {
    for (auto& [f2, v2] : levels) {
      if (f2 < f1) continue;
      const Grid& g = grids.at(f2);
      for (const auto& s1 : v1) {
        const double reach = s1.fc.r + v2.front().fc.r + eps;
        const auto cx0 = static_cast<long long>(std::floor((s1.fc.x - reach) / g.size));
        const auto cx1 = static_cast<long long>(std::floor((s1.fc.x + reach) / g.size));
        const auto cy0 = static_cast<long long>(std::floor((s1.fc.y - reach) / g.size));
        const auto cy1 = static_cast<long long>(std::floor((s1.fc.y + reach) / g.size));
        for (long long cx = cx0; cx <= cx1; ++cx) {
          for (long long cy = cy0; cy <= cy1; ++cy) {
            auto it = g.cells.find({cx, cy});
            if (it == g.cells.end()) continue;
            for (std::size_t k : it->second) {
              const Shadow& s2 = v2[k];
              if (f1 == f2 && s2.index <= s1.index) continue;
              const double dist = std::hypot(s1.fc.x - s2.fc.x, s1.fc.y - s2.fc.y);
              if (dist > s1.fc.r + s2.fc.r + eps || dist < std::abs(s1.fc.r - s2.fc.r) - eps) continue;
              fn(std::min(s1.index, s2.index), std::max(s1.index, s2.index));
            }
          }
        }
      }
    }
  }
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t i = 0; i < circles.size(); ++i) {
      if (i == lines[a]) continue;
      if (circles[i].is_line() && i < lines[a]) continue;  // line pairs once
      if (!circles[i].is_line()) {
        const FloatCircle fc = float_shadow(circles[i]);
        if (std::abs(detail::line_value(circles[lines[a]], fc.x, fc.y)) > fc.r + eps) continue;
      }
      fn(std::min(i, lines[a]), std::max(i, lines[a]));
    }
  }
}

struct TangencyGraph {
  std::vector<OrientedCircle> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
};

/// Edges join distinct circles with Pedoe product +-1.
inline TangencyGraph tangency_graph(const std::vector<OrientedCircle>& circles) {
  TangencyGraph g{circles, {}};
  for_each_meeting_pair(circles, [&](std::size_t i, std::size_t j) {
    const auto cls = classify_intersection(circles[i], circles[j]);
    if (cls.is_tangent()) g.edges.emplace_back(i, j);
  });
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

inline TangencyGraph tangency_graph(const CircleSet& set) {
  std::vector<OrientedCircle> v;
  v.reserve(set.size());
  for (const auto& [key, p] : set) v.push_back(p.circle);
  return tangency_graph(v);
}

/// Component label (smallest member index) of every vertex.
inline std::vector<std::size_t> components(const TangencyGraph& g) {
  detail::UnionFind uf(g.vertices.size());
  for (const auto& [i, j] : g.edges) uf.unite(i, j);
  std::vector<std::size_t> label(g.vertices.size());
  for (std::size_t i = 0; i < label.size(); ++i) label[i] = uf.find(i);
  return label;
}

inline std::size_t component_count(const TangencyGraph& g) {
  const auto label = components(g);
  return std::set<std::size_t>(label.begin(), label.end()).size();
}

// ---------------------------------------------------------------------------
// Tangency paths.

/// Circles circle(M1 g1 ... gj) along an elementary decomposition of
/// M1^-1 M2. Each step is E(a), which moves the real line to a parallel
/// line tangent at infinity, or S, which fixes it; repeated circles are
/// dropped. Throws errc::certificate_failure if a step fails to verify.
inline std::vector<OrientedCircle> tangency_path(const Matrix2& m1, const Matrix2& m2) {
  const Discriminant d = m1.disc();
  if (!d.is_euclidean())
    throw error(errc::not_euclidean_field, "tangency paths need a Euclidean field, delta = " + std::to_string(d.value()));
  require_det_one(m1);
  require_det_one(m2);
  const auto dec = elementary_decomposition(inverse(m1) * m2);
  std::vector<OrientedCircle> path{circle_from_matrix(m1)};
  Matrix2 acc = m1;
  for (const auto& g : dec.word) {
    acc = acc * g.matrix(d);
    OrientedCircle c = circle_from_matrix(acc);
    const OrientedCircle& prev = path.back();
    if (c.unoriented() == prev.unoriented()) continue;
    if (abs(pedoe_twice(prev, c)) != 2)
      throw error(errc::certificate_failure, "path step " + to_string(prev) + " -> " + to_string(c) + " is not a tangency");
    path.push_back(std::move(c));
  }
  if (path.back().unoriented() != circle_from_matrix(m2).unoriented())
    throw error(errc::certificate_failure, "path does not end at circle(M2)");
  return path;
}

// ---------------------------------------------------------------------------
// Ghost circle.

/// The circle orthogonal to the unit circle with centre 1/2 + sqrt(D)/4 i
/// (delta = 0 mod 4) or 1/2 + (D - 1)/(4 sqrt(D)) i (delta = 1 mod 4), of
/// curvature B with B^2 = 16/(D - 12) or 16 D/(D^2 - 14 D + 1).
struct GhostCircle {
  Discriminant disc;
  Rational b_squared;
  Rational centre_x;
  Surd centre_y;

  Rational radius_squared() const { return 1 / b_squared; }
  double curvature() const { return std::sqrt(to_double(b_squared)); }
  double radius() const { return 1 / curvature(); }
  FloatCircle shadow() const { return {to_double(centre_x), centre_y.to_double(), radius()}; }
};

inline std::optional<GhostCircle> ghost_circle(Discriminant d) {
  const std::int64_t big_d = d.abs_value();
  if (d.is_euclidean()) return std::nullopt;
  if (!d.one_mod_four())
    return GhostCircle{d, Rational(16, big_d - 12), Rational(1, 2), Surd(0, Rational(1, 4), big_d)};
  return GhostCircle{d, Rational(16 * big_d, big_d * big_d - 14 * big_d + 1), Rational(1, 2),
                     Surd(0, Rational(big_d - 1, 4 * big_d), big_d)};
}

inline GhostCircle require_ghost(Discriminant d) {
  auto g = ghost_circle(d);
  if (!g) throw error(errc::no_ghost_circle, "no ghost circle for delta = " + std::to_string(d.value()));
  return *g;
}

/// Integer data showing |<G, C>| > 1.
///   delta = 0 mod 4: <G, C> = (B sqrt(D)/4) m with m = p - q - 2(c + c') odd.
///   delta = 1 mod 4: <G, C> = B n / (8 sqrt(D)) with
///                    n = (D - 1)(2p + q) - 2 D q - 4 D (c + c') = 2 D k + e,
///                    k odd and e = +-2.
/// Here zeta = p + q tau.
struct GhostCertificate {
  Integer invariant;  // m or n
  Integer k;          // odd multiplier (delta = 1 mod 4), else m
  int correction = 0; // e (delta = 1 mod 4), else 0
  double product = 0; // floating value of <G, C>
};

inline GhostCertificate ghost_separation(const OrientedCircle& c, const GhostCircle& g) {
  require_same(c.disc(), g.disc);
  const std::int64_t big_d = g.disc.abs_value();
  const Integer& p = c.zeta.a();
  const Integer& q = c.zeta.b();
  const Integer s = c.curv + c.cocurv;
  GhostCertificate cert;
  if (!g.disc.one_mod_four()) {
    const Integer m = p - q - 2 * s;
    cert.invariant = m;
    cert.k = m;
    cert.product = g.curvature() * std::sqrt(static_cast<double>(big_d)) / 4 * m.convert_to<double>();
    // |<G,C>| > 1  <=>  m^2 D > D - 12
    if (mod(m, Integer(2)) != 1 || !(m * m * big_d > big_d - 12))
      throw error(errc::certificate_failure, "ghost certificate fails for " + to_string(c) + ": m = " + m.str());
    return cert;
  }
  const Integer n = (big_d - 1) * (2 * p + q) - 2 * big_d * q - 4 * big_d * s;
  cert.invariant = n;
  cert.product = g.curvature() * n.convert_to<double>() / (8 * std::sqrt(static_cast<double>(big_d)));
  Integer e = mod(n, Integer(2 * big_d));
  if (e > big_d) e -= 2 * big_d;
  const Integer k = (n - e) / (2 * big_d);
  cert.k = k;
  cert.correction = static_cast<int>(to_int64(e));
  // |<G,C>| > 1  <=>  n^2 > 4 (D^2 - 14 D + 1)
  if ((e != 2 && e != -2) || mod(k, Integer(2)) != 1 || !(n * n > 4 * (big_d * big_d - 14 * big_d + 1)))
    throw error(errc::certificate_failure, "ghost certificate fails for " + to_string(c) + ": n = " + n.str());
  return cert;
}

enum class GhostSide { Inside, Outside, Neither };

/// Exact position of a proper circle relative to the ghost circle.
inline GhostSide ghost_side(const OrientedCircle& c, const GhostCircle& g) {
  if (c.is_line()) return GhostSide::Outside;
  const ExactCentre ce = centre(c);
  const Surd dx = ce.x - Surd::rational(g.centre_x, g.disc.abs_value());
  const Surd dy = ce.y - g.centre_y;
  const Surd d2s = dx * dx + dy * dy;
  const Rational d2 = d2s.rational_part();  // dx is rational and dy a multiple of sqrt(D)
  const Rational big_r2 = g.radius_squared(), r2 = radius_squared(c);
  const Rational rr4 = 4 * big_r2 * r2;
  const Rational in = big_r2 + r2 - d2;  // d < R - r  <=>  in > 0 and in^2 > 4 R^2 r^2, with r < R
  if (r2 < big_r2 && in > 0 && in * in > rr4) return GhostSide::Inside;
  const Rational out = d2 - big_r2 - r2;  // d > R + r
  if (out > 0 && out * out > rr4) return GhostSide::Outside;
  return GhostSide::Neither;
}

struct DisconnectednessWitness {
  OrientedCircle inside, outside;
  GhostCircle ghost;
  GhostCertificate inside_cert, outside_cert;
};

/// One circle strictly inside and one strictly outside the ghost circle,
/// both certified disjoint from it, searched up to reduced curvature
/// max_curv near the ghost circle.
inline DisconnectednessWitness disconnectedness_witness(Discriminant d, const Integer& max_curv = 10) {
  const GhostCircle g = require_ghost(d);
  const FloatCircle s = g.shadow();
  auto approx = [](double v) { return Rational(static_cast<long long>(std::floor(v * 1024)), 1024); };
  const std::int64_t r = d.abs_value();
  const Window w = Window::make(Surd::rational(approx(s.x - 2 * s.r), r), Surd::rational(approx(s.x + 2 * s.r) + 1, r),
                                Surd::rational(approx(s.y - 2 * s.r), r), Surd::rational(approx(s.y + 2 * s.r) + 1, r));
  const CircleSet set = enumerate_arrangement(d, w, {max_curv, false, false});
  std::optional<OrientedCircle> in, out;
  for (const auto& [key, p] : set) {
    const GhostSide side = ghost_side(p.circle, g);
    if (side == GhostSide::Inside && !in) in = p.circle;
    if (side == GhostSide::Outside && !out) out = p.circle;
    if (in && out) break;
  }
  if (!in || !out)
    throw error(errc::search_exhausted, "no witness pair up to curvature " + max_curv.str());
  return {*in, *out, g, ghost_separation(*in, g), ghost_separation(*out, g)};
}

}  // namespace schmidt
