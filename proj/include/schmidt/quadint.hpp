#pragma once

// Exact arithmetic in the ring of integers O_K = Z[tau] of an imaginary
// quadratic field K of fundamental discriminant delta < 0, where
//   tau = sqrt(delta)/2        if delta = 0 (mod 4)
//   tau = (1 + sqrt(delta))/2  if delta = 1 (mod 4).
// Writing t = tau + conj(tau) and n = tau * conj(tau), tau satisfies
// tau^2 = t*tau - n, which is all the multiplication law needs.

#include <cctype>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "schmidt/error.hpp"
#include "schmidt/integer.hpp"

namespace schmidt {

class Discriminant {
 public:
  /// Throws errc::non_fundamental unless d is a negative fundamental discriminant.
  static Discriminant make(std::int64_t d) {
    if (!is_fundamental(d))
      throw error(errc::non_fundamental, std::to_string(d) + " is not a negative fundamental discriminant");
    return Discriminant(d);
  }

  static bool is_fundamental(std::int64_t d) {
    if (d >= 0) return false;
    const std::int64_t r = ((d % 4) + 4) % 4;
    if (r == 1) return is_squarefree(d);
    if (r != 0) return false;
    const std::int64_t m = d / 4;
    const std::int64_t mr = ((m % 4) + 4) % 4;
    return (mr == 2 || mr == 3) && is_squarefree(m);
  }

  std::int64_t value() const { return delta_; }
  /// |delta|, written D elsewhere.
  std::int64_t abs_value() const { return -delta_; }
  bool one_mod_four() const { return ((delta_ % 4) + 4) % 4 == 1; }
  int trace_tau() const { return one_mod_four() ? 1 : 0; }
  std::int64_t norm_tau() const { return one_mod_four() ? (1 - delta_) / 4 : -delta_ / 4; }

  /// The five norm-Euclidean imaginary quadratic fields.
  bool is_euclidean() const {
    return delta_ == -3 || delta_ == -4 || delta_ == -7 || delta_ == -8 || delta_ == -11;
  }

  friend bool operator==(Discriminant a, Discriminant b) { return a.delta_ == b.delta_; }
  friend bool operator!=(Discriminant a, Discriminant b) { return a.delta_ != b.delta_; }

 private:
  explicit Discriminant(std::int64_t d) : delta_(d) {}
  std::int64_t delta_;
};

inline Discriminant validate_discriminant(std::int64_t d) { return Discriminant::make(d); }

inline void require_same(Discriminant a, Discriminant b) {
  if (a != b)
    throw error(errc::mixed_discriminant,
                "operands live in discriminants " + std::to_string(a.value()) + " and " + std::to_string(b.value()));
}

/// Exact half-integer, stored as twice its value.
struct HalfInt {
  Integer twice;

  static HalfInt from_integer(const Integer& n) { return {2 * n}; }
  bool is_integer() const { return boost::multiprecision::bit_test(abs(twice), 0) == false; }
  double to_double() const { return twice.convert_to<double>() / 2.0; }
  std::string str() const {
    if (is_integer()) return Integer(twice / 2).str();
    return twice.str() + "/2";
  }

  friend HalfInt operator+(const HalfInt& a, const HalfInt& b) { return {a.twice + b.twice}; }
  friend HalfInt operator-(const HalfInt& a, const HalfInt& b) { return {a.twice - b.twice}; }
  friend HalfInt operator-(const HalfInt& a) { return {-a.twice}; }
  friend bool operator==(const HalfInt& a, const HalfInt& b) { return a.twice == b.twice; }
  friend bool operator!=(const HalfInt& a, const HalfInt& b) { return a.twice != b.twice; }
  friend bool operator<(const HalfInt& a, const HalfInt& b) { return a.twice < b.twice; }
  friend std::ostream& operator<<(std::ostream& os, const HalfInt& h) { return os << h.str(); }
};

/// An element a + b*tau of O_K. Every value carries its discriminant and
/// binary operations reject mixed fields.
class QuadInt {
 public:
  QuadInt(Discriminant d, Integer a = 0, Integer b = 0) : disc_(d), a_(std::move(a)), b_(std::move(b)) {}

  static QuadInt tau(Discriminant d) { return {d, 0, 1}; }

  Discriminant disc() const { return disc_; }
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadInt conj() const { return {disc_, a_ + disc_.trace_tau() * b_, -b_}; }

  Integer norm() const { return a_ * a_ + disc_.trace_tau() * a_ * b_ + disc_.norm_tau() * b_ * b_; }

  Integer trace() const { return 2 * a_ + disc_.trace_tau() * b_; }

  /// Twice the real part, as a half-integer.
  HalfInt real_part() const { return {trace()}; }

  /// x - conj(x) = m * sqrt(delta); returns m (which is just the tau coordinate).
  const Integer& sqrt_delta_coeff() const { return b_; }

  bool is_unit() const { return norm() == 1; }

  QuadInt times_tau() const {
    // tau * (a + b tau) = -n b + (a + t b) tau
    return {disc_, -disc_.norm_tau() * b_, a_ + disc_.trace_tau() * b_};
  }

  QuadInt operator-() const { return {disc_, -a_, -b_}; }

  friend QuadInt operator+(const QuadInt& x, const QuadInt& y) {
    require_same(x.disc_, y.disc_);
    return {x.disc_, x.a_ + y.a_, x.b_ + y.b_};
  }
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y) {
    require_same(x.disc_, y.disc_);
    return {x.disc_, x.a_ - y.a_, x.b_ - y.b_};
  }
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    require_same(x.disc_, y.disc_);
    const Integer bd = x.b_ * y.b_;
    return {x.disc_, x.a_ * y.a_ - x.disc_.norm_tau() * bd,
            x.a_ * y.b_ + x.b_ * y.a_ + x.disc_.trace_tau() * bd};
  }
  friend QuadInt operator*(const Integer& k, const QuadInt& x) { return {x.disc_, k * x.a_, k * x.b_}; }
  friend QuadInt operator*(const QuadInt& x, const Integer& k) { return k * x; }

  QuadInt& operator+=(const QuadInt& y) { return *this = *this + y; }
  QuadInt& operator-=(const QuadInt& y) { return *this = *this - y; }
  QuadInt& operator*=(const QuadInt& y) { return *this = *this * y; }

  friend bool operator==(const QuadInt& x, const QuadInt& y) {
    return x.disc_ == y.disc_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadInt& x, const QuadInt& y) { return !(x == y); }

  /// Lexicographic order on (a, b); used only for canonical choices.
  friend bool lex_less(const QuadInt& x, const QuadInt& y) {
    return x.a_ != y.a_ ? x.a_ < y.a_ : x.b_ < y.b_;
  }
  /// (a, b) lexicographically positive.
  bool lex_positive() const { return a_ > 0 || (a_ == 0 && b_ > 0); }

 private:
  Discriminant disc_;
  Integer a_, b_;
};

inline QuadInt conj(const QuadInt& x) { return x.conj(); }
inline Integer norm(const QuadInt& x) { return x.norm(); }

/// sqrt(delta) as an element of O_K: 2 tau - trace(tau).
inline QuadInt sqrt_delta(Discriminant d) { return {d, -d.trace_tau(), 2}; }

/// Units of O_K: {+-1}, plus +-tau for delta = -4, plus +-tau, +-(tau - 1) for delta = -3.
inline std::vector<QuadInt> units(Discriminant d) {
  std::vector<QuadInt> out{{d, 1, 0}, {d, -1, 0}};
  if (d.value() == -4 || d.value() == -3) {
    out.push_back({d, 0, 1});
    out.push_back({d, 0, -1});
  }
  if (d.value() == -3) {
    out.push_back({d, -1, 1});
    out.push_back({d, 1, -1});
  }
  return out;
}

/// Inverse of a unit; throws errc::not_a_unit otherwise.
inline QuadInt unit_inverse(const QuadInt& u) {
  if (!u.is_unit()) throw error(errc::not_a_unit, "element of norm " + u.norm().str() + " is not a unit");
  return u.conj();
}

namespace detail {
inline Integer minor(const Integer& a, const Integer& b, const Integer& c, const Integer& d) { return a * d - b * c; }
}  // namespace detail

/// (x) + (y) = (1), decided by the elementary divisors of the 4x2 coordinate
/// matrix of {x, tau x, y, tau y}: both are 1 iff the 2x2 minors have gcd 1.
inline bool is_coprime(const QuadInt& x, const QuadInt& y) {
  require_same(x.disc(), y.disc());
  if (x.is_zero() && y.is_zero()) throw error(errc::both_zero, "is_coprime(0, 0)");
  const QuadInt rows[4] = {x, x.times_tau(), y, y.times_tau()};
  Integer g = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      g = gcd(g, detail::minor(rows[i].a(), rows[i].b(), rows[j].a(), rows[j].b()));
  return g == 1;
}

struct DivResult {
  QuadInt q, r;
};

/// A nearest element to x/y (y != 0), valid in every field. For
/// delta = 1 (mod 4) the tau coordinate is rounded first and the rational
/// coordinate is then rounded against the shifted real part. Exact halves
/// round toward zero.
inline QuadInt round_quotient(const QuadInt& x, const QuadInt& y) {
  require_same(x.disc(), y.disc());
  if (y.is_zero()) throw error(errc::division_by_zero, "quotient by zero");
  const Discriminant d = x.disc();
  const QuadInt z = x * y.conj();
  const Integer n = y.norm();
  Integer qb = round_half_toward_zero(z.b(), n);
  Integer qa = d.one_mod_four() ? round_half_toward_zero(2 * z.a() + z.b() - qb * n, 2 * n)
                                : round_half_toward_zero(z.a(), n);
  return {d, std::move(qa), std::move(qb)};
}

/// Division with remainder in the five norm-Euclidean fields: x = q y + r with
/// norm(r) < norm(y). The rounding in round_quotient keeps
/// norm(r/y) <= (4 + |delta|)/16 < 1 in those fields.
inline DivResult euclidean_div(const QuadInt& x, const QuadInt& y) {
  require_same(x.disc(), y.disc());
  const Discriminant d = x.disc();
  if (!d.is_euclidean())
    throw error(errc::not_euclidean_field, "O_K is not norm-Euclidean for delta = " + std::to_string(d.value()));
  if (y.is_zero()) throw error(errc::division_by_zero, "euclidean_div by zero");
  QuadInt q = round_quotient(x, y);
  QuadInt r = x - q * y;
  return {std::move(q), std::move(r)};
}

/// Kronecker symbol (delta / p) for a prime p.
inline int kronecker(Discriminant d, std::int64_t p) {
  if (!is_prime(p)) throw error(errc::not_prime, std::to_string(p) + " is not prime");
  const std::int64_t delta = d.value();
  if (p == 2) {
    if (delta % 2 == 0) return 0;
    const std::int64_t r = ((delta % 8) + 8) % 8;
    return (r == 1 || r == 7) ? 1 : -1;
  }
  const Integer a = mod(Integer(delta), Integer(p));
  if (a == 0) return 0;
  const Integer e = boost::multiprecision::powm(a, Integer((p - 1) / 2), Integer(p));
  return e == 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Text form "a+b*t" (delta implied by context).

inline std::string to_string(const QuadInt& x) {
  std::string s = x.a().str();
  if (x.b() < 0)
    s += "-" + Integer(-x.b()).str() + "*t";
  else
    s += "+" + x.b().str() + "*t";
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const QuadInt& x) { return os << to_string(x); }

namespace detail {

// Parses one signed term: integer, "t", "k*t" or "k t"-less forms.
struct TermParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw error(errc::parse_error, msg + " in \"" + std::string(s) + "\"");
  }

  // Returns (coefficient, is_tau_term).
  std::pair<Integer, bool> term(bool first) {
    skip_ws();
    int sgn = 1;
    bool had_sign = false;
    // "a+-b*t" is accepted: consecutive signs multiply.
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sgn = -sgn;
      had_sign = true;
      ++pos;
      skip_ws();
    }
    if (!first && !had_sign) fail("expected '+' or '-'");
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
    skip_ws();
    bool tau = false;
    if (pos < s.size() && s[pos] == '*') {
      if (digits.empty()) fail("missing coefficient before '*'");
      ++pos;
      skip_ws();
      if (pos >= s.size() || s[pos] != 't') fail("expected 't' after '*'");
      ++pos;
      tau = true;
    } else if (pos < s.size() && s[pos] == 't') {
      if (!digits.empty()) fail("missing '*' between coefficient and 't'");
      ++pos;
      tau = true;
      digits = "1";
    }
    if (digits.empty()) fail("expected a number or 't'");
    // cpp_int reads a leading 0 as octal
    const auto nz = digits.find_first_not_of('0');
    const Integer v = nz == std::string::npos ? Integer(0) : Integer(digits.substr(nz));
    return {sgn < 0 ? Integer(-v) : v, tau};
  }
};

}  // namespace detail

/// Parses "a+b*t" and the shorthand forms "a", "b*t", "t", "-t", "a-t".
inline QuadInt parse_quadint(Discriminant d, std::string_view text) {
  detail::TermParser p{text};
  Integer a = 0, b = 0;
  bool seen_a = false, seen_b = false;
  bool first = true;
  if (p.at_end()) p.fail("empty element");
  while (!p.at_end()) {
    auto [v, tau] = p.term(first);
    first = false;
    if (tau) {
      if (seen_b) p.fail("duplicate tau term");
      b = v;
      seen_b = true;
    } else {
      if (seen_a || seen_b) p.fail("rational term must come first");
      a = v;
      seen_a = true;
    }
  }
  return {d, a, b};
}

}  // namespace schmidt
