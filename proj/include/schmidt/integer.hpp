#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "schmidt/error.hpp"

namespace schmidt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline int sign(const Integer& x) { return x.sign(); }

/// n / d for any nonzero d; cpp_rational rejects negative denominators.
inline Rational ratio(const Integer& n, const Integer& d) {
  return d < 0 ? Rational(Integer(-n), Integer(-d)) : Rational(n, d);
}

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

/// Floor division (rounds toward negative infinity).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

/// Non-negative remainder modulo m > 0.
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Nearest integer to num/den (den != 0); exact halves round toward zero.
inline Integer round_half_toward_zero(const Integer& num, const Integer& den) {
  Integer n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  // ties toward zero: ceil((2n - d) / 2d) for n >= 0, floor((2n + d) / 2d) for n < 0
  if (n >= 0) return ceil_div(2 * n - d, 2 * d);
  return floor_div(2 * n + d, 2 * d);
}

struct ExtendedGcd {
  Integer g, x, y;  // g = a*x + b*y, g >= 0
};

inline ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

inline Integer isqrt(const Integer& n) {
  if (n < 0) throw error(errc::parse_error, "isqrt of negative number");
  return boost::multiprecision::sqrt(n);
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool is_squarefree(std::int64_t n) {
  if (n < 0) n = -n;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return n != 0;
}

/// Distinct prime divisors of n > 0 in increasing order.
inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw error(errc::parse_error, "integer does not fit in 64 bits: " + x.str());
  return static_cast<std::int64_t>(x);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace schmidt
