#pragma once

// Exact numbers a + b*sqrt(D) with rational a, b and a fixed integer
// D > 0. Imaginary parts of K-points are rational multiples of sqrt(D), so
// every window and centre comparison stays inside this set.

#include <cmath>
#include <string>

#include "schmidt/integer.hpp"

namespace schmidt {

class Surd {
 public:
  Surd() = default;
  Surd(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {}
  static Surd rational(Rational a, std::int64_t d) { return {std::move(a), 0, d}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt_part() const { return b_; }
  std::int64_t radicand() const { return d_; }

  /// Exact sign of a + b sqrt(D).
  int sign() const {
    const int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with b^2 D
    const Rational lhs = a_ * a_, rhs = b_ * b_ * d_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  double to_double() const { return to_double_(a_) + to_double_(b_) * std::sqrt(static_cast<double>(d_)); }

  Surd operator-() const { return {-a_, -b_, d_}; }
  friend Surd operator+(const Surd& x, const Surd& y) { return {x.a_ + y.a_, x.b_ + y.b_, pick(x, y)}; }
  friend Surd operator-(const Surd& x, const Surd& y) { return {x.a_ - y.a_, x.b_ - y.b_, pick(x, y)}; }
  friend Surd operator*(const Surd& x, const Surd& y) {
    const std::int64_t d = pick(x, y);
    return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d};
  }
  friend Surd operator*(const Rational& k, const Surd& x) { return {k * x.a_, k * x.b_, x.d_}; }

  friend bool operator==(const Surd& x, const Surd& y) { return (x - y).sign() == 0; }
  friend bool operator<(const Surd& x, const Surd& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const Surd& x, const Surd& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const Surd& x, const Surd& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const Surd& x, const Surd& y) { return (x - y).sign() >= 0; }

 private:
  static double to_double_(const Rational& q) { return q.convert_to<double>(); }
  // Zero-valued constants may be built without a radicand.
  static std::int64_t pick(const Surd& x, const Surd& y) { return x.d_ != 0 ? x.d_ : y.d_; }

  Rational a_ = 0, b_ = 0;
  std::int64_t d_ = 0;
};

inline const Surd& max(const Surd& x, const Surd& y) { return x < y ? y : x; }
inline const Surd& min(const Surd& x, const Surd& y) { return y < x ? y : x; }

}  // namespace schmidt
