#include <gtest/gtest.h>

#include "schmidt/quadint.hpp"
#include "support.hpp"

using namespace schmidt;
using namespace schmidt::testing;

namespace {

Discriminant disc(std::int64_t d) { return Discriminant::make(d); }

/// Whether 1 is an integer combination of x, tau x, y, tau y with
/// coefficients in [-box, box].
bool coprime_by_search(const QuadInt& x, const QuadInt& y, int box) {
  const QuadInt g[4] = {x, x.times_tau(), y, y.times_tau()};
  for (int i = -box; i <= box; ++i)
    for (int j = -box; j <= box; ++j)
      for (int k = -box; k <= box; ++k)
        for (int l = -box; l <= box; ++l)
          if (Integer(i) * g[0] + Integer(j) * g[1] + Integer(k) * g[2] + Integer(l) * g[3] == QuadInt(x.disc(), 1))
            return true;
  return false;
}

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return errc::io_error;
}

}  // namespace

TEST(Discriminant, AcceptsFundamental) {
  EXPECT_EQ(disc(-15).value(), -15);
  EXPECT_EQ(disc(-4).value(), -4);
  for (auto d : all_fields()) EXPECT_NO_THROW(disc(d));
}

TEST(Discriminant, RejectsNonFundamental) {
  for (std::int64_t d : {-12, -9, 0, 5, -1, -2, -16, -27, 1})
    EXPECT_EQ(code_of([&] { disc(d); }), errc::non_fundamental) << d;
}

TEST(QuadInt, TauSquared) {
  const auto d15 = disc(-15);
  EXPECT_EQ(QuadInt::tau(d15) * QuadInt::tau(d15), QuadInt(d15, -4, 1));
  const auto d4 = disc(-4);
  EXPECT_EQ(QuadInt::tau(d4) * QuadInt::tau(d4), QuadInt(d4, -1, 0));
}

TEST(QuadInt, Norms) {
  EXPECT_EQ(QuadInt(disc(-15), 2, 1).norm(), 10);
  EXPECT_EQ(QuadInt(disc(-4), 1, 1).norm(), 2);
  for (auto d : all_fields()) EXPECT_EQ(QuadInt(disc(d)).norm(), 0);
}

TEST(QuadInt, MixedDiscriminantRejected) {
  EXPECT_EQ(code_of([] { (void)(QuadInt(disc(-4), 1) + QuadInt(disc(-7), 1)); }), errc::mixed_discriminant);
  EXPECT_EQ(code_of([] { (void)(QuadInt(disc(-4), 1) * QuadInt(disc(-7), 1)); }), errc::mixed_discriminant);
}

TEST(QuadInt, RingProperties) {
  Rng rng(1);
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    for (int i = 0; i < 300; ++i) {
      const QuadInt x = random_quadint(d, rng, 50), y = random_quadint(d, rng, 50), z = random_quadint(d, rng, 50);
      EXPECT_EQ(conj(conj(x)), x);
      EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
      EXPECT_EQ(conj(x * y), conj(x) * conj(y));
      EXPECT_EQ(conj(x + y), conj(x) + conj(y));
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x.norm(), norm_oracle(d, x.a(), x.b()));
      EXPECT_GE(x.norm(), 0);
      if (!x.is_zero()) { EXPECT_GT(x.norm(), 0); }
      // x + conj(x) is rational; x - conj(x) = b sqrt(delta)
      EXPECT_EQ((x + conj(x)).b(), 0);
      EXPECT_EQ(x - conj(x), x.b() * sqrt_delta(d));
    }
  }
}

TEST(QuadInt, SqrtDelta) {
  EXPECT_EQ(sqrt_delta(disc(-4)), QuadInt(disc(-4), 0, 2));
  EXPECT_EQ(sqrt_delta(disc(-15)), QuadInt(disc(-15), -1, 2));
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    EXPECT_EQ(sqrt_delta(d) * sqrt_delta(d), QuadInt(d, delta));
  }
}

TEST(QuadInt, Units) {
  EXPECT_EQ(units(disc(-7)), (std::vector<QuadInt>{QuadInt(disc(-7), 1), QuadInt(disc(-7), -1)}));
  EXPECT_EQ(units(disc(-4)).size(), 4u);
  EXPECT_EQ(units(disc(-3)).size(), 6u);
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    // every element of norm 1 in a generous box is listed
    std::size_t found = 0;
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b)
        if (QuadInt(d, a, b).norm() == 1) ++found;
    EXPECT_EQ(found, units(d).size()) << delta;
    for (const auto& u : units(d)) EXPECT_EQ(u * unit_inverse(u), QuadInt(d, 1));
  }
}

TEST(QuadInt, CoprimeExamples) {
  const auto d15 = disc(-15);
  EXPECT_TRUE(is_coprime(QuadInt(d15, 3), QuadInt::tau(d15)));
  EXPECT_FALSE(is_coprime(QuadInt(d15, 2), QuadInt::tau(d15)));
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    EXPECT_TRUE(is_coprime(QuadInt(d, 1), QuadInt(d, 7, -3)));
  }
  EXPECT_EQ(code_of([&] { is_coprime(QuadInt(d15), QuadInt(d15)); }), errc::both_zero);
}

TEST(QuadInt, CoprimeAgreesWithSearch) {
  Rng rng(2);
  for (std::int64_t delta : {-4, -15, -20}) {
    const auto d = disc(delta);
    for (int i = 0; i < 40; ++i) {
      const QuadInt x = random_quadint(d, rng, 2), y = random_quadint(d, rng, 2);
      if (x.is_zero() && y.is_zero()) continue;
      EXPECT_EQ(is_coprime(x, y), coprime_by_search(x, y, 4)) << to_string(x) << ", " << to_string(y);
    }
  }
}

TEST(EuclideanDiv, Examples) {
  const auto d4 = disc(-4);
  const auto [q, r] = euclidean_div(QuadInt(d4, 5, 3), QuadInt(d4, 2));
  EXPECT_EQ(q * QuadInt(d4, 2) + r, QuadInt(d4, 5, 3));
  EXPECT_LE(r.norm(), 2);
  for (auto delta : euclidean_fields()) {
    const auto d = disc(delta);
    const QuadInt x(d, 7, -2);
    const auto res = euclidean_div(x, x);
    EXPECT_EQ(res.q, QuadInt(d, 1));
    EXPECT_EQ(res.r, QuadInt(d, 0));
  }
  EXPECT_EQ(code_of([] { euclidean_div(QuadInt(disc(-19), 3), QuadInt(disc(-19), 2)); }), errc::not_euclidean_field);
  EXPECT_EQ(code_of([&] { euclidean_div(QuadInt(d4, 3), QuadInt(d4, 0)); }), errc::division_by_zero);
}

TEST(EuclideanDiv, TiesRoundTowardZero) {
  const auto d4 = disc(-4);
  EXPECT_EQ(euclidean_div(QuadInt(d4, 1, 1), QuadInt(d4, 2)).q, QuadInt(d4, 0));
  EXPECT_EQ(euclidean_div(QuadInt(d4, -1, -1), QuadInt(d4, 2)).q, QuadInt(d4, 0));
  EXPECT_EQ(euclidean_div(QuadInt(d4, 3, -5), QuadInt(d4, 2)).q, QuadInt(d4, 1, -2));
  const auto d8 = disc(-8);
  EXPECT_EQ(euclidean_div(QuadInt(d8, -3), QuadInt(d8, 2)).q, QuadInt(d8, -1));
  // at -7 the tau coordinate 1/2 goes to 0, leaving real part 3/4 -> 1
  const auto d7 = disc(-7);
  EXPECT_EQ(euclidean_div(QuadInt(d7, 1, 1), QuadInt(d7, 2)).q, QuadInt(d7, 1));
  EXPECT_EQ(euclidean_div(QuadInt(d7, -1, -1), QuadInt(d7, 2)).q, QuadInt(d7, -1));
}

TEST(EuclideanDiv, RemainderIsSmallerFuzz) {
  Rng rng(3);
  for (auto delta : euclidean_fields()) {
    const auto d = disc(delta);
    for (int i = 0; i < 3000; ++i) {
      const QuadInt x = random_quadint(d, rng, 1000), y = random_quadint(d, rng, 40);
      if (y.is_zero()) continue;
      const auto [q, r] = euclidean_div(x, y);
      ASSERT_EQ(q * y + r, x);
      ASSERT_LT(r.norm(), y.norm()) << delta << " " << to_string(x) << " / " << to_string(y);
    }
  }
}

TEST(Kronecker, Examples) {
  EXPECT_EQ(kronecker(disc(-15), 2), 1);
  EXPECT_EQ(kronecker(disc(-4), 2), 0);
  EXPECT_EQ(kronecker(disc(-3), 2), -1);
  EXPECT_EQ(code_of([] { kronecker(disc(-7), 9); }), errc::not_prime);
}

TEST(Kronecker, CountsSquareRootsModP) {
  // for odd p not dividing delta, (delta/p) + 1 = #{x mod p : x^2 = delta}
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29}) {
      int roots = 0;
      for (std::int64_t x = 0; x < p; ++x)
        if (((x * x - delta) % p + p) % p == 0) ++roots;
      EXPECT_EQ(kronecker(d, p), roots - 1) << delta << " " << p;
    }
  }
}

TEST(QuadInt, TextRoundTrip) {
  const auto d = disc(-7);
  EXPECT_EQ(to_string(QuadInt(d, 3, -2)), "3-2*t");
  EXPECT_EQ(to_string(QuadInt(d, -1, 4)), "-1+4*t");
  EXPECT_EQ(parse_quadint(d, "3-2*t"), QuadInt(d, 3, -2));
  EXPECT_EQ(parse_quadint(d, "t"), QuadInt(d, 0, 1));
  EXPECT_EQ(parse_quadint(d, "-t"), QuadInt(d, 0, -1));
  EXPECT_EQ(parse_quadint(d, "5"), QuadInt(d, 5, 0));
  EXPECT_EQ(parse_quadint(d, "1+t"), QuadInt(d, 1, 1));
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const QuadInt x = random_quadint(d, rng, 100000);
    EXPECT_EQ(parse_quadint(d, to_string(x)), x);
  }
  EXPECT_EQ(code_of([&] { parse_quadint(d, "3+*t"); }), errc::parse_error);
  EXPECT_EQ(code_of([&] { parse_quadint(d, ""); }), errc::parse_error);
}

TEST(QuadInt, LeadingZerosAreDecimal) {
  const auto d = disc(-4);
  EXPECT_EQ(parse_quadint(d, "010-007*t"), QuadInt(d, 10, -7));
  EXPECT_EQ(parse_quadint(d, "0"), QuadInt(d, 0, 0));
  EXPECT_EQ(parse_quadint(d, "00*t"), QuadInt(d, 0, 0));
}
