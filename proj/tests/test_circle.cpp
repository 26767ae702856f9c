#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "schmidt/circle.hpp"
#include "support.hpp"

using namespace schmidt;
using namespace schmidt::testing;

namespace {

using cplx = std::complex<double>;
using Kind = IntersectionClass::Kind;

Discriminant disc(std::int64_t d) { return Discriminant::make(d); }

QuadInt q(Discriminant d, std::int64_t a, std::int64_t b = 0) { return {d, a, b}; }

cplx to_complex(const QuadInt& x) {
  const Discriminant d = x.disc();
  const cplx tau(d.trace_tau() / 2.0, std::sqrt(static_cast<double>(d.abs_value())) / 2.0);
  return x.a().convert_to<double>() + x.b().convert_to<double>() * tau;
}

cplx to_complex(const ProjPoint& p) { return to_complex(p.num) / to_complex(p.den); }

/// Circumcircle of three points in floating point.
FloatCircle circumcircle(cplx a, cplx b, cplx c) {
  const cplx ab = b - a, ac = c - a;
  const double den = 2 * (ab.real() * ac.imag() - ab.imag() * ac.real());
  const double ux = (ac.imag() * std::norm(ab) - ab.imag() * std::norm(ac)) / den;
  const double uy = (ab.real() * std::norm(ac) - ac.real() * std::norm(ab)) / den;
  return {a.real() + ux, a.imag() + uy, std::hypot(ux, uy)};
}

/// A proper circle from a random det-1 matrix.
OrientedCircle random_proper(Discriminant d, Rng& rng) {
  for (;;) {
    const OrientedCircle c = circle_from_matrix(random_sl2(d, rng, 5));
    if (!c.is_line() && abs(c.curv) <= 40) return c;
  }
}

}  // namespace

TEST(CircleFromMatrix, IdentityIsRealLine) {
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    EXPECT_EQ(circle_from_matrix(Matrix2::identity(d)), real_line(d));
  }
}

TEST(CircleFromMatrix, GaussianLowerTriangular) {
  const auto d = disc(-4);
  const Matrix2 m{q(d, 1), q(d, 0), QuadInt::tau(d), q(d, 1)};
  EXPECT_EQ(circle_from_matrix(m).curv, -1);
}

TEST(CircleFromMatrix, TangentBelowOrigin) {
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    const Matrix2 m{q(d, 0), q(d, 1), q(d, 1), QuadInt::tau(d)};
    const OrientedCircle c = circle_from_matrix(m);
    EXPECT_EQ(c.curv, 1);
    EXPECT_EQ(c.zeta, q(d, -1));
    EXPECT_EQ(radius_squared(c), Rational(1, d.abs_value()));
    const ExactCentre ce = centre(c);
    EXPECT_EQ(ce.x.sign(), 0);
    EXPECT_LT(ce.y.sign(), 0);
    EXPECT_NEAR(ce.y.to_double(), -1 / std::sqrt(static_cast<double>(d.abs_value())), 1e-12);
  }
}

TEST(CircleFromMatrix, InvariantAndFloatGeometry) {
  Rng rng(20);
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    for (int i = 0; i < 200; ++i) {
      const Matrix2 m = random_sl2(d, rng, 5);
      const OrientedCircle c = circle_from_matrix(m);
      ASSERT_TRUE(c.satisfies_invariant()) << c;
      if (c.is_line()) continue;
      const cplx a = to_complex(apply_point(m, ProjPoint::finite(q(d, 0))));
      const cplx b = to_complex(apply_point(m, ProjPoint::finite(q(d, 1))));
      const cplx e = to_complex(apply_point(m, ProjPoint::infinity(d)));
      const FloatCircle want = circumcircle(a, b, e);
      const FloatCircle got = float_shadow(c);
      const double tol = 1e-9 * (1 + std::abs(want.x) + std::abs(want.y));
      EXPECT_NEAR(got.x, want.x, tol) << c;
      EXPECT_NEAR(got.y, want.y, tol) << c;
      EXPECT_NEAR(got.r, want.r, tol) << c;
    }
  }
}

TEST(CircleFromMatrix, RejectsNonUnitDeterminant) {
  const auto d = disc(-7);
  EXPECT_THROW(circle_from_matrix(Matrix2{q(d, 2), q(d, 0), q(d, 0), q(d, 1)}), error);
}

TEST(MakeCircle, RejectsBrokenInvariant) {
  const auto d = disc(-7);
  EXPECT_NO_THROW(make_circle(1, 0, q(d, -1)));
  EXPECT_THROW(make_circle(1, 1, q(d, 1)), error);
}

TEST(Transform, CoherentWithMatrixProduct) {
  Rng rng(21);
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    for (int i = 0; i < 200; ++i) {
      const Matrix2 m = random_sl2(d, rng, 4), n = random_sl2(d, rng, 4);
      EXPECT_EQ(transform(m, circle_from_matrix(n)), circle_from_matrix(m * n));
      const OrientedCircle c = circle_from_matrix(n);
      EXPECT_EQ(transform(Matrix2::identity(d), c), c);
      EXPECT_EQ(transform(m, c.reversed()), transform(m, c).reversed());
    }
  }
}

TEST(Transform, TranslationMovesCentre) {
  Rng rng(22);
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    for (int i = 0; i < 50; ++i) {
      const OrientedCircle c = random_proper(d, rng);
      const QuadInt w = random_quadint(d, rng, 5);
      const OrientedCircle t = translate(c, w);
      EXPECT_EQ(t.curv, c.curv);
      const auto [x0, y0] = centre_coordinates(c);
      const auto [x1, y1] = centre_coordinates(t);
      EXPECT_EQ(x1 - x0, Rational(w.a()));
      EXPECT_EQ(y1 - y0, Rational(w.b()));
    }
  }
}

TEST(Transform, SwapExchangesCurvatures) {
  Rng rng(23);
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    for (int i = 0; i < 50; ++i) {
      const OrientedCircle c = circle_from_matrix(random_sl2(d, rng, 4));
      const OrientedCircle s = transform(Matrix2::swap(d), c);
      EXPECT_EQ(s.curv, c.cocurv);
      EXPECT_EQ(s.cocurv, c.curv);
      EXPECT_EQ(s.zeta, c.zeta.conj());
    }
  }
}

TEST(Transform, RotationKeepsArrangement) {
  EXPECT_EQ(symmetry_units(disc(-4)).size(), 2u);
  EXPECT_EQ(symmetry_units(disc(-3)).size(), 6u);
  EXPECT_EQ(symmetry_units(disc(-7)).size(), 2u);
  Rng rng(24);
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    for (const auto& u : symmetry_units(d)) {
      for (int i = 0; i < 20; ++i) {
        const OrientedCircle c = random_proper(d, rng);
        const OrientedCircle r = rotate(c, u);
        EXPECT_TRUE(r.satisfies_invariant());
        const FloatCircle f = float_shadow(c), g = float_shadow(r);
        const cplx moved = to_complex(u) * cplx(f.x, f.y);
        EXPECT_NEAR(g.x, moved.real(), 1e-9);
        EXPECT_NEAR(g.y, moved.imag(), 1e-9);
        EXPECT_NEAR(g.r, f.r, 1e-12);
      }
    }
  }
}

TEST(Pedoe, Examples) {
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    const OrientedCircle r = real_line(d);
    const OrientedCircle below = circle_from_matrix(Matrix2{q(d, 0), q(d, 1), q(d, 1), QuadInt::tau(d)});
    EXPECT_EQ(pedoe_product(r, r), HalfInt::from_integer(1));
    EXPECT_EQ(pedoe_product(below, below), HalfInt::from_integer(1));
    EXPECT_EQ(pedoe_product(r, below), HalfInt::from_integer(-1));
    EXPECT_EQ(classify_intersection(r, below).kind, Kind::ExternallyTangent);
    EXPECT_TRUE(same_point(tangency_point(r, below), ProjPoint::finite(q(d, 0))));
  }
  for (std::int64_t delta : {-4, -8, -20}) {
    const auto d = disc(delta);
    const OrientedCircle r = real_line(d);
    const OrientedCircle shifted = translate(r, QuadInt::tau(d));
    EXPECT_EQ(pedoe_product(r, shifted), HalfInt::from_integer(1));
    EXPECT_EQ(classify_intersection(r, shifted).kind, Kind::InternallyTangent);
    EXPECT_EQ(tangency_point(r, shifted), ProjPoint::infinity(d));
  }
}

TEST(Pedoe, InvariantUnderTransform) {
  Rng rng(25);
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    for (int i = 0; i < 200; ++i) {
      const OrientedCircle a = circle_from_matrix(random_sl2(d, rng, 4));
      const OrientedCircle b = circle_from_matrix(random_sl2(d, rng, 4));
      const Matrix2 m = random_sl2(d, rng, 4);
      EXPECT_EQ(pedoe_twice(transform(m, a), transform(m, b)), pedoe_twice(a, b));
      EXPECT_EQ(pedoe_twice(a, b), pedoe_twice(b, a));
      EXPECT_EQ(pedoe_twice(a.reversed(), b), -pedoe_twice(a, b));
    }
  }
}

TEST(Classify, AgreesWithFloatGeometry) {
  Rng rng(26);
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    for (int i = 0; i < 400; ++i) {
      const OrientedCircle a = random_proper(d, rng), b = random_proper(d, rng);
      const auto cls = classify_intersection(a, b);
      const FloatCircle fa = float_shadow(a), fb = float_shadow(b);
      const double dist = std::hypot(fa.x - fb.x, fa.y - fb.y);
      const double tol = 1e-9;
      switch (cls.kind) {
        case Kind::Coincident:
          EXPECT_NEAR(dist, 0, tol);
          EXPECT_NEAR(fa.r, fb.r, tol);
          break;
        case Kind::DisjointOutside:
          EXPECT_GT(dist, fa.r + fb.r + tol);
          break;
        case Kind::DisjointNested:
          EXPECT_LT(dist + tol, std::abs(fa.r - fb.r));
          break;
        case Kind::ExternallyTangent:
        case Kind::InternallyTangent:
          EXPECT_TRUE(std::abs(dist - (fa.r + fb.r)) < tol || std::abs(dist - std::abs(fa.r - fb.r)) < tol);
          break;
        default:
          if (delta != -3) ADD_FAILURE() << "crossing circles " << a << " " << b;
          EXPECT_GT(dist, std::abs(fa.r - fb.r));
          EXPECT_LT(dist, fa.r + fb.r);
      }
    }
  }
}

TEST(Classify, TangencyKindFollowsOrientation) {
  Rng rng(27);
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    for (int i = 0; i < 100; ++i) {
      const Matrix2 m = random_sl2(d, rng, 5);
      const OrientedCircle c = circle_from_matrix(m);
      const OrientedCircle t = circle_from_matrix(immediate_tangent_at(m));
      EXPECT_EQ(classify_intersection(c, t).kind, Kind::ExternallyTangent);
      EXPECT_EQ(classify_intersection(c, t.reversed()).kind, Kind::InternallyTangent);
      EXPECT_EQ(classify_intersection(c, c.reversed()).kind, Kind::Coincident);
    }
  }
}

TEST(Classify, ParallelLines) {
  for (std::int64_t delta : {-4, -7, -15}) {
    const auto d = disc(delta);
    const OrientedCircle r = real_line(d);
    const OrientedCircle up = translate(r, QuadInt::tau(d) + QuadInt::tau(d));
    EXPECT_EQ(classify_intersection(r, up).kind, Kind::InternallyTangent);
  }
}

TEST(Classify, HexagonalAnglesAppear) {
  // circles through 0 of the Eisenstein arrangement meet at pi/3 and 2pi/3
  const auto d = disc(-3);
  const OrientedCircle r = real_line(d);
  bool seen = false;
  for (const auto& u : units(d)) {
    const OrientedCircle c = rotate(r, u);
    const Integer p = pedoe_twice(r, c);
    if (abs(p) == 1) {
      seen = true;
      EXPECT_EQ(classify_intersection(r, c).kind, Kind::UnitAngle);
    }
  }
  EXPECT_TRUE(seen);
}

TEST(TangencyPoint, LiesOnBothAndTranslates) {
  Rng rng(28);
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    for (int i = 0; i < 100; ++i) {
      const Matrix2 m = random_sl2(d, rng, 5);
      const OrientedCircle c = circle_from_matrix(m);
      const OrientedCircle t = circle_from_matrix(immediate_tangent_at(m));
      const ProjPoint p = tangency_point(c, t);
      EXPECT_TRUE(p.is_reduced());
      EXPECT_TRUE(point_on_circle(c, p));
      EXPECT_TRUE(point_on_circle(t, p));
      EXPECT_TRUE(same_point(p, apply_point(m, ProjPoint::infinity(d))));
      const QuadInt w = random_quadint(d, rng, 4);
      const ProjPoint pw = tangency_point(translate(c, w), translate(t, w));
      EXPECT_TRUE(same_point(pw, apply_point(Matrix2::elementary(w), p)));
    }
  }
}

TEST(TangencyPoint, RejectsNonTangent) {
  const auto d = disc(-7);
  const OrientedCircle r = real_line(d);
  try {
    tangency_point(r, translate(circle_from_matrix(Matrix2{q(d, 0), q(d, 1), q(d, 1), QuadInt::tau(d)}), q(d, 0, 4)));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_tangent);
  }
}

TEST(PointOnCircle, Examples) {
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    const OrientedCircle r = real_line(d);
    for (int p = -5; p <= 5; ++p)
      for (int s = 1; s <= 5; ++s) EXPECT_TRUE(point_on_circle(r, ProjPoint(q(d, p), q(d, s))));
    EXPECT_TRUE(point_on_circle(r, ProjPoint::infinity(d)));
    EXPECT_FALSE(point_on_circle(r, ProjPoint::finite(QuadInt::tau(d))));
  }
}

TEST(PointOnCircle, ImagesOfRationalPoints) {
  Rng rng(29);
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    for (int i = 0; i < 50; ++i) {
      const Matrix2 m = random_sl2(d, rng, 5);
      const OrientedCircle c = circle_from_matrix(m);
      for (int p = -3; p <= 3; ++p) {
        const ProjPoint x = apply_point(m, ProjPoint(q(d, p), q(d, 2)));
        EXPECT_TRUE(point_on_circle(c, x));
        if (!c.is_line() && !x.is_infinity()) {
          const FloatCircle f = float_shadow(c);
          EXPECT_NEAR(std::abs(to_complex(x) - cplx(f.x, f.y)), f.r, 1e-9 * (1 + f.r));
        }
      }
      EXPECT_FALSE(point_on_circle(c, apply_point(m, ProjPoint::finite(QuadInt::tau(d)))));
    }
  }
}

TEST(Bezout, Examples) {
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    const Bezout a = solve_bezout(q(d, 1), q(d, 0));
    EXPECT_EQ(a.delta, q(d, 1));
    EXPECT_EQ(a.gamma, q(d, 0));
    const Bezout b = solve_bezout(q(d, 0), q(d, 1));
    EXPECT_EQ(b.gamma, q(d, -1));
    EXPECT_EQ(b.delta, q(d, 0));
  }
  const auto d = disc(-15);
  const Bezout c = solve_bezout(q(d, 3), QuadInt::tau(d));
  EXPECT_EQ(q(d, 3) * c.delta - QuadInt::tau(d) * c.gamma, q(d, 1));
  try {
    solve_bezout(q(d, 2), QuadInt::tau(d));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_coprime);
  }
}

TEST(Bezout, RandomCoprimePairs) {
  Rng rng(30);
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    int solved = 0;
    for (int i = 0; i < 300; ++i) {
      const QuadInt a = random_quadint(d, rng, 30), b = random_quadint(d, rng, 30);
      if (a.is_zero() && b.is_zero()) continue;
      if (!is_coprime(a, b)) {
        EXPECT_THROW(solve_bezout(a, b), error);
        continue;
      }
      const Bezout s = solve_bezout(a, b);
      EXPECT_EQ(a * s.delta - b * s.gamma, q(d, 1));
      ++solved;
    }
    EXPECT_GT(solved, 100);
  }
}

TEST(TangentFamily, ThroughOriginWithUnitStep) {
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    const ProjPoint zero = ProjPoint::finite(q(d, 0));
    const OrientedCircle c = tangent_family(zero, q(d, 1), 1);
    EXPECT_EQ(c.curv, 1);
    EXPECT_TRUE(point_on_circle(c, zero));
    EXPECT_EQ(radius_squared(c), Rational(1, d.abs_value()));
    // the family member through 0 with unit step sits above the real line
    EXPECT_GT(centre(c).y.sign(), 0);
    EXPECT_EQ(centre(c).x.sign(), 0);
  }
}

TEST(TangentFamily, MembersShareTheTangencyPoint) {
  Rng rng(31);
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    for (int i = 0; i < 40; ++i) {
      const ProjPoint x = apply_point(random_sl2(d, rng, 4), ProjPoint::infinity(d));
      const auto& us = units(d);
      const QuadInt u = us[uniform(rng, 0, static_cast<std::int64_t>(us.size()) - 1)];
      std::vector<OrientedCircle> fam;
      for (int k = -3; k <= 3; ++k) fam.push_back(tangent_family(x, u, k));
      // curvature is affine in k with step N(beta)
      for (std::size_t k = 1; k < fam.size(); ++k) {
        EXPECT_EQ(abs(fam[k].curv - fam[k - 1].curv), x.den.norm());
        EXPECT_EQ(fam[k].curv - fam[k - 1].curv, fam[1].curv - fam[0].curv);
      }
      for (std::size_t a = 0; a < fam.size(); ++a) {
        EXPECT_TRUE(point_on_circle(fam[a], x));
        for (std::size_t b = a + 1; b < fam.size(); ++b) {
          EXPECT_TRUE(classify_intersection(fam[a], fam[b]).is_tangent());
          EXPECT_TRUE(same_point(tangency_point(fam[a], fam[b]), x));
        }
      }
    }
  }
}

TEST(TangentFamily, RejectsBadInput) {
  const auto d = disc(-15);
  try {
    tangent_family(ProjPoint(q(d, 2), QuadInt::tau(d) * q(d, 2)), q(d, 1), 1);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_reduced);
  }
  try {
    tangent_family(ProjPoint::finite(q(d, 0)), q(d, 2), 1);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_a_unit);
  }
}

TEST(ImmediateTangent, MarkedRealLine) {
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    const Matrix2 t = immediate_tangent_at(Matrix2::swap(d));
    EXPECT_EQ(t, (Matrix2{q(d, 0), q(d, 1), q(d, 1), QuadInt::tau(d)}));
    const OrientedCircle c = circle_from_matrix(t);
    EXPECT_EQ(c.curv, 1);
    EXPECT_LT(centre(c).y.sign(), 0);
  }
}

TEST(TangentCurvatures, RealLineGivesSquares) {
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    const auto v = tangent_curvatures(Matrix2::swap(d), 50);
    EXPECT_EQ(v, (std::vector<Integer>{1, 4, 9, 16, 25, 36, 49}));
  }
}

TEST(TangentCurvatures, LowerBoundAndSorted) {
  Rng rng(32);
  for (auto delta : all_fields()) {
    const auto d = disc(delta);
    for (int i = 0; i < 30; ++i) {
      const Matrix2 m = random_sl2(d, rng, 4);
      const OrientedCircle c = circle_from_matrix(m);
      const auto v = tangent_curvatures(m, 40);
      EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
      for (const auto& x : v) {
        EXPECT_LE(x, 40);
        if (!c.is_line()) { EXPECT_GE(x, 1 - c.curv); }
      }
      // the immediate tangent at M(infinity) is among them when small enough
      const Integer t = circle_from_matrix(immediate_tangent_at(m)).curv;
      if (!c.is_line() && t <= 40) { EXPECT_TRUE(std::binary_search(v.begin(), v.end(), t)); }
    }
  }
}
