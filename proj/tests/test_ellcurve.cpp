/*
   Copyright 2026 The torsiongate Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <gtest/gtest.h>

#include <random>
#include <set>

#include "torsiongate/ellcurve.hpp"
#include "torsiongate/errors.hpp"

using namespace torsiongate;

namespace {

Curve short_q(long a, long b) { return Curve::over_Q({0, 0, 0, Rational(a), Rational(b)}); }

CurvePoint pt(const NumberField& K, Rational x, Rational y) {
  return CurvePoint::affine(K.from_rational(x), K.from_rational(y));
}

// Naive count of the long model over F_p by direct enumeration of (x, y).
long naive_count(const std::array<long, 5>& a, long p) {
  long N = 1;
  auto md = [p](long v) { return ((v % p) + p) % p; };
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y)
      if (md(y * y + a[0] * x * y + a[2] * y) == md(x * x * x + a[1] * x * x + a[3] * x + a[4])) ++N;
  return N;
}

FieldElement eval_at(const PolyNF& f, const FieldElement& x) {
  FieldElement acc = x.field().zero();
  for (int i = f.degree(); i >= 0; --i) acc = acc * x + f.coeff(i);
  return acc;
}

}  // namespace

TEST(Curve, ShortModelOf11a1) {
  Curve E = Curve::over_Q({0, -1, 1, -10, -20});
  EXPECT_EQ(E.short_a().to_rational(), make_rational(-31, 3));
  EXPECT_EQ(E.short_b().to_rational(), make_rational(-2501, 108));
  EXPECT_EQ(E.discriminant().to_rational(), Rational(-161051));
}

TEST(Curve, SingularRejected) {
  EXPECT_THROW(short_q(0, 0), DomainError);
  EXPECT_THROW(short_q(-3, 2), DomainError);
}

TEST(Curve, LongCoordinatesRoundTrip) {
  Curve E = Curve::over_Q({0, -1, 1, -10, -20});
  NumberField Q;
  CurvePoint P = E.from_long(Q.from_rational(5), Q.from_rational(5));
  EXPECT_TRUE(on_curve(E, P));
  auto [X, Y] = E.to_long(P);
  EXPECT_EQ(X.to_rational(), Rational(5));
  EXPECT_EQ(Y.to_rational(), Rational(5));
  EXPECT_EQ(point_order(E, P, 100), 5);
}

TEST(GroupLaw, Examples) {
  Curve E = short_q(0, 1);
  NumberField Q;
  CurvePoint P = pt(Q, 2, 3), R = pt(Q, 0, 1);
  EXPECT_EQ(add(E, P, R), pt(Q, -1, 0));
  EXPECT_EQ(mul_scalar(E, 2, P), pt(Q, 0, 1));
  EXPECT_TRUE(mul_scalar(E, 6, P).infinity);
  EXPECT_EQ(point_order(E, P, 10), 6);
}

TEST(GroupLaw, Axioms) {
  // y^2 = x^3 - 2 has the non-torsion point (3, 5).
  Curve E = short_q(0, -2);
  NumberField Q;
  CurvePoint P = pt(Q, 3, 5);
  std::vector<CurvePoint> pts{CurvePoint::at_infinity()};
  for (int n = 1; n <= 4; ++n) pts.push_back(mul_scalar(E, n, P));
  for (const auto& a : pts) {
    EXPECT_TRUE(on_curve(E, a));
    EXPECT_EQ(add(E, a, CurvePoint::at_infinity()), a);
    EXPECT_TRUE(add(E, a, negate(E, a)).infinity);
    for (const auto& b : pts) {
      EXPECT_EQ(add(E, a, b), add(E, b, a));
      for (const auto& c : pts) EXPECT_EQ(add(E, add(E, a, b), c), add(E, a, add(E, b, c)));
    }
  }
}

TEST(GroupLaw, MulScalarMatchesRepeatedAddition) {
  NumberField K = nf_create(PolyQ{1, 0, 1}, "Q(i)");
  FieldElement i = K.generator();
  // y^2 = x^3 - x over Q(i) with P = (i, 1 - i): (1-i)^2 = -2i = i^3 - i.
  Curve E = Curve::short_model(K, K.from_rational(-1), K.zero());
  CurvePoint P = CurvePoint::affine(i, K.one() - i);
  ASSERT_TRUE(on_curve(E, P));
  CurvePoint acc = CurvePoint::at_infinity();
  for (int n = 0; n <= 20; ++n) {
    EXPECT_EQ(mul_scalar(E, n, P), acc) << n;
    acc = add(E, acc, P);
  }
}

TEST(DivisionPoly, Examples) {
  Curve E = short_q(-1, 0);
  EXPECT_EQ(division_poly(2, E).to_q(), (PolyQ{0, -1, 0, 1}));
  Curve F = short_q(2, 3);
  // 3x^4 + 6a x^2 + 12 b x - a^2
  EXPECT_EQ(division_poly(3, F).to_q(), (PolyQ{-4, 36, 12, 0, 3}));
}

TEST(DivisionPoly, MultiplicationByNMatchesGroupLaw) {
  Curve E = short_q(0, -2);
  NumberField Q;
  CurvePoint P = pt(Q, 3, 5);
  DivisionPolynomials dp(E);
  for (int n = 1; n <= 9; ++n) {
    CurvePoint nP = mul_scalar(E, n, P);
    FieldElement num = eval_at(dp.phi(n), P.x), den = eval_at(dp.psi_squared(n), P.x);
    ASSERT_FALSE(den.is_zero());
    EXPECT_EQ(num / den, nP.x) << n;
  }
}

TEST(DivisionPoly, VanishesExactlyOnTorsion) {
  // 11a1 has a rational 5-torsion point; y^2 = x^3 + 1 a 6-torsion point.
  Curve A = Curve::over_Q({0, -1, 1, -10, -20}).to_short_weierstrass();
  Curve B = short_q(0, 1);
  NumberField Q;
  CurvePoint PA = Curve::over_Q({0, -1, 1, -10, -20}).from_long(Q.from_rational(5), Q.from_rational(5));
  CurvePoint PB = pt(Q, 2, 3);
  for (auto [E, P] : {std::pair{A, PA}, std::pair{B, PB}}) {
    DivisionPolynomials dp(E);
    for (int n = 1; n <= 9; ++n) {
      for (int j = 1; j <= 6; ++j) {
        CurvePoint Q1 = mul_scalar(E, j, P);
        if (Q1.infinity) continue;
        bool zero = eval_at(dp.division_poly(n), Q1.x).is_zero();
        EXPECT_EQ(zero, mul_scalar(E, n, Q1).infinity) << n << " " << j;
      }
    }
  }
}

TEST(Torsion, LevelOneExamples) {
  NumberField Q;
  auto id = Embedding::identity(Q);
  auto t3 = ell_power_torsion(short_q(0, 1), id, 3, 1);
  EXPECT_EQ(t3.order(), 3);
  EXPECT_EQ(t3.generators.front().x.to_rational(), Rational(0));
  auto t2 = ell_power_torsion(short_q(-1, 0), id, 2, 1);
  EXPECT_EQ(t2.structure(), "Z/2 x Z/2");
  std::set<Rational> xs;
  for (auto& P : t2.points)
    if (!P.infinity) xs.insert(P.x.to_rational());
  EXPECT_EQ(xs, (std::set<Rational>{-1, 0, 1}));
  EXPECT_EQ(ell_power_torsion(short_q(0, -2), id, 2, 1).order(), 1);
}

TEST(Torsion, FullSubgroupExamples) {
  NumberField Q;
  auto id = Embedding::identity(Q);
  EXPECT_EQ(torsion_subgroup(short_q(0, 1), id).structure(), "Z/6");
  EXPECT_EQ(torsion_subgroup(short_q(-1, 0), id).structure(), "Z/2 x Z/2");
  auto t = torsion_subgroup(short_q(0, 4), id);
  EXPECT_EQ(t.structure(), "Z/3");
  std::set<CurvePoint> pts(t.points.begin(), t.points.end());
  EXPECT_TRUE(pts.count(pt(Q, 0, 2)));
  EXPECT_EQ(torsion_subgroup(Curve::over_Q({0, -1, 1, -10, -20}), id).structure(), "Z/5");
}

TEST(Torsion, EightTorsionOverQ) {
  // Tate normal form with a point of order 8: b = (2d-1)(d-1), c = b/d, d = 3/2.
  Rational d = make_rational(3, 2);
  Rational b = (2 * d - 1) * (d - 1), c = b / d;
  Curve E = Curve::over_Q({1 - c, -b, -b, 0, 0});
  NumberField Q;
  auto t = torsion_subgroup(E, Embedding::identity(Q));
  EXPECT_EQ(t.structure(), "Z/8");
  EXPECT_EQ(ell_primary_torsion(E, Embedding::identity(Q), 2).order(), 8);
}

TEST(Torsion, GrowthOverQuadraticField) {
  // y^2 = x^3 - 2 gains no 2-torsion over Q(i); y^2 = x^3 + 1 gains full 2-torsion over Q(sqrt -3).
  NumberField Q;
  NumberField K = nf_create(PolyQ{3, 0, 1});
  auto emb = Embedding::from_rationals(K);
  auto t = ell_power_torsion(short_q(0, 1), emb, 2, 3);
  EXPECT_EQ(t.structure(), "Z/2 x Z/2");
  // Monotone under base change.
  auto t3Q = ell_primary_torsion(short_q(0, 1), Embedding::identity(Q), 3);
  auto t3K = ell_primary_torsion(short_q(0, 1), emb, 3);
  EXPECT_EQ(t3K.order() % t3Q.order(), 0);
}

TEST(PointCount, Examples) {
  Curve E = short_q(0, 1);
  EXPECT_EQ(count_points(E, 5), 6u);
  EXPECT_EQ(count_points(E, 7), 12u);
  EXPECT_EQ(frobenius_trace(E, 5), 0);
  EXPECT_EQ(frobenius_trace(E, 7), -4);
  EXPECT_THROW(count_points(E, 3), DomainError);
}

TEST(PointCount, MatchesNaiveEnumeration) {
  std::vector<std::array<long, 5>> curves{{0, -1, 1, -10, -20}, {1, 0, 1, 4, -6}, {0, 0, 1, -1, 0}, {0, 0, 0, -1, 0}};
  for (const auto& a : curves) {
    Curve E = Curve::over_Q({a[0], a[1], a[2], a[3], a[4]});
    for (long p : {2, 3, 5, 7, 13, 17, 19, 23, 29, 31, 37, 101}) {
      Integer disc = E.discriminant().to_rational().get_num();
      if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
      EXPECT_EQ(static_cast<long>(count_points(E, static_cast<std::uint64_t>(p))), naive_count(a, p)) << p;
    }
  }
}

TEST(PointCount, QuadraticExtensionMatchesTraceRecurrence) {
  Curve E = Curve::over_Q({0, -1, 1, -10, -20});
  for (long p : {7, 13, 17, 29, 101}) {
    long ap = frobenius_trace(E, static_cast<std::uint64_t>(p));
    long expected = p * p + 1 - (ap * ap - 2 * p);
    EXPECT_EQ(static_cast<long>(count_points(E, static_cast<std::uint64_t>(p), 2)), expected) << p;
  }
}

TEST(PointCount, BoundIsMultipleOfTorsion) {
  NumberField Q;
  for (auto a : std::vector<std::array<long, 5>>{{0, -1, 1, -10, -20}, {0, 0, 0, 0, 1}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, -2}}) {
    Curve E = Curve::over_Q({a[0], a[1], a[2], a[3], a[4]});
    auto tb = torsion_bound(E);
    EXPECT_GE(tb.primes.size(), 5u);
    auto t = torsion_subgroup(E, Embedding::identity(Q));
    EXPECT_EQ(tb.bound % t.order(), 0);
  }
  NumberField K = nf_create(PolyQ{1, 0, 1});
  Curve E = short_q(-1, 0).base_change(Embedding::from_rationals(K));
  EXPECT_EQ(torsion_bound(E).bound % 4, 0);
}

TEST(Saturate, LevelZeroIsRationalTorsion) {
  auto s = saturate(short_q(0, 1), 3, 0);
  EXPECT_TRUE(s.field.is_rational());
  EXPECT_EQ(s.generators.size(), 1u);
}

TEST(Saturate, FourTorsionOfCongruentCurve) {
  auto s = saturate(short_q(-1, 0), 2, 1);
  EXPECT_LE(s.field.degree(), 8);
  EXPECT_EQ(s.field.degree(), 4);
  auto all = generate_group(s.curve_over_field, s.generators);
  auto t = group_structure(s.curve_over_field, all);
  EXPECT_EQ(t.structure(), "Z/4 x Z/4");
  // Full 4-torsion forces i into the field.
  EXPECT_FALSE(roots_in_field(PolyQ{1, 0, 1}, s.field).empty());
  EXPECT_FALSE(roots_in_field(PolyQ{-2, 0, 1}, s.field).empty());
}

TEST(Saturate, ThreeDivisionContainsCubeRootOfUnity) {
  auto s = saturate(short_q(0, 1), 3, 1);
  EXPECT_FALSE(roots_in_field(PolyQ{1, 1, 1}, s.field).empty());
  auto t = group_structure(s.curve_over_field, generate_group(s.curve_over_field, s.generators));
  EXPECT_EQ(t.order(), 27);
}

TEST(Saturate, DegreeCapPropagates) {
  TorsionOptions o;
  o.field.degree_cap = 2;
  EXPECT_THROW(saturate(short_q(0, -2), 3, 1, o), DegreeCapExceeded);
}
