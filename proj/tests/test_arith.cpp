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

#include "torsiongate/errors.hpp"
#include "torsiongate/factor.hpp"
#include "torsiongate/poly.hpp"

using namespace torsiongate;

namespace {

// Sylvester-matrix determinant by fraction-exact Gaussian elimination.
Rational sylvester_resultant(const PolyQ& a, const PolyQ& b) {
  int m = a.degree(), n = b.degree();
  int N = m + n;
  std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[i][i + j] = a.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[n + i][i + j] = b.coeff(n - j);
  Rational det = 1;
  for (int c = 0; c < N; ++c) {
    int piv = -1;
    for (int r = c; r < N; ++r)
      if (M[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = -det;
    }
    det *= M[c][c];
    for (int r = c + 1; r < N; ++r) {
      if (M[r][c] == 0) continue;
      Rational f = M[r][c] / M[c][c];
      for (int k = c; k < N; ++k) M[r][k] -= f * M[c][k];
    }
  }
  return det;
}

PolyQ random_poly(std::mt19937& rng, int deg, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = d(rng);
  if (c.back() == 0) c.back() = 1;
  return PolyQ(c);
}

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(to_fraction_string(parse_rational("-4/6")), "-2/3");
  EXPECT_EQ(to_fraction_string(parse_rational("7")), "7/1");
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
}

TEST(PolyGcd, Examples) {
  EXPECT_EQ(poly_gcd(PolyQ{-1, 0, 1}, PolyQ{-1, 0, 0, 1}), (PolyQ{-1, 1}));
  EXPECT_EQ(poly_gcd(PolyQ{1, 0, 1}, PolyQ{-2, 0, 1}), (PolyQ{1}));
  EXPECT_EQ(poly_gcd(PolyQ{}, PolyQ{3, 3}), (PolyQ{1, 1}));
}

TEST(PolyResultant, Examples) {
  EXPECT_EQ(poly_resultant(PolyQ{-2, 1}, PolyQ{-3, 1}), Rational(-1));
  EXPECT_EQ(poly_resultant(PolyQ{1, 0, 1}, PolyQ{1, 0, 1}), Rational(0));
  EXPECT_EQ(poly_resultant(PolyQ{-2, 0, 1}, PolyQ{-3, 0, 1}), Rational(1));
  EXPECT_THROW(poly_resultant(PolyQ{}, PolyQ{1, 1}), DomainError);
}

TEST(PolyDiscriminant, Examples) {
  EXPECT_EQ(poly_discriminant(PolyQ{-1, -3, 0, 1}), Rational(81));
  EXPECT_EQ(poly_discriminant(PolyQ{-2, 0, 0, 1}), Rational(-108));
  EXPECT_EQ(poly_discriminant(PolyQ{1, 0, 1}), Rational(-4));
  EXPECT_THROW(poly_discriminant(PolyQ{1, 1}), DomainError);
}

TEST(FactorOverQ, Examples) {
  auto f = factor_over_Q(PolyQ{-1, 0, 0, 1});
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].poly, (PolyQ{-1, 1}));
  EXPECT_EQ(f.factors[1].poly, (PolyQ{1, 1, 1}));

  auto g = factor_over_Q(PolyQ{-2, 0, 0, 1});
  ASSERT_EQ(g.factors.size(), 1u);
  EXPECT_EQ(g.factors[0].poly, (PolyQ{-2, 0, 0, 1}));

  auto h = factor_over_Q(PolyQ{0, 12, 0, 0, 3});
  EXPECT_EQ(h.unit, Rational(3));
  ASSERT_EQ(h.factors.size(), 2u);
  EXPECT_EQ(h.factors[0].poly, (PolyQ{0, 1}));
  EXPECT_EQ(h.factors[1].poly, (PolyQ{4, 0, 0, 1}));
}

TEST(FactorOverQ, Multiplicities) {
  PolyQ f = PolyQ{-1, 1} * PolyQ{-1, 1} * PolyQ{1, 0, 1} * PolyQ{2, 0, 1} * make_rational(5, 7);
  auto fac = factor_over_Q(f);
  EXPECT_EQ(fac.expand(), f);
  ASSERT_EQ(fac.factors.size(), 3u);
  EXPECT_EQ(fac.factors[0].multiplicity, 2);
}

TEST(FactorOverQ, SwinnertonDyerStyle) {
  // x^8 - 40x^6 + 352x^4 - 960x^2 + 576 = minpoly of sqrt2+sqrt3+sqrt5: splits
  // into many factors modulo every prime but is irreducible.
  PolyQ f{576, 0, -960, 0, 352, 0, -40, 0, 1};
  EXPECT_TRUE(is_irreducible_over_Q(f));
  PolyQ g = f * PolyQ{-2, 0, 1};
  auto fac = factor_over_Q(g);
  ASSERT_EQ(fac.factors.size(), 2u);
  EXPECT_EQ(fac.expand(), g);
}

TEST(FactorOverQ, DegreeCap) {
  FactorOptions opts;
  opts.degree_cap = 4;
  EXPECT_THROW(factor_over_Q(PolyQ{-1, 0, 0, 0, 0, 1}, opts), DegreeCapExceeded);
}

TEST(Cyclotomic, Examples) {
  EXPECT_EQ(cyclotomic_poly(5), (PolyQ{1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclotomic_poly(1), (PolyQ{-1, 1}));
  EXPECT_EQ(cyclotomic_poly(12), (PolyQ{1, 0, -1, 0, 1}));
  EXPECT_THROW(cyclotomic_poly(0), DomainError);
}

TEST(Cyclotomic, DegreeIsTotient) {
  for (int m = 1; m <= 30; ++m) {
    EXPECT_EQ(cyclotomic_poly(m).degree(), euler_phi(m)) << m;
    EXPECT_TRUE(is_irreducible_over_Q(cyclotomic_poly(m))) << m;
  }
}

TEST(RationalRoots, Examples) {
  EXPECT_EQ(rational_roots(PolyQ{0, -1, 0, 1}),
            (std::vector<Rational>{Rational(-1), Rational(0), Rational(1)}));
  EXPECT_TRUE(rational_roots(PolyQ{-2, 0, 0, 1}).empty());
  EXPECT_EQ(rational_roots(PolyQ{-1, -1, 2}), (std::vector<Rational>{make_rational(-1, 2), Rational(1)}));
}

TEST(PolyProperties, GcdDividesBoth) {
  std::mt19937 rng(7);
  for (int it = 0; it < 100; ++it) {
    PolyQ c = random_poly(rng, it % 3, 3);
    PolyQ a = random_poly(rng, 1 + it % 5, 5) * c, b = random_poly(rng, 1 + it % 4, 5) * c;
    PolyQ g = poly_gcd(a, b);
    EXPECT_TRUE(g.is_monic());
    EXPECT_TRUE((a % g).is_zero());
    EXPECT_TRUE((b % g).is_zero());
    auto eg = poly_ext_gcd(a, b);
    EXPECT_EQ(eg.gcd, g);
    EXPECT_EQ(eg.s * a + eg.t * b, g);
  }
}

TEST(PolyProperties, ResultantVanishesIffCommonFactor) {
  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    PolyQ a = random_poly(rng, 1 + it % 8, 4), b = random_poly(rng, 1 + (it / 8) % 8, 4);
    if (it % 3 == 0) {
      PolyQ c = random_poly(rng, 1, 2);
      a *= c;
      b *= c;
    }
    if (a.degree() > 8 || b.degree() > 8) continue;
    Rational r = poly_resultant(a, b);
    EXPECT_EQ(r == 0, poly_gcd(a, b).degree() >= 1);
    EXPECT_EQ(r, sylvester_resultant(a, b));
  }
}

TEST(PolyProperties, FactorReproducesRandomProducts) {
  std::mt19937 rng(3);
  std::vector<PolyQ> irreducibles = {PolyQ{-2, 0, 0, 1}, PolyQ{1, 1, 0, 1}, PolyQ{-1, -3, 0, 1},
                                     PolyQ{1, 0, 1},     PolyQ{-5, 0, 1},   PolyQ{3, 2},
                                     PolyQ{-1, -1, 0, 0, 0, 1}, cyclotomic_poly(7),
                                     PolyQ{576, 0, -960, 0, 352, 0, -40, 0, 1}};
  std::uniform_int_distribution<std::size_t> pick(0, irreducibles.size() - 1);
  for (int it = 0; it < 100; ++it) {
    PolyQ f = PolyQ::constant(make_rational(1 + it % 4, 1 + it % 3));
    int k = 1 + it % 4;
    for (int i = 0; i < k; ++i) f *= irreducibles[pick(rng)];
    auto fac = factor_over_Q(f);
    EXPECT_EQ(fac.expand(), f);
    for (const auto& pf : fac.factors) {
      EXPECT_TRUE(pf.poly.is_monic());
      EXPECT_TRUE(is_irreducible_over_Q(pf.poly));
    }
  }
}
