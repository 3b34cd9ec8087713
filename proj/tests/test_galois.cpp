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

#include "torsiongate/errors.hpp"
#include "torsiongate/galois.hpp"

using namespace torsiongate;

namespace {

Curve short_q(long a, long b) { return Curve::over_Q({0, 0, 0, Rational(a), Rational(b)}); }

// Number of roots of f in F_p by trying every residue.
int brute_force_root_count(const PolyQ& f, std::uint64_t p) {
  auto fp = *modp::reduce(f, p);
  int c = 0;
  for (std::uint64_t x = 0; x < p; ++x)
    if (modp::eval(fp, x, p) == 0) ++c;
  return c;
}

}  // namespace

TEST(CubicGalois, Examples) {
  EXPECT_EQ(cubic_galois_group(PolyQ{-2, 0, 0, 1}).kind, "S3");
  EXPECT_EQ(cubic_galois_group(PolyQ{-2, 0, 0, 1}).witness["discriminant"], "-108");
  EXPECT_EQ(cubic_galois_group(PolyQ{-1, -3, 0, 1}).kind, "cyclic_C3");
  EXPECT_EQ(cubic_galois_group(PolyQ{0, -1, 0, 1}).kind, "reducible");
  EXPECT_THROW(cubic_galois_group(PolyQ{1, 0, 1}), DomainError);
  // Over Q(sqrt -3) the discriminant -108 becomes a square.
  NumberField K = nf_create(PolyQ{3, 0, 1});
  EXPECT_EQ(cubic_galois_group(PolyNF::from_q(K, PolyQ{-2, 0, 0, 1})).kind, "cyclic_C3");
}

TEST(CubicGalois, AgreesWithNormalityTest) {
  for (const PolyQ& f : {PolyQ{-2, 0, 0, 1}, PolyQ{1, 1, 0, 1}, PolyQ{-1, -3, 0, 1}, PolyQ{1, -2, -1, 1},
                         PolyQ{-3, 0, 0, 1}, PolyQ{-1, -1, 0, 1}}) {
    auto v = cubic_galois_group(f);
    ASSERT_NE(v.kind, "reducible");
    EXPECT_EQ(v.kind == "S3", !is_galois_prime_degree(f)) << f.to_string();
  }
}

TEST(PrimeDegreeGalois, Examples) {
  EXPECT_FALSE(is_galois_prime_degree(PolyQ{-2, 0, 0, 1}));
  EXPECT_TRUE(is_galois_prime_degree(PolyQ{-1, -3, 0, 1}));
  EXPECT_TRUE(is_galois_prime_degree(PolyQ{-2, 0, 1}));
  EXPECT_FALSE(is_galois_prime_degree(PolyQ{-1, -1, 0, 0, 0, 1}));
  // Real subfield of Q(zeta_11) is cyclic quintic.
  EXPECT_TRUE(is_galois_prime_degree(PolyQ{1, 3, -3, -4, 1, 1}));
  EXPECT_THROW(is_galois_prime_degree(PolyQ{0, -1, 0, 1}), DomainError);
  EXPECT_THROW(is_galois_prime_degree(PolyQ{1, 0, 0, 0, 1}), DomainError);
}

TEST(CyclotomicImage, OverQ) {
  for (int ell : {2, 3, 5, 7, 11, 13, 17, 19}) {
    auto c = cyclotomic_character_image(NumberField(), ell);
    EXPECT_EQ(c.order, ell - 1);
    EXPECT_EQ(c.is_trivial(), ell == 2);
  }
}

TEST(CyclotomicImage, OverQuadraticFields) {
  EXPECT_TRUE(cyclotomic_character_image(nf_create(PolyQ{1, 1, 1}), 3).is_trivial());
  auto c5 = cyclotomic_character_image(nf_create(PolyQ{-5, 0, 1}), 5);
  EXPECT_EQ(c5.order, 2);
  EXPECT_TRUE(c5.is_pm1());
  // Q(sqrt -7) is the quadratic subfield of Q(zeta_7): index 2 in (Z/7)^*.
  EXPECT_EQ(cyclotomic_character_image(nf_create(PolyQ{7, 0, 1}), 7).order, 3);
  EXPECT_EQ(cyclotomic_character_image(nf_create(PolyQ{1, 0, 1}), 7).order, 6);
  EXPECT_EQ(cyclotomic_character_image(nf_create(PolyQ{-2, 0, 0, 1}), 13).order, 12);
}

TEST(Dedekind, Examples) {
  auto r = dedekind_patterns(PolyQ{-2, 0, 0, 1}, {7});
  ASSERT_EQ(r.patterns.size(), 1u);
  // 2 is not a cube mod 7, so x^3 - 2 stays irreducible.
  EXPECT_EQ(r.patterns[0].degrees, std::vector<int>{3});
  EXPECT_EQ(dedekind_patterns(PolyQ{1, 0, 1}, {5}).patterns[0].degrees, (std::vector<int>{1, 1}));
  EXPECT_EQ(dedekind_patterns(PolyQ{1, 0, 1}, {7}).patterns[0].degrees, std::vector<int>{2});
  auto s = dedekind_patterns(PolyQ{-2, 0, 0, 1}, {2, 3, 5});
  EXPECT_EQ(s.skipped, (std::vector<std::uint64_t>{2, 3}));
}

TEST(Dedekind, LinearFactorsMatchRootCounts) {
  for (const PolyQ& f : {PolyQ{-1, -1, 0, 0, 0, 1}, PolyQ{-2, 0, 0, 1}, PolyQ{1, 1, 0, 1}, PolyQ{-1, -3, 0, 1}}) {
    auto primes = default_dedekind_primes(f);
    EXPECT_EQ(primes.size(), 25u);
    auto r = dedekind_patterns(f, primes);
    for (const auto& pat : r.patterns) {
      int ones = static_cast<int>(std::count(pat.degrees.begin(), pat.degrees.end(), 1));
      EXPECT_EQ(ones, brute_force_root_count(f, pat.prime)) << pat.prime;
      EXPECT_EQ(std::accumulate(pat.degrees.begin(), pat.degrees.end(), 0), f.degree());
    }
  }
  // A cyclic cubic only ever shows {1,1,1} or {3}.
  for (const auto& pat : dedekind_patterns(PolyQ{-1, -3, 0, 1}).patterns)
    EXPECT_TRUE(pat.degrees == std::vector<int>({1, 1, 1}) || pat.degrees == std::vector<int>{3});
}

TEST(ModEllImage, TwoTorsionExamples) {
  EXPECT_EQ(mod_ell_image(short_q(-1, 0), 2).group.order(), 1u);
  auto full = mod_ell_image(short_q(0, -2), 2);
  EXPECT_EQ(full.group.order(), 6u);
  EXPECT_EQ(full.group, gl2(2));
  auto c3 = mod_ell_image(short_q(-3, -1), 2);
  EXPECT_EQ(c3.group.order(), 3u);
  EXPECT_TRUE(is_abelian(c3.group));
}

TEST(ModEllImage, MatchesCubicGaloisGroupAtTwo) {
  std::map<std::string, std::size_t> order{{"S3", 6}, {"cyclic_C3", 3}};
  for (auto [a, b] : std::vector<std::pair<long, long>>{{0, -2}, {-3, -1}, {1, 1}, {-7, 7}, {0, 1}, {-1, 0}}) {
    auto im = mod_ell_image(short_q(a, b), 2);
    auto v = cubic_galois_group(PolyQ{b, a, 0, 1});
    if (v.kind == "reducible") {
      EXPECT_LE(im.group.order(), 2u);
    } else {
      EXPECT_EQ(im.group.order(), order[v.kind]);
    }
    EXPECT_EQ(static_cast<int>(im.group.order()), im.field.degree());
  }
}

TEST(ModEllImage, ThreeTorsionAndWeilDeterminant) {
  for (auto a : std::vector<std::array<long, 5>>{{0, 0, 0, 0, 1}, {0, 0, 0, 0, -2}, {0, 0, 0, -1, 0}, {0, 0, 1, -1, 0}}) {
    Curve E = Curve::over_Q({a[0], a[1], a[2], a[3], a[4]});
    for (int ell : {2, 3}) {
      auto im = mod_ell_image(E, ell);
      EXPECT_EQ(static_cast<long>(det_image(im.group).size()), cyclotomic_character_image(NumberField(), ell).order);
      // Matrices act on the basis as claimed.
      EXPECT_TRUE(on_curve(Curve::short_model(im.field, im.field.from_rational(E.short_a().to_rational()),
                                              im.field.from_rational(E.short_b().to_rational())),
                           im.P));
    }
  }
  // y^2 = x^3 + 1: K(E[3]) = Q(zeta_3, cube root of 4), degree 6.
  EXPECT_EQ(mod_ell_image(short_q(0, 1), 3).group.order(), 6u);
}

TEST(ModEllImage, RejectsLargeEll) { EXPECT_THROW(mod_ell_image(short_q(0, 1), 5), DomainError); }
