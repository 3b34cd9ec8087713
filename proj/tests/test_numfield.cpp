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
#include "torsiongate/numfield.hpp"

using namespace torsiongate;

namespace {

NumberField gaussian() { return nf_create(PolyQ{1, 0, 1}, "Q(i)"); }
NumberField cube_root2() { return nf_create(PolyQ{-2, 0, 0, 1}); }

FieldElement elem(const NumberField& K, std::vector<long> c) {
  std::vector<Rational> v(static_cast<std::size_t>(K.degree()));
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = c[i];
  return K.from_coords(v);
}

// Evaluates f at a directly from coordinates, independent of PolyNF.
FieldElement eval_q(const PolyQ& f, const FieldElement& a) {
  FieldElement acc = a.field().zero(), pw = a.field().one();
  for (const auto& c : f.coeffs()) {
    acc += pw * c;
    pw *= a;
  }
  return acc;
}

}  // namespace

TEST(NfCreate, Examples) {
  EXPECT_EQ(gaussian().degree(), 2);
  EXPECT_TRUE(nf_create(PolyQ{-1, 1}).is_rational());
  EXPECT_THROW(nf_create(PolyQ{0, -1, 1}), DomainError);
  EXPECT_THROW(nf_create(PolyQ{1, 0, 2}), DomainError);
  FieldOptions small;
  small.degree_cap = 2;
  EXPECT_THROW(nf_create(PolyQ{-2, 0, 0, 1}, "", small), DegreeCapExceeded);
}


TEST(NfInvert, Examples) {
  NumberField K = gaussian();
  EXPECT_EQ(nf_invert(elem(K, {1, 1})), K.from_coords({make_rational(1, 2), make_rational(-1, 2)}));
  NumberField Q;
  EXPECT_EQ(nf_invert(Q.from_rational(make_rational(3, 2))), Q.from_rational(make_rational(2, 3)));
  NumberField C = cube_root2();
  EXPECT_EQ(nf_invert(C.generator()), C.from_coords({0, 0, make_rational(1, 2)}));
  EXPECT_THROW(nf_invert(K.zero()), DomainError);
}

TEST(MinimalPolynomial, Examples) {
  NumberField C = cube_root2();
  EXPECT_EQ(minimal_polynomial(C.generator()), (PolyQ{-2, 0, 0, 1}));
  EXPECT_EQ(minimal_polynomial(C.from_rational(make_rational(1, 2))),
            PolyQ::linear_root(make_rational(1, 2)));
  EXPECT_EQ(minimal_polynomial(C.generator() * C.generator()), (PolyQ{-4, 0, 0, 1}));
}

TEST(FactorOverNf, Examples) {
  NumberField K = gaussian();
  auto f = factor_over_nf(PolyNF::from_q(K, PolyQ{1, 0, 1}));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].poly.degree(), 1);
  EXPECT_EQ(f[0].poly * f[1].poly, PolyNF::from_q(K, PolyQ{1, 0, 1}));

  NumberField C = cube_root2();
  auto g = factor_over_nf(PolyNF::from_q(C, PolyQ{-2, 0, 0, 1}));
  ASSERT_EQ(g.size(), 2u);
  FieldElement t = C.generator();
  EXPECT_EQ(g[0].poly, PolyNF(C, {-t, C.one()}));
  EXPECT_EQ(g[1].poly, PolyNF(C, {t * t, t, C.one()}));

  NumberField S5 = nf_create(PolyQ{-5, 0, 1});
  auto h = factor_over_nf(PolyNF::from_q(S5, cyclotomic_poly(5)));
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h[0].poly.degree(), 2);
  EXPECT_EQ(h[1].poly.degree(), 2);
}

TEST(RootsInField, Examples) {
  NumberField C = cube_root2();
  auto r = roots_in_field(PolyQ{-2, 0, 0, 1}, C);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], C.generator());
  NumberField S2 = nf_create(PolyQ{-2, 0, 1});
  auto r2 = roots_in_field(PolyQ{-2, 0, 1}, S2);
  ASSERT_EQ(r2.size(), 2u);
  EXPECT_EQ(r2[0], -S2.generator());
  EXPECT_EQ(r2[1], S2.generator());
  NumberField Q;
  auto r3 = roots_in_field(PolyQ{0, -1, 0, 1}, Q);
  ASSERT_EQ(r3.size(), 3u);
  EXPECT_EQ(r3[0], Q.from_rational(-1));
}

TEST(IsSquare, Examples) {
  NumberField K = gaussian();
  auto w = is_square(K.from_rational(-4));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w * *w, K.from_rational(-4));
  NumberField Q;
  EXPECT_FALSE(is_square(Q.from_rational(2)));
  NumberField S5 = nf_create(PolyQ{-5, 0, 1});
  auto w5 = is_square(S5.from_rational(5));
  ASSERT_TRUE(w5);
  EXPECT_EQ(*w5 * *w5, S5.from_rational(5));
  EXPECT_EQ(*is_square(K.zero()), K.zero());
  // 2i = (1+i)^2
  auto w2 = is_square(elem(K, {0, 2}));
  ASSERT_TRUE(w2);
  EXPECT_FALSE(is_square(elem(K, {1, 1})));
}

TEST(Compositum, Examples) {
  NumberField K = gaussian();
  auto c = compositum(K, PolyQ{-2, 0, 1});
  EXPECT_EQ(c.field.degree(), 4);
  EXPECT_EQ(extension_degree(c.embedding), 2);
  EXPECT_EQ(c.root * c.root, c.field.from_rational(2));
  // i + sqrt2 has minimal polynomial x^4 - 2x^2 + 9.
  FieldElement alpha = c.embedding(K.generator()) + c.root;
  EXPECT_EQ(minimal_polynomial(alpha), (PolyQ{9, 0, -2, 0, 1}));

  auto z3 = compositum(NumberField(), PolyQ{1, 1, 1});
  EXPECT_EQ(z3.field.degree(), 2);

  NumberField S5 = nf_create(PolyQ{-5, 0, 1});
  auto z5 = compositum(S5, cyclotomic_poly(5));
  EXPECT_EQ(z5.field.degree(), 4);
  EXPECT_EQ(extension_degree(z5.embedding), 2);
  EXPECT_TRUE(eval_q(cyclotomic_poly(5), z5.root).is_zero());
}

TEST(ExtensionDegree, Examples) {
  NumberField K = gaussian();
  EXPECT_EQ(extension_degree(Embedding::from_rationals(K)), 2);
  EXPECT_EQ(extension_degree(Embedding::identity(K)), 1);
  EXPECT_THROW(Embedding(K, K, K.one()), DomainError);
}

TEST(NumfieldProperties, InverseRoundTrip) {
  std::vector<NumberField> fields = {
      gaussian(), cube_root2(), nf_create(PolyQ{1, 1, 0, 1}),
      nf_create(PolyQ{-1, -1, 0, 0, 0, 1}), nf_create(PolyQ({Rational(1), Rational(0), make_rational(1, 3), Rational(0), Rational(0), Rational(0), Rational(1)})),
      nf_create(PolyQ{1, -1, 1, -1, 1})};
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-9, 9);
  int count = 0;
  for (int it = 0; count < 100; ++it) {
    const NumberField& K = fields[static_cast<std::size_t>(it) % fields.size()];
    std::vector<Rational> c(static_cast<std::size_t>(K.degree()));
    for (auto& v : c) v = make_rational(d(rng), 1 + std::abs(d(rng)));
    FieldElement a = K.from_coords(c);
    if (a.is_zero()) continue;
    ++count;
    EXPECT_EQ(a * nf_invert(a), K.one());
    PolyQ mp = minimal_polynomial(a);
    EXPECT_TRUE(eval_q(mp, a).is_zero());
    EXPECT_EQ(K.degree() % mp.degree(), 0);
  }
}

TEST(NumfieldProperties, FactorProductAndIrreducibility) {
  NumberField C = cube_root2();
  NumberField K4 = nf_create(PolyQ{9, 0, -2, 0, 1});
  std::vector<std::pair<NumberField, PolyQ>> cases = {
      {C, PolyQ{-2, 0, 0, 1} * PolyQ{1, 0, 1}},
      {K4, PolyQ{1, 0, 1} * PolyQ{-2, 0, 1} * PolyQ{-3, 0, 1}},
      {K4, PolyQ{9, 0, -2, 0, 1}},
      {C, PolyQ{-4, 0, 0, 1} * PolyQ{-4, 0, 0, 1}},
  };
  for (auto& [K, f] : cases) {
    PolyNF F = PolyNF::from_q(K, f);
    auto facs = factor_over_nf(F);
    PolyNF prod(K, {K.one()});
    for (auto& pf : facs)
      for (int i = 0; i < pf.multiplicity; ++i) prod = prod * pf.poly;
    EXPECT_EQ(prod, F);
    for (auto& pf : facs) {
      if (pf.poly.degree() > 1) {
        EXPECT_TRUE(roots_in_field(pf.poly).empty()) << pf.poly;
      }
    }
  }
}

TEST(NumfieldProperties, RootsMatchBruteForce) {
  // Roots of f in L are exactly the linear factors found by factoring each
  // rational factor over L.
  NumberField K4 = nf_create(PolyQ{9, 0, -2, 0, 1});
  PolyQ f = PolyQ{1, 0, 1} * PolyQ{-2, 0, 1} * PolyQ{-3, 0, 1} * PolyQ{-5, 1};
  auto roots = roots_in_field(f, K4);
  EXPECT_EQ(roots.size(), 5u);
  for (const auto& r : roots) EXPECT_TRUE(eval_q(f, r).is_zero());
  std::size_t linear = 0;
  for (const auto& pf : factor_over_Q(f).factors)
    for (const auto& h : factor_over_nf(PolyNF::from_q(K4, pf.poly)))
      if (h.poly.degree() == 1) ++linear;
  EXPECT_EQ(linear, roots.size());
}

TEST(NumfieldProperties, IsSquareWitness) {
  NumberField K4 = nf_create(PolyQ{9, 0, -2, 0, 1});
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int it = 0; it < 20; ++it) {
    std::vector<Rational> c(4);
    for (auto& v : c) v = d(rng);
    FieldElement a = K4.from_coords(c);
    auto w = is_square(a * a);
    ASSERT_TRUE(w);
    EXPECT_EQ(*w * *w, a * a);
    auto w2 = is_square(a);
    if (w2) EXPECT_EQ(*w2 * *w2, a);
  }
}

TEST(NumfieldProperties, CompositumEmbedding) {
  NumberField C = cube_root2();
  auto c = compositum(C, PolyQ{1, 1, 1});
  EXPECT_EQ(c.field.degree(), 6);
  EXPECT_TRUE(eval_q(PolyQ{-2, 0, 0, 1}, c.embedding(C.generator())).is_zero());
  PolyQ mp = minimal_polynomial(c.root);
  EXPECT_TRUE((PolyQ{1, 1, 1} % mp).is_zero());
  // x^3 - 2 splits completely in the sextic field.
  EXPECT_EQ(roots_in_field(PolyQ{-2, 0, 0, 1}, c.field).size(), 3u);
  EXPECT_EQ(automorphisms(c.field).size(), 6u);
}

TEST(IsSquare, SquaresWithDenominators) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coef(-6, 6), dens(1, 9);
  for (const PolyQ& m : {PolyQ{4, 0, 0, 1}, PolyQ{1, 1, 1}, PolyQ{3, 0, 0, 0, 2}, PolyQ{-2, 0, 0, 0, 0, 1}}) {
    NumberField K = nf_create(m.monic());
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Rational> c;
      for (int i = 0; i < K.degree(); ++i) c.push_back(make_rational(coef(rng), dens(rng)));
      FieldElement a = K.from_coords(c);
      if (a.is_zero()) continue;
      auto w = is_square(a * a);
      ASSERT_TRUE(w) << a.to_string();
      EXPECT_EQ(*w * *w, a * a);
    }
  }
}
