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


#include "torsiongate/factor.hpp"

#include <algorithm>
#include <random>

#include "torsiongate/errors.hpp"
#include "torsiongate/modp.hpp"

namespace torsiongate {

namespace {

using ZPoly = IntPoly;

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

void zmod(ZPoly& f, const Integer& m) {
  for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(f);
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zmod(r, m);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zmod(r, m);
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  zmod(r, m);
  return r;
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> zdivmod_monic(const ZPoly& a, const ZPoly& b, const Integer& m) {
  int db = zdeg(b);
  if (zdeg(a) < db) return {ZPoly{}, a};
  ZPoly r(a), q(static_cast<std::size_t>(zdeg(a) - db) + 1);
  for (int i = zdeg(a); i >= db; --i) {
    Integer t = r[i];
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    if (t == 0) continue;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
  }
  r.resize(static_cast<std::size_t>(db));
  zmod(r, m);
  zmod(q, m);
  return {q, r};
}

ZPoly from_modp(const modp::Poly& f) {
  ZPoly r;
  r.reserve(f.size());
  for (auto c : f) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

modp::Poly to_modp(const ZPoly& f, std::uint64_t p) {
  modp::Poly r;
  r.reserve(f.size());
  for (const auto& c : f) r.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  modp::trim(r);
  return r;
}

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic;
// on return everything holds modulo m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m2) {
  ZPoly e = zsub(f, zmul(g, h, m2), m2);
  auto [q, r] = zdivmod_monic(zmul(s, e, m2), h, m2);
  ZPoly gs = zadd(zadd(g, zmul(t, e, m2), m2), zmul(q, g, m2), m2);
  ZPoly hs = zadd(h, r, m2);
  ZPoly b = zsub(zadd(zmul(s, gs, m2), zmul(t, hs, m2), m2), ZPoly{Integer(1)}, m2);
  auto [c, d] = zdivmod_monic(zmul(s, b, m2), hs, m2);
  s = zsub(s, d, m2);
  t = zsub(zsub(t, zmul(t, b, m2), m2), zmul(c, gs, m2), m2);
  g = std::move(gs);
  h = std::move(hs);
}

// Lifts f = lc(f) * prod(factors) mod p to modulus p^(2^steps); factors are
// monic mod p and the results monic mod the final modulus.
void multi_lift(const ZPoly& f, const std::vector<modp::Poly>& factors, std::uint64_t p, int steps,
                std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    Integer M = p;
    for (int i = 0; i < steps; ++i) M *= M;
    // f / lc(f) mod M
    Integer lc = f.back(), inv;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
    ZPoly r(f);
    for (auto& c : r) c *= inv;
    zmod(r, M);
    out.push_back(r);
    return;
  }
  std::size_t half = factors.size() / 2;
  std::vector<modp::Poly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<modp::Poly> right(factors.begin() + static_cast<long>(half), factors.end());
  modp::Poly g0{mpz_fdiv_ui(f.back().get_mpz_t(), p)}, h0{1};
  for (auto& u : left) g0 = modp::mul(g0, u, p);
  for (auto& u : right) h0 = modp::mul(h0, u, p);
  modp::Poly gg, s0, t0;
  modp::ext_gcd(g0, h0, p, gg, s0, t0);
  ZPoly g = from_modp(g0), h = from_modp(h0), s = from_modp(s0), t = from_modp(t0);
  Integer m = p;
  for (int i = 0; i < steps; ++i) {
    m *= m;
    hensel_step(f, g, h, s, t, m);
  }
  multi_lift(g, left, p, steps, out);
  multi_lift(h, right, p, steps, out);
}

Integer symmetric(const Integer& c, const Integer& M, const Integer& halfM) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
  if (r > halfM) r -= M;
  return r;
}

ZPoly prim(ZPoly f) {
  Integer c = int_content(f);
  if (f.back() < 0) c = -c;
  for (auto& v : f) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  return f;
}

// Exact division in Z[x]; returns false if b does not divide a.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& quot) {
  int da = zdeg(a), db = zdeg(b);
  if (da < db) return false;
  ZPoly r(a), q(static_cast<std::size_t>(da - db) + 1);
  for (int i = da; i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer t;
    mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), b.back().get_mpz_t());
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
  }
  for (int i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  quot = std::move(q);
  return true;
}

// Factors a squarefree primitive integer polynomial with positive leading
// coefficient and nonzero constant term.
std::vector<ZPoly> zassenhaus(const ZPoly& F, const FactorOptions& opts) {
  int n = zdeg(F);
  if (n <= 1) return {F};
  const Integer& lcF = F.back();

  // Prime selection: fewest modular factors among the first good primes.
  std::uint64_t best_p = 0;
  std::size_t best_count = static_cast<std::size_t>(n) + 1;
  int tried = 0;
  for (std::uint64_t p = 3; tried < opts.primes_to_try; p = modp::next_prime(p)) {
    if (mpz_fdiv_ui(lcF.get_mpz_t(), p) == 0) continue;
    modp::Poly fp = modp::monic(to_modp(F, p), p);
    if (!modp::is_squarefree(fp, p)) continue;
    ++tried;
    std::size_t count = modp::factor_degrees(fp, p).size();
    if (count < best_count) {
      best_count = count;
      best_p = p;
    }
    if (count == 1) return {F};
  }
  std::uint64_t p = best_p;
  std::mt19937_64 rng(0x5eed + p);
  std::vector<modp::Poly> mod_factors = modp::factor_squarefree(modp::monic(to_modp(F, p), p), p, rng);

  // Coefficients of l * G for any factor G are bounded by |l| 2^n ||F||_2.
  Integer norm2 = 0;
  for (const auto& c : F) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = abs(lcF) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n + 1));
  int steps = 0;
  Integer M = p;
  while (M <= bound) {
    M *= M;
    ++steps;
  }
  std::vector<ZPoly> lifted;
  multi_lift(F, mod_factors, p, steps, lifted);
  Integer halfM = M / 2;

  std::vector<ZPoly> result;
  ZPoly rest = F;
  std::vector<ZPoly> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      Integer l = rest.back();
      // Constant term prefilter.
      Integer c0 = l;
      for (auto i : idx) c0 = symmetric(c0 * (pool[i].empty() ? Integer(0) : pool[i][0]), M, halfM);
      Integer target = l * rest.front();
      if (c0 != 0 && mpz_divisible_p(target.get_mpz_t(), c0.get_mpz_t())) {
        ZPoly G{l};
        for (auto i : idx) G = zmul(G, pool[i], M);
        for (auto& c : G) c = symmetric(c, M, halfM);
        ztrim(G);
        G = prim(G);
        ZPoly quot;
        if (zdivides(rest, G, quot)) {
          result.push_back(G);
          rest = prim(quot);
          std::vector<ZPoly> np;
          for (std::size_t i = 0, k = 0; i < pool.size(); ++i) {
            if (k < idx.size() && idx[k] == i) {
              ++k;
              continue;
            }
            np.push_back(pool[i]);
          }
          pool = std::move(np);
          found = true;
          break;
        }
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == pool.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (zdeg(rest) > 0) result.push_back(rest);
  return result;
}

}  // namespace

bool poly_less(const PolyQ& a, const PolyQ& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    Rational x = a.coeff(i), y = b.coeff(i);
    if (x != y) return x < y;
  }
  return false;
}

PolyQ Factorization::expand() const {
  PolyQ r = PolyQ::constant(unit);
  for (const auto& f : factors)
    for (int i = 0; i < f.multiplicity; ++i) r *= f.poly;
  return r;
}

Factorization factor_over_Q(const PolyQ& f, const FactorOptions& opts) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  Factorization out;
  out.unit = f.lc();
  if (f.degree() < 1) return out;
  for (const auto& [g, mult] : squarefree_decomposition(f)) {
    if (g.degree() > opts.degree_cap)
      throw DegreeCapExceeded("factorization over Q", g.degree(), opts.degree_cap);
    PolyQ h = g;
    if (h.coeff(0) == 0) {
      out.factors.push_back({PolyQ{0, 1}, mult});
      h = exact_quotient(h, PolyQ{0, 1});
    }
    if (h.degree() < 1) continue;
    if (h.degree() == 1) {
      out.factors.push_back({h.monic(), mult});
      continue;
    }
    for (const auto& z : zassenhaus(primitive_part(h).second, opts))
      out.factors.push_back({to_polyq(z).monic(), mult});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return poly_less(a.poly, b.poly);
  });
  return out;
}

bool is_irreducible_over_Q(const PolyQ& f, const FactorOptions& opts) {
  if (f.degree() < 1) return false;
  auto fac = factor_over_Q(f, opts);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

}  // namespace torsiongate
