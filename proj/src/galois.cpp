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


#include "torsiongate/galois.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "torsiongate/errors.hpp"
#include "torsiongate/factor.hpp"
#include "torsiongate/modp.hpp"

namespace torsiongate {

CycImage cyclotomic_character_image(const NumberField& K, int ell, const FieldOptions& opts) {
  if (ell < 2 || !modp::is_prime(static_cast<std::uint64_t>(ell))) throw DomainError("ell must be prime");
  PolyQ phi = cyclotomic_poly(ell);
  CycImage c{ell, 1};
  auto facs = factor_over_nf(PolyNF::from_q(K, phi), opts);
  c.order = facs.front().poly.degree();
  return c;
}

namespace {

FieldElement cubic_discriminant(const PolyNF& f) {
  // x^3 + a x^2 + b x + c
  FieldElement a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
  return a * a * b * b - b * b * b * Rational(4) - a * a * a * c * Rational(4) - c * c * Rational(27) +
         a * b * c * Rational(18);
}

void require_irreducible_prime_degree(const PolyNF& g, const FieldOptions& opts) {
  int n = g.degree();
  if (n < 2 || !modp::is_prime(static_cast<std::uint64_t>(n))) throw DomainError("degree must be prime");
  auto facs = factor_over_nf(g, opts);
  if (facs.size() != 1 || facs.front().multiplicity != 1)
    throw DomainError("polynomial is reducible: factor " + facs.front().poly.to_string());
}

}  // namespace

GaloisVerdict cubic_galois_group(const PolyNF& f, const FieldOptions& opts) {
  if (f.degree() != 3) throw DomainError("cubic_galois_group needs a cubic");
  if (!f.is_monic()) throw DomainError("cubic_galois_group needs a monic cubic");
  auto roots = roots_in_field(f, opts);
  if (!roots.empty()) return {"reducible", {{"root", roots.front().to_string()}}};
  FieldElement d = cubic_discriminant(f);
  if (auto s = is_square(d, opts))
    return {"cyclic_C3", {{"discriminant", d.to_string()}, {"sqrt_discriminant", s->to_string()}}};
  return {"S3", {{"discriminant", d.to_string()}, {"discriminant_is_square", false}}};
}

GaloisVerdict cubic_galois_group(const PolyQ& f, const FieldOptions& opts) {
  return cubic_galois_group(PolyNF::from_q(NumberField(), f), opts);
}

bool is_galois_prime_degree(const PolyNF& g, const FieldOptions& opts) {
  require_irreducible_prime_degree(g, opts);
  if (g.degree() == 2) return true;
  Compositum c = adjoin_root(g.monic(), opts);
  auto roots = roots_in_field(c.embedding(g.monic()), opts);
  return static_cast<int>(roots.size()) == g.degree();
}

bool is_galois_prime_degree(const PolyQ& g, const FieldOptions& opts) {
  return is_galois_prime_degree(PolyNF::from_q(NumberField(), g), opts);
}

std::vector<std::uint64_t> default_dedekind_primes(const PolyQ& f, int count) {
  Rational disc = poly_discriminant(f);
  IntPoly z = primitive_part(f).second;
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; static_cast<int>(out.size()) < count; p = modp::next_prime(p)) {
    if (mpz_divisible_ui_p(disc.get_num_mpz_t(), p) || mpz_divisible_ui_p(z.back().get_mpz_t(), p)) continue;
    out.push_back(p);
  }
  return out;
}

DedekindResult dedekind_patterns(const PolyQ& f, const std::vector<std::uint64_t>& primes) {
  if (f.degree() < 1) throw DomainError("dedekind_patterns needs a non-constant polynomial");
  Rational disc = poly_discriminant(f);
  IntPoly z = primitive_part(f).second;
  DedekindResult r;
  for (auto p : primes) {
    if (!modp::is_prime(p) || disc == 0 || mpz_divisible_ui_p(disc.get_num_mpz_t(), p) ||
        mpz_divisible_ui_p(z.back().get_mpz_t(), p)) {
      r.skipped.push_back(p);
      continue;
    }
    modp::Poly fp;
    for (const auto& c : z) fp.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    auto degs = modp::factor_degrees(fp, p);
    std::sort(degs.rbegin(), degs.rend());
    r.patterns.push_back({p, degs});
  }
  return r;
}

// -- mod-ell image ------------------------------------------------------------------------------

namespace {

struct PointModP {
  bool inf = true;
  std::uint64_t x = 0, y = 0;
  bool operator==(const PointModP& o) const { return inf == o.inf && (inf || (x == o.x && y == o.y)); }
  bool operator<(const PointModP& o) const { return std::tie(inf, x, y) < std::tie(o.inf, o.x, o.y); }
};

PointModP add_mod_p(const PointModP& P, const PointModP& Q, std::uint64_t A, std::uint64_t p) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  std::uint64_t lam;
  if (P.x == Q.x) {
    if ((P.y + Q.y) % p == 0) return {};
    std::uint64_t num = (3 * modp::mul(P.x, P.x, p) + A) % p;
    lam = modp::mul(num, modp::inv(2 * P.y % p, p), p);
  } else {
    lam = modp::mul((Q.y + p - P.y) % p, modp::inv((Q.x + p - P.x) % p, p), p);
  }
  std::uint64_t x3 = (modp::mul(lam, lam, p) + 2 * p - P.x - Q.x) % p;
  std::uint64_t y3 = (modp::mul(lam, (P.x + p - x3) % p, p) + p - P.y) % p;
  return {false, x3, y3};
}

// Reduction of a field element at the root r of the scaled defining polynomial mod p.
std::optional<std::uint64_t> reduce_at(const FieldElement& a, std::uint64_t p, std::uint64_t r) {
  std::uint64_t den = mpz_fdiv_ui(a.den().get_mpz_t(), p);
  if (den == 0) return std::nullopt;
  modp::Poly num;
  for (const auto& c : a.scaled_num()) num.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  modp::trim(num);
  return modp::mul(modp::eval(num, r, p), modp::inv(den, p), p);
}

}  // namespace

ModEllImage mod_ell_image(const Curve& E, int ell, const TorsionOptions& opts) {
  if (ell != 2 && ell != 3) throw DomainError("mod_ell_image supports ell in {2, 3}");
  const NumberField& K = E.field();
  TorsionBasis B = torsion_basis(E, ell, opts);
  ModEllImage out;
  out.ell = ell;
  out.field = B.field;
  out.P = B.P;
  out.Q = B.Q;
  const NumberField& L = B.field;
  int rel = L.degree() / K.degree();
  if (rel == 1) {
    out.group = mat_closure(ell, {});
    return out;
  }
  const auto& d = L.data();
  FieldElement thetaK = (*B.embedding)(K.generator());
  std::vector<FieldElement> tracked{B.P.x, B.P.y, B.Q.x, B.Q.y, B.curve.short_a(), B.curve.short_b(), thetaK};
  std::mt19937_64 rng(11);
  for (std::uint64_t p = 5; p < 4000000; p = modp::next_prime(p)) {
    if (p == static_cast<std::uint64_t>(ell)) continue;
    if (mpz_divisible_ui_p(d.discriminant.get_num_mpz_t(), p) || mpz_divisible_ui_p(d.discriminant.get_den_mpz_t(), p) ||
        mpz_divisible_ui_p(d.scale.get_mpz_t(), p))
      continue;
    if (std::any_of(tracked.begin(), tracked.end(),
                    [p](const FieldElement& a) { return mpz_divisible_ui_p(a.den().get_mpz_t(), p); }))
      continue;
    modp::Poly m;
    for (const auto& c : d.scaled_poly) m.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    modp::trim(m);
    // Cheap complete-splitting test: x^p = x mod m.
    if (modp::powmod({0, 1}, Integer(static_cast<unsigned long>(p)), m, p) != modp::Poly{0, 1}) continue;
    auto roots = modp::roots(m, p, rng);
    if (static_cast<int>(roots.size()) != L.degree()) continue;
    std::uint64_t r0 = roots.front();
    std::uint64_t A = *reduce_at(B.curve.short_a(), p, r0), Bc = *reduce_at(B.curve.short_b(), p, r0);
    if ((4 * modp::mul(modp::mul(A, A, p), A, p) + 27 * modp::mul(Bc, Bc, p)) % p == 0) continue;
    auto red = [&](const CurvePoint& X, std::uint64_t r) {
      return PointModP{false, *reduce_at(X.x, p, r), *reduce_at(X.y, p, r)};
    };
    PointModP P0 = red(B.P, r0), Q0 = red(B.Q, r0);
    std::map<PointModP, std::pair<int, int>> coords;
    PointModP iP{};
    for (int i = 0; i < ell; ++i) {
      PointModP S = iP;
      for (int j = 0; j < ell; ++j) {
        coords[S] = {i, j};
        S = add_mod_p(S, Q0, A, p);
      }
      iP = add_mod_p(iP, P0, A, p);
    }
    if (static_cast<int>(coords.size()) != ell * ell) continue;
    std::uint64_t k0 = *reduce_at(thetaK, p, r0);
    std::vector<GL2Elt> mats;
    for (auto r : roots) {
      if (*reduce_at(thetaK, p, r) != k0) continue;
      auto ip = coords.find(red(B.P, r));
      auto iq = coords.find(red(B.Q, r));
      if (ip == coords.end() || iq == coords.end()) throw Error("internal: conjugate basis point not in E[ell]");
      mats.push_back(GL2Elt::make(ell, ip->second.first, ip->second.second, iq->second.first, iq->second.second));
    }
    if (static_cast<int>(mats.size()) != rel) throw Error("internal: wrong number of K-embeddings");
    out.group = mat_closure(ell, mats);
    if (static_cast<int>(out.group.order()) != rel) throw Error("internal: Galois matrices do not form a group");
    out.group = MatGroup(out.group.elements(), mats);
    out.split_prime = p;
    return out;
  }
  throw Error("mod_ell_image: no completely split prime found below 4000000");
}

}  // namespace torsiongate
