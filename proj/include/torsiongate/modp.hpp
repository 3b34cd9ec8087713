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

#ifndef TORSIONGATE_MODP_HPP
#define TORSIONGATE_MODP_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "torsiongate/poly.hpp"

namespace torsiongate::modp {

/// Polynomials over F_p for word-size primes (p < 2^31), ascending
/// coefficients, trimmed.
using Poly = std::vector<std::uint64_t>;

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);

void trim(Poly& f);
inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly scale(const Poly& a, std::uint64_t c, std::uint64_t p);
/// Returns {q, r}; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p);
Poly rem(const Poly& a, const Poly& b, std::uint64_t p);
Poly monic(const Poly& a, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
/// s*a + t*b = g (monic).
void ext_gcd(const Poly& a, const Poly& b, std::uint64_t p, Poly& g, Poly& s, Poly& t);
Poly derivative(const Poly& a, std::uint64_t p);
/// base^e mod m
Poly powmod(const Poly& base, const Integer& e, const Poly& m, std::uint64_t p);
std::uint64_t eval(const Poly& f, std::uint64_t x, std::uint64_t p);

/// Reduction of a rational polynomial; nullopt when p divides a denominator.
std::optional<Poly> reduce(const PolyQ& f, std::uint64_t p);
/// Reduction of a rational; nullopt when p divides the denominator.
std::optional<std::uint64_t> reduce(const Rational& q, std::uint64_t p);

bool is_squarefree(const Poly& f, std::uint64_t p);

/// Distinct-degree factorization of a monic squarefree f: pairs (d, product
/// of all irreducible factors of degree d).
std::vector<std::pair<int, Poly>> distinct_degree(const Poly& f, std::uint64_t p);

/// Complete factorization of a monic squarefree f into monic irreducibles,
/// sorted. Requires p odd. The generator only affects the search path.
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t p, std::mt19937_64& rng);

/// Degrees of the irreducible factors of a monic squarefree f (works for p = 2).
std::vector<int> factor_degrees(const Poly& f, std::uint64_t p);

/// Roots in F_p of a nonzero f, ascending, without multiplicity.
std::vector<std::uint64_t> roots(const Poly& f, std::uint64_t p, std::mt19937_64& rng);

}  // namespace torsiongate::modp

#endif  // TORSIONGATE_MODP_HPP
