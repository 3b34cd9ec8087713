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


#ifndef TORSIONGATE_GALOIS_HPP
#define TORSIONGATE_GALOIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "torsiongate/ellcurve.hpp"
#include "torsiongate/finitegroups.hpp"
#include "torsiongate/numfield.hpp"

namespace torsiongate {

/// Image of the mod-ell cyclotomic character; (Z/ell)^* is cyclic, so the order pins it down.
struct CycImage {
  int ell = 2;
  long order = 1;
  bool is_pm1() const { return order == 2; }
  bool is_trivial() const { return order == 1; }
};

CycImage cyclotomic_character_image(const NumberField& K, int ell, const FieldOptions& opts = {});

/// kind is one of cyclic_C3, S3, reducible, galois, non_galois, certified_Sn, unknown.
struct GaloisVerdict {
  std::string kind;
  nlohmann::json witness;
};

/// Monic cubic over K: reducible, C3 (square discriminant) or S3.
GaloisVerdict cubic_galois_group(const PolyNF& f, const FieldOptions& opts = {});
GaloisVerdict cubic_galois_group(const PolyQ& f, const FieldOptions& opts = {});

/// g irreducible of prime degree over its coefficient field: does g split in K[x]/(g)?
bool is_galois_prime_degree(const PolyNF& g, const FieldOptions& opts = {});
bool is_galois_prime_degree(const PolyQ& g, const FieldOptions& opts = {});

struct DedekindPattern {
  std::uint64_t prime;
  std::vector<int> degrees;  // descending
};
struct DedekindResult {
  std::vector<DedekindPattern> patterns;
  std::vector<std::uint64_t> skipped;  // primes dividing the leading coefficient or discriminant
};

/// First `count` primes not dividing the leading coefficient or discriminant of f.
std::vector<std::uint64_t> default_dedekind_primes(const PolyQ& f, int count = 25);
DedekindResult dedekind_patterns(const PolyQ& f, const std::vector<std::uint64_t>& primes);
inline DedekindResult dedekind_patterns(const PolyQ& f) { return dedekind_patterns(f, default_dedekind_primes(f)); }

/// Galois action on E[ell] in the basis (P, Q), one matrix per element of Gal(K(E[ell])/K).
/// Row convention: sigma(P) = aP + bQ and sigma(Q) = cP + dQ give (a b; c d).
struct ModEllImage {
  int ell = 2;
  MatGroup group;
  NumberField field;  // K(E[ell])
  CurvePoint P, Q;    // basis over field
  std::uint64_t split_prime = 0;
};

ModEllImage mod_ell_image(const Curve& E, int ell, const TorsionOptions& opts = {});

}  // namespace torsiongate

#endif  // TORSIONGATE_GALOIS_HPP
