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

#ifndef TORSIONGATE_FACTOR_HPP
#define TORSIONGATE_FACTOR_HPP

#include <vector>

#include "torsiongate/poly.hpp"

namespace torsiongate {

struct FactorOptions {
  /// Squarefree inputs above this degree are refused with DegreeCapExceeded.
  int degree_cap = 128;
  /// Number of good primes tried when looking for the sparsest modular factorization.
  int primes_to_try = 12;
};

struct PolyFactor {
  PolyQ poly;  // monic, irreducible over Q
  int multiplicity = 1;
};

struct Factorization {
  Rational unit;  // leading coefficient of the input
  std::vector<PolyFactor> factors;

  /// unit * prod poly^multiplicity
  PolyQ expand() const;
};

/// Complete factorization over Q. Factors are sorted by (degree, coefficients).
/// Zassenhaus: squarefree decomposition, factorization modulo a good prime,
/// multifactor Hensel lifting, subset recombination.
Factorization factor_over_Q(const PolyQ& f, const FactorOptions& opts = {});

bool is_irreducible_over_Q(const PolyQ& f, const FactorOptions& opts = {});

/// Total order on polynomials used for every canonical sort: degree first,
/// then coefficients from the constant term upward.
bool poly_less(const PolyQ& a, const PolyQ& b);

}  // namespace torsiongate

#endif  // TORSIONGATE_FACTOR_HPP
