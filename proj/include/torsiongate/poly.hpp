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

#ifndef TORSIONGATE_POLY_HPP
#define TORSIONGATE_POLY_HPP

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "torsiongate/rational.hpp"

namespace torsiongate {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// has an empty vector and degree -1.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs);
  PolyQ(std::initializer_list<long> ascending);

  static PolyQ constant(const Rational& c);
  static PolyQ monomial(const Rational& c, int degree);
  /// x - r
  static PolyQ linear_root(const Rational& r);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i (zero outside the stored range).
  Rational coeff(int i) const;
  const Rational& lc() const;

  Rational operator()(const Rational& x) const;

  PolyQ derivative() const;
  PolyQ monic() const;
  /// f(x + c)
  PolyQ shifted(const Rational& c) const;
  /// f(c x)
  PolyQ scaled_argument(const Rational& c) const;
  /// f(g(x))
  PolyQ compose(const PolyQ& g) const;

  PolyQ& operator+=(const PolyQ& rhs);
  PolyQ& operator-=(const PolyQ& rhs);
  PolyQ& operator*=(const PolyQ& rhs);
  PolyQ& operator*=(const Rational& c);

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(PolyQ a, const Rational& c) { return a *= c; }
  friend PolyQ operator*(const Rational& c, PolyQ a) { return a *= c; }
  friend PolyQ operator-(PolyQ a);
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, e.g. "x^3 - 2".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const PolyQ& f) { return os << f.to_string(); }

/// Quotient and remainder; throws DomainError when b is zero.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
PolyQ operator%(const PolyQ& a, const PolyQ& b);
/// Exact quotient; throws DomainError when the division leaves a remainder.
PolyQ exact_quotient(const PolyQ& a, const PolyQ& b);

/// Monic gcd; gcd(0, 0) = 0.
PolyQ poly_gcd(const PolyQ& a, const PolyQ& b);

struct ExtendedGcd {
  PolyQ gcd;  // monic
  PolyQ s;    // s*a + t*b = gcd
  PolyQ t;
};
ExtendedGcd poly_ext_gcd(const PolyQ& a, const PolyQ& b);

/// Res(a, b) = lc(a)^deg b * lc(b)^deg a * prod (alpha_i - beta_j),
/// computed by the subresultant PRS over Z.
Rational poly_resultant(const PolyQ& a, const PolyQ& b);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f); requires deg f >= 2.
Rational poly_discriminant(const PolyQ& f);

/// Product of the distinct monic irreducible factors.
PolyQ squarefree_part(const PolyQ& f);
/// Yun decomposition: monic squarefree, pairwise coprime g_i with
/// f = lc * prod g_i^i. Entries with g_i = 1 are omitted.
std::vector<std::pair<PolyQ, int>> squarefree_decomposition(const PolyQ& f);

PolyQ cyclotomic_poly(int m);

/// Roots in Q, ascending.
std::vector<Rational> rational_roots(const PolyQ& f);

/// The polynomial of degree < xs.size() through the points (xs[i], ys[i]).
PolyQ interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Euler's totient.
long euler_phi(long m);

// -- Integer polynomial helpers ---------------------------------------------

using IntPoly = std::vector<Integer>;

/// f = content * prim with prim in Z[x] primitive and lc(prim) > 0.
std::pair<Rational, IntPoly> primitive_part(const PolyQ& f);
PolyQ to_polyq(const IntPoly& f);
Integer int_content(const IntPoly& f);
/// Subresultant-PRS resultant in Z[x]; both inputs nonzero.
Integer int_resultant(IntPoly a, IntPoly b);

}  // namespace torsiongate

#endif  // TORSIONGATE_POLY_HPP
