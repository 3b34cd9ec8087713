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


#ifndef TORSIONGATE_ELLCURVE_HPP
#define TORSIONGATE_ELLCURVE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "torsiongate/modp.hpp"
#include "torsiongate/numfield.hpp"

namespace torsiongate {

/// Affine point on the short model of a curve, or the point at infinity.
struct CurvePoint {
  bool infinity = true;
  FieldElement x, y;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(FieldElement x, FieldElement y) { return {false, std::move(x), std::move(y)}; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
  /// Infinity first, then by x, then y.
  friend bool operator<(const CurvePoint& a, const CurvePoint& b);

  std::string to_string() const;
};

/// Elliptic curve over a number field given by a long Weierstrass model.
/// Points always live on the cached short model y^2 = x^3 + A x + B with
/// x = X + b2/12, y = Y + (a1 X + a3)/2 for long coordinates (X, Y).
class Curve {
 public:
  /// [a1, a2, a3, a4, a6]; throws DomainError when singular.
  Curve(NumberField K, std::array<FieldElement, 5> a);
  static Curve over_Q(const std::array<Rational, 5>& a);
  static Curve short_model(const NumberField& K, const FieldElement& A, const FieldElement& B);

  const NumberField& field() const { return K_; }
  const std::array<FieldElement, 5>& a_invariants() const { return a_; }
  const FieldElement& short_a() const { return A_; }
  const FieldElement& short_b() const { return B_; }
  bool is_short() const;
  /// All long coefficients rational.
  bool is_rational() const;
  FieldElement b2() const;
  FieldElement c4() const;
  FieldElement c6() const;
  /// Discriminant of the long model.
  FieldElement discriminant() const;

  /// The short model as a curve of its own: [0, 0, 0, A, B].
  Curve to_short_weierstrass() const;
  /// x^3 + A x + B
  PolyNF cubic() const;
  Curve base_change(const Embedding& e) const;

  /// Long-model coordinates of a point.
  std::pair<FieldElement, FieldElement> to_long(const CurvePoint& P) const;
  CurvePoint from_long(const FieldElement& X, const FieldElement& Y) const;

  std::string to_string() const;

 private:
  NumberField K_;
  std::array<FieldElement, 5> a_;
  FieldElement A_, B_;
};

bool on_curve(const Curve& E, const CurvePoint& P);
CurvePoint negate(const Curve& E, const CurvePoint& P);
CurvePoint add(const Curve& E, const CurvePoint& P, const CurvePoint& Q);
CurvePoint mul_scalar(const Curve& E, long n, const CurvePoint& P);
/// Order of P if it is at most bound, else 0.
long point_order(const Curve& E, const CurvePoint& P, long bound);
CurvePoint map_point(const Embedding& e, const CurvePoint& P);

/// Reduced division polynomials of the short model. psi_hat(n) equals psi_n
/// for odd n and psi_n / (2y) for even n; both are polynomials in x alone.
class DivisionPolynomials {
 public:
  explicit DivisionPolynomials(const Curve& E);
  const Curve& curve() const { return E_; }
  const PolyNF& psi_hat(int n);
  /// x-part whose roots are the x-coordinates of nonzero n-torsion points:
  /// psi_hat(n) for odd n, cubic * psi_hat(n) for even n.
  PolyNF division_poly(int n);
  /// Numerator of x([n]P) = phi_n / psi_n^2.
  PolyNF phi(int n);
  /// psi_n^2 as a polynomial in x.
  PolyNF psi_squared(int n);
  /// Roots of phi_n - xP psi_n^2 are the x-coordinates of the Q with [n]Q = +-P.
  PolyNF division_by(int n, const FieldElement& xP);

 private:
  Curve E_;
  PolyNF f_;
  std::map<int, PolyNF> memo_;
  std::shared_ptr<struct DivisionPolynomialsImpl> impl_;
  std::mutex mu_;
};

/// Convenience wrapper around DivisionPolynomials::division_poly.
PolyNF division_poly(int n, const Curve& E);

/// Invariants (m | n) with generators of orders n and m (the second omitted
/// when m = 1), and the full sorted list of group elements.
struct TorsionData {
  long m = 1;
  long n = 1;
  std::vector<CurvePoint> generators;
  std::vector<CurvePoint> points;
  NumberField field;

  long order() const { return m * n; }
  std::string structure() const;
};

struct TorsionOptions {
  FieldOptions field;
  /// Shared division polynomial cache for the curve (optional).
  std::shared_ptr<DivisionPolynomials> cache;
};

/// E(L)[ell^k] for E over K and an embedding K -> L. Levels are computed by
/// repeated ell-division and stop early once the group stabilizes.
TorsionData ell_power_torsion(const Curve& E, const Embedding& emb, int ell, int k,
                              const TorsionOptions& opts = {});
/// E(L)[ell^infinity], with the level bounded by the torsion bound.
TorsionData ell_primary_torsion(const Curve& E, const Embedding& emb, int ell,
                                const TorsionOptions& opts = {});
TorsionData torsion_subgroup(const Curve& E, const Embedding& emb, const TorsionOptions& opts = {});

/// Abelian structure of a finite group of points given by its elements.
TorsionData group_structure(const Curve& E, std::vector<CurvePoint> points);
/// Subgroup generated by the given points (all elements, sorted).
std::vector<CurvePoint> generate_group(const Curve& E, const std::vector<CurvePoint>& gens,
                                       std::size_t cap = 100000);

/// A multiple of #E(L)_tors: gcd of #E(k_P) over residue fields of size at most
/// 20000 at the five smallest admissible primes p >= 5.
struct TorsionBound {
  long bound = 0;
  std::vector<std::uint64_t> primes;
};
TorsionBound torsion_bound(const Curve& E);

/// Number of points over the residue field of the prime (p, g(t)) of the
/// curve's field, g an irreducible factor of the defining polynomial mod p.
/// Throws for bad reduction, p < 5 or q > 20000.
std::uint64_t count_points_at(const Curve& E, std::uint64_t p, const modp::Poly& g);
/// #E(F_{p^f}) for a curve over Q (long model used directly when p < 5).
std::uint64_t count_points(const Curve& E, std::uint64_t p, int f = 1);
long frobenius_trace(const Curve& E, std::uint64_t p);

/// A basis (P, Q) of E[ell] over K(E[ell]), built one coordinate at a time.
struct TorsionBasis {
  NumberField field;
  std::shared_ptr<Embedding> embedding;  // K -> field
  Curve curve;                           // short model over field
  CurvePoint P, Q;
};
TorsionBasis torsion_basis(const Curve& E, int ell, const TorsionOptions& opts = {});

/// T_k = { P in E[ell^inf] : ell^k P in E(K) } with its field of definition.
struct Saturation {
  Curve base;
  int ell = 2;
  int k = 0;
  std::vector<CurvePoint> generators;  // on the base change to the field
  NumberField field;
  std::shared_ptr<Embedding> embedding;  // K -> field
  Curve curve_over_field;
};
Saturation saturate(const Curve& E, int ell, int k, const TorsionOptions& opts = {});

}  // namespace torsiongate

#endif  // TORSIONGATE_ELLCURVE_HPP
