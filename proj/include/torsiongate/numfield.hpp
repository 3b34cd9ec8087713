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


#ifndef TORSIONGATE_NUMFIELD_HPP
#define TORSIONGATE_NUMFIELD_HPP

#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "torsiongate/factor.hpp"
#include "torsiongate/poly.hpp"

namespace torsiongate {

struct FieldOptions {
  /// Largest absolute degree a construction may produce.
  int degree_cap = 64;
  /// Caps the degree of the rational norms factored by Trager's method.
  FactorOptions factor{256, 12};
};

class FieldElement;

/// Shared immutable state of a field. The scaled generator D t is a root of
/// the monic integral polynomial scaled_poly.
struct NumberFieldData {
  PolyQ defining_poly;
  int degree = 1;
  std::string label;
  Integer scale = 1;               // D
  IntPoly scaled_poly;             // D^n m(x / D)
  std::vector<Integer> scale_pow;  // D^i, i = 0..n
  Rational discriminant;           // of defining_poly (1 for Q)
};

/// Q[x]/(m) with m monic irreducible. Internally the generator is scaled to
/// an algebraic integer so element arithmetic runs over Z.
class NumberField {
 public:
  /// The rational field.
  NumberField();
  static NumberField rationals() { return NumberField(); }

  const PolyQ& defining_poly() const;
  int degree() const;
  const std::string& label() const;
  bool is_rational() const { return degree() == 1; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& q) const;
  /// Element with the given power-basis coordinates (length must equal the degree).
  FieldElement from_coords(const std::vector<Rational>& coords) const;
  /// The class of x.
  FieldElement generator() const;

  const NumberFieldData& data() const { return *d_; }

  friend bool operator==(const NumberField& a, const NumberField& b);
  friend bool operator!=(const NumberField& a, const NumberField& b) { return !(a == b); }

 private:
  friend NumberField nf_create_trusted(const PolyQ& m, std::string label);
  explicit NumberField(std::shared_ptr<const NumberFieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const NumberFieldData> d_;
};

/// Checks monic + irreducible; any degree-1 polynomial yields the rational field.
NumberField nf_create(const PolyQ& m, std::string label = "", const FieldOptions& opts = {});
/// Skips the irreducibility check; the caller guarantees it.
NumberField nf_create_trusted(const PolyQ& m, std::string label = "");

class FieldElement {
 public:
  FieldElement() = default;

  const NumberField& field() const { return K_; }
  /// Power-basis coordinates in the user generator.
  std::vector<Rational> coords() const;
  bool is_zero() const { return num_.empty(); }
  bool is_rational() const { return num_.size() <= 1; }
  /// Throws DomainError unless the element lies in Q.
  Rational to_rational() const;

  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);
  FieldElement& operator/=(const FieldElement& b);
  FieldElement& operator*=(const Rational& c);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator*(FieldElement a, const Rational& c) { return a *= c; }
  friend FieldElement operator*(const Rational& c, FieldElement a) { return a *= c; }
  FieldElement operator-() const;
  FieldElement pow(long e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  /// Arbitrary but canonical total order (for sorting and maps).
  friend bool operator<(const FieldElement& a, const FieldElement& b);

  std::string to_string(const std::string& var = "t") const;

  /// Scaled representation: value = sum num[i] (D t)^i / den.
  const IntPoly& scaled_num() const { return num_; }
  const Integer& den() const { return den_; }
  static FieldElement from_scaled(const NumberField& K, IntPoly num, Integer den);

 private:
  void normalize();
  NumberField K_;
  IntPoly num_;
  Integer den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

FieldElement nf_invert(const FieldElement& a);
Rational nf_norm(const FieldElement& a);
PolyQ characteristic_polynomial(const FieldElement& a);
PolyQ minimal_polynomial(const FieldElement& a);

/// Polynomial with coefficients in one number field, ascending.
class PolyNF {
 public:
  explicit PolyNF(NumberField K = {}) : K_(std::move(K)) {}
  PolyNF(NumberField K, std::vector<FieldElement> coeffs);
  static PolyNF from_q(const NumberField& K, const PolyQ& f);

  const NumberField& field() const { return K_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  FieldElement coeff(int i) const;
  const FieldElement& lc() const;
  bool is_monic() const;
  /// True when every coefficient is rational.
  bool is_rational() const;
  PolyQ to_q() const;

  PolyNF monic() const;
  PolyNF derivative() const;
  /// f(x + c)
  PolyNF shifted(const FieldElement& c) const;
  FieldElement operator()(const FieldElement& x) const;

  PolyNF& operator+=(const PolyNF& b);
  PolyNF& operator-=(const PolyNF& b);
  friend PolyNF operator+(PolyNF a, const PolyNF& b) { return a += b; }
  friend PolyNF operator-(PolyNF a, const PolyNF& b) { return a -= b; }
  friend PolyNF operator*(const PolyNF& a, const PolyNF& b);
  friend PolyNF operator*(const FieldElement& c, const PolyNF& a);
  friend bool operator==(const PolyNF& a, const PolyNF& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x", const std::string& gen = "t") const;

 private:
  void trim();
  NumberField K_;
  std::vector<FieldElement> c_;
};

inline std::ostream& operator<<(std::ostream& os, const PolyNF& f) { return os << f.to_string(); }

std::pair<PolyNF, PolyNF> divmod(const PolyNF& a, const PolyNF& b);
PolyNF operator%(const PolyNF& a, const PolyNF& b);
PolyNF poly_gcd(const PolyNF& a, const PolyNF& b);
/// Norm down to Q: prod over conjugates of the coefficients.
PolyQ poly_norm(const PolyNF& f);

struct PolyNFFactor {
  PolyNF poly;
  int multiplicity = 1;
};

/// Monic irreducible factors over the coefficient field, canonically sorted
/// by degree and coefficients.
std::vector<PolyNFFactor> factor_over_nf(const PolyNF& f, const FieldOptions& opts = {});

/// Roots in L of a rational polynomial, sorted.
std::vector<FieldElement> roots_in_field(const PolyQ& f, const NumberField& L,
                                         const FieldOptions& opts = {});
/// Roots of f in its own coefficient field, sorted.
std::vector<FieldElement> roots_in_field(const PolyNF& f, const FieldOptions& opts = {});

/// A square root of c in its field, if there is one.
std::optional<FieldElement> is_square(const FieldElement& c, const FieldOptions& opts = {});

/// Field homomorphism fixed by the image of the source generator.
class Embedding {
 public:
  /// Checks that the image is a root of the source polynomial.
  Embedding(NumberField source, NumberField target, FieldElement generator_image);
  static Embedding identity(const NumberField& K);
  /// Q -> L
  static Embedding from_rationals(const NumberField& L);

  const NumberField& source() const { return source_; }
  const NumberField& target() const { return target_; }
  const FieldElement& generator_image() const { return image_; }

  FieldElement operator()(const FieldElement& a) const;
  PolyNF operator()(const PolyNF& f) const;
  /// this followed by next.
  Embedding then(const Embedding& next) const;

 private:
  Embedding(NumberField source, NumberField target, FieldElement image, bool)
      : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {}
  NumberField source_, target_;
  FieldElement image_;
};

int extension_degree(const Embedding& e);

struct Compositum {
  NumberField field;
  Embedding embedding;  // K -> field
  FieldElement root;    // root of g in field
};

/// K adjoined a root of g. Among the irreducible factors of g over K the
/// smallest by (degree, coefficients) is used.
Compositum compositum(const NumberField& K, const PolyQ& g, const FieldOptions& opts = {});
Compositum compositum(const PolyNF& g, const FieldOptions& opts = {});
/// K adjoined a root of an irreducible h over K.
Compositum adjoin_root(const PolyNF& h, const FieldOptions& opts = {});

/// All automorphisms of K (as images of the generator), sorted.
std::vector<FieldElement> automorphisms(const NumberField& K, const FieldOptions& opts = {});

}  // namespace torsiongate

#endif  // TORSIONGATE_NUMFIELD_HPP
