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


#include "torsiongate/numfield.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "linalg.hpp"
#include "torsiongate/errors.hpp"
#include "torsiongate/modp.hpp"

namespace torsiongate {

namespace {

void itrim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::shared_ptr<const NumberFieldData> make_data(const PolyQ& m, std::string label) {
  auto d = std::make_shared<NumberFieldData>();
  d->defining_poly = m;
  d->degree = m.degree();
  d->label = label.empty() ? m.to_string("t") : std::move(label);
  Integer D = 1;
  for (const auto& c : m.coeffs()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.get_den_mpz_t());
  // The smallest D making D^n m(x/D) integral may be smaller; any works.
  d->scale = D;
  int n = d->degree;
  d->scale_pow.resize(static_cast<std::size_t>(n) + 1);
  d->scale_pow[0] = 1;
  for (int i = 1; i <= n; ++i) d->scale_pow[i] = d->scale_pow[i - 1] * D;
  d->scaled_poly.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    Rational c = m.coeff(i) * Rational(d->scale_pow[n - i]);
    if (c.get_den() != 1) throw DomainError("internal: scaled polynomial is not integral");
    d->scaled_poly[i] = c.get_num();
  }
  d->discriminant = n >= 2 ? poly_discriminant(m) : Rational(1);
  return d;
}

const std::shared_ptr<const NumberFieldData>& rationals_data() {
  static const std::shared_ptr<const NumberFieldData> q = make_data(PolyQ{0, 1}, "Q");
  return q;
}

}  // namespace

// -- NumberField ------------------------------------------------------------------

NumberField::NumberField() : d_(rationals_data()) {}

const PolyQ& NumberField::defining_poly() const { return d_->defining_poly; }
int NumberField::degree() const { return d_->degree; }
const std::string& NumberField::label() const { return d_->label; }

bool operator==(const NumberField& a, const NumberField& b) {
  return a.d_ == b.d_ || a.d_->defining_poly == b.d_->defining_poly;
}

NumberField nf_create_trusted(const PolyQ& m, std::string label) {
  if (m.degree() < 1 || !m.is_monic()) throw DomainError("field polynomial must be monic of degree >= 1");
  if (m.degree() == 1) return NumberField();
  return NumberField(make_data(m, std::move(label)));
}

NumberField nf_create(const PolyQ& m, std::string label, const FieldOptions& opts) {
  if (m.degree() < 1) throw DomainError("field polynomial must have degree >= 1");
  if (!m.is_monic()) throw DomainError("field polynomial " + m.to_string() + " is not monic");
  if (m.degree() > opts.degree_cap)
    throw DegreeCapExceeded("number field " + m.to_string("t"), m.degree(), opts.degree_cap);
  if (m.degree() > 1) {
    auto fac = factor_over_Q(m, opts.factor);
    if (fac.factors.size() != 1 || fac.factors[0].multiplicity != 1)
      throw DomainError("field polynomial " + m.to_string() + " is reducible: factor " +
                        fac.factors[0].poly.to_string());
  }
  return nf_create_trusted(m, std::move(label));
}

FieldElement NumberField::zero() const { return FieldElement::from_scaled(*this, {}, 1); }
FieldElement NumberField::one() const { return FieldElement::from_scaled(*this, {Integer(1)}, 1); }

FieldElement NumberField::from_rational(const Rational& q) const {
  return FieldElement::from_scaled(*this, {q.get_num()}, q.get_den());
}

FieldElement NumberField::from_coords(const std::vector<Rational>& coords) const {
  int n = degree();
  if (static_cast<int>(coords.size()) != n)
    throw DomainError("coordinate vector length " + std::to_string(coords.size()) +
                      " does not match field degree " + std::to_string(n));
  // value = sum c_i D^-i (D t)^i
  std::vector<Rational> t(coords.size());
  Integer den = 1;
  for (int i = 0; i < n; ++i) {
    t[i] = coords[i] / Rational(d_->scale_pow[i]);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t[i].get_den_mpz_t());
  }
  IntPoly num(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) num[i] = t[i].get_num() * (den / t[i].get_den());
  return FieldElement::from_scaled(*this, std::move(num), den);
}

FieldElement NumberField::generator() const {
  if (degree() == 1) return from_rational(-defining_poly().coeff(0));
  return FieldElement::from_scaled(*this, {Integer(0), Integer(1)}, d_->scale);
}

// -- FieldElement -------------------------------------------------------------------

FieldElement FieldElement::from_scaled(const NumberField& K, IntPoly num, Integer den) {
  FieldElement e;
  e.K_ = K;
  e.num_ = std::move(num);
  e.den_ = std::move(den);
  e.normalize();
  return e;
}

void FieldElement::normalize() {
  itrim(num_);
  if (num_.empty()) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& c : num_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

std::vector<Rational> FieldElement::coords() const {
  const auto& d = K_.data();
  std::vector<Rational> c(static_cast<std::size_t>(d.degree));
  for (std::size_t i = 0; i < num_.size(); ++i) {
    c[i] = Rational(num_[i] * d.scale_pow[i], den_);
    c[i].canonicalize();
  }
  return c;
}

Rational FieldElement::to_rational() const {
  if (!is_rational()) throw DomainError("element " + to_string() + " is not rational");
  if (num_.empty()) return 0;
  Rational q(num_[0], den_);
  q.canonicalize();
  return q;
}

namespace {

// Brings a and b into a common field when one side lives in Q.
const NumberField& common_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() == b.field()) return a.field();
  if (a.field().is_rational()) return b.field();
  if (b.field().is_rational()) return a.field();
  throw DomainError("arithmetic between elements of different fields");
}

}  // namespace

FieldElement& FieldElement::operator+=(const FieldElement& b) {
  K_ = common_field(*this, b);
  if (b.num_.empty()) return *this;
  if (num_.size() < b.num_.size()) num_.resize(b.num_.size());
  if (den_ == b.den_) {
    for (std::size_t i = 0; i < b.num_.size(); ++i) num_[i] += b.num_[i];
  } else {
    for (auto& c : num_) c *= b.den_;
    for (std::size_t i = 0; i < b.num_.size(); ++i) mpz_addmul(num_[i].get_mpz_t(), b.num_[i].get_mpz_t(), den_.get_mpz_t());
    den_ *= b.den_;
  }
  normalize();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b) { return *this += -b; }

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

FieldElement& FieldElement::operator*=(const FieldElement& b) {
  K_ = common_field(*this, b);
  if (num_.empty() || b.num_.empty()) {
    num_.clear();
    den_ = 1;
    return *this;
  }
  IntPoly r(num_.size() + b.num_.size() - 1);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
  }
  const auto& mz = K_.data().scaled_poly;
  int n = K_.degree();
  for (int k = static_cast<int>(r.size()) - 1; k >= n; --k) {
    if (r[k] == 0) continue;
    Integer t = r[k];
    for (int j = 0; j <= n; ++j) mpz_submul(r[k - n + j].get_mpz_t(), t.get_mpz_t(), mz[j].get_mpz_t());
  }
  if (static_cast<int>(r.size()) > n) r.resize(static_cast<std::size_t>(n));
  num_ = std::move(r);
  den_ *= b.den_;
  normalize();
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& c) {
  for (auto& v : num_) v *= c.get_num();
  den_ *= c.get_den();
  normalize();
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& b) {
  K_ = common_field(*this, b);
  if (b.is_rational()) return *this *= 1 / b.to_rational();
  return *this *= nf_invert(b);
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return nf_invert(*this).pow(-e);
  FieldElement r = K_.one(), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  // Compare coordinates as rationals, constant term first.
  auto ca = a.coords(), cb = b.coords();
  std::size_t n = std::max(ca.size(), cb.size());
  ca.resize(n);
  cb.resize(n);
  return ca < cb;
}

std::string FieldElement::to_string(const std::string& var) const {
  return PolyQ(coords()).to_string(var);
}

FieldElement nf_invert(const FieldElement& a) {
  if (a.is_zero()) throw DomainError("inverse of zero");
  const NumberField& K = a.field();
  if (a.is_rational()) return K.from_rational(1 / a.to_rational());
  const auto& d = K.data();
  auto eg = poly_ext_gcd(to_polyq(a.scaled_num()), to_polyq(d.scaled_poly));
  if (eg.gcd.degree() != 0) throw DomainError("element is not invertible (defining polynomial reducible?)");
  // a^-1 = den * s(D t)
  Integer L = 1;
  for (const auto& c : eg.s.coeffs()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
  IntPoly num;
  for (const auto& c : eg.s.coeffs()) num.push_back(c.get_num() * (L / c.get_den()) * a.den());
  return FieldElement::from_scaled(K, std::move(num), L);
}

Rational nf_norm(const FieldElement& a) {
  const auto& d = a.field().data();
  if (a.is_zero()) return 0;
  Integer denn;
  mpz_pow_ui(denn.get_mpz_t(), a.den().get_mpz_t(), static_cast<unsigned long>(d.degree));
  Integer r;
  if (a.scaled_num().size() == 1)
    mpz_pow_ui(r.get_mpz_t(), a.scaled_num()[0].get_mpz_t(), static_cast<unsigned long>(d.degree));
  else
    r = int_resultant(d.scaled_poly, a.scaled_num());
  Rational q(r, denn);
  q.canonicalize();
  return q;
}

PolyQ characteristic_polynomial(const FieldElement& a) {
  int n = a.field().degree();
  std::vector<Rational> xs, ys;
  for (int t = 0; t <= n; ++t) {
    xs.emplace_back(t);
    ys.push_back(nf_norm(a.field().from_rational(t) - a));
  }
  return interpolate(xs, ys);
}

PolyQ minimal_polynomial(const FieldElement& a) {
  if (a.is_rational()) return PolyQ::linear_root(a.to_rational());
  return squarefree_part(characteristic_polynomial(a));
}

// -- PolyNF --------------------------------------------------------------------------

PolyNF::PolyNF(NumberField K, std::vector<FieldElement> coeffs) : K_(std::move(K)), c_(std::move(coeffs)) {
  for (auto& c : c_) {
    if (c.field() != K_) {
      if (!c.field().is_rational()) throw DomainError("polynomial coefficient from a different field");
      c = K_.from_rational(c.to_rational());
    }
  }
  trim();
}

PolyNF PolyNF::from_q(const NumberField& K, const PolyQ& f) {
  std::vector<FieldElement> c;
  c.reserve(f.coeffs().size());
  for (const auto& q : f.coeffs()) c.push_back(K.from_rational(q));
  return PolyNF(K, std::move(c));
}

void PolyNF::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement PolyNF::coeff(int i) const {
  if (i < 0 || i > degree()) return K_.zero();
  return c_[static_cast<std::size_t>(i)];
}

const FieldElement& PolyNF::lc() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

bool PolyNF::is_monic() const { return !c_.empty() && c_.back() == K_.one(); }

bool PolyNF::is_rational() const {
  return std::all_of(c_.begin(), c_.end(), [](const FieldElement& e) { return e.is_rational(); });
}

PolyQ PolyNF::to_q() const {
  std::vector<Rational> v;
  for (const auto& c : c_) v.push_back(c.to_rational());
  return PolyQ(std::move(v));
}

PolyNF PolyNF::monic() const {
  if (c_.empty()) return *this;
  if (is_monic()) return *this;
  FieldElement inv = nf_invert(lc());
  PolyNF r = *this;
  for (auto& c : r.c_) c *= inv;
  return r;
}

PolyNF PolyNF::derivative() const {
  if (degree() < 1) return PolyNF(K_);
  std::vector<FieldElement> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * Rational(static_cast<long>(i)));
  return PolyNF(K_, std::move(v));
}

PolyNF PolyNF::shifted(const FieldElement& c) const {
  std::vector<FieldElement> r(c_);
  int n = degree();
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) r[j] += c * r[j + 1];
  return PolyNF(K_, std::move(r));
}

FieldElement PolyNF::operator()(const FieldElement& x) const {
  FieldElement acc = K_.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

PolyNF& PolyNF::operator+=(const PolyNF& b) {
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), K_.zero());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  trim();
  return *this;
}

PolyNF& PolyNF::operator-=(const PolyNF& b) {
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), K_.zero());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
  trim();
  return *this;
}

PolyNF operator*(const PolyNF& a, const PolyNF& b) {
  if (a.is_zero() || b.is_zero()) return PolyNF(a.K_);
  std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, a.K_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyNF(a.K_, std::move(r));
}

PolyNF operator*(const FieldElement& c, const PolyNF& a) {
  PolyNF r = a;
  for (auto& v : r.c_) v *= c;
  r.trim();
  return r;
}

std::string PolyNF::to_string(const std::string& var, const std::string& gen) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const auto& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string(gen) << ")";
    if (i > 0) os << "*" << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<PolyNF, PolyNF> divmod(const PolyNF& a, const PolyNF& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const NumberField& K = a.field();
  int db = b.degree();
  if (a.degree() < db) return {PolyNF(K), a};
  std::vector<FieldElement> r(a.coeffs());
  std::vector<FieldElement> q(static_cast<std::size_t>(a.degree() - db) + 1, K.zero());
  bool monic = b.is_monic();
  FieldElement inv = monic ? K.one() : nf_invert(b.lc());
  for (int i = a.degree(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    FieldElement t = monic ? r[i] : r[i] * inv;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeffs()[j];
    q[i - db] = std::move(t);
  }
  r.resize(static_cast<std::size_t>(db), K.zero());
  return {PolyNF(K, std::move(q)), PolyNF(K, std::move(r))};
}

PolyNF operator%(const PolyNF& a, const PolyNF& b) { return divmod(a, b).second; }

PolyNF poly_gcd(const PolyNF& a, const PolyNF& b) {
  PolyNF x = a.monic(), y = b.monic();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    PolyNF r = (x % y).monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

PolyQ poly_norm(const PolyNF& f) {
  const NumberField& K = f.field();
  if (f.is_zero()) return {};
  if (K.is_rational() || f.is_rational()) {
    PolyQ g = f.to_q();
    PolyQ r = PolyQ::constant(1);
    for (int i = 0; i < K.degree(); ++i) r *= g;
    return r;
  }
  int N = K.degree() * f.degree();
  std::vector<Rational> xs, ys;
  xs.reserve(static_cast<std::size_t>(N) + 1);
  for (int j = 0; j <= N; ++j) {
    // Symmetric sample points keep the values smaller.
    long x = (j % 2 == 0) ? j / 2 : -(j + 1) / 2;
    xs.emplace_back(x);
    ys.push_back(nf_norm(f(K.from_rational(x))));
  }
  return interpolate(xs, ys);
}

// -- Factorization over K -----------------------------------------------------------

namespace {

bool element_less(const FieldElement& a, const FieldElement& b) { return a < b; }

bool polynf_less(const PolyNF& a, const PolyNF& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end(), element_less);
}

std::vector<std::pair<PolyNF, int>> squarefree_decomposition_nf(const PolyNF& f) {
  std::vector<std::pair<PolyNF, int>> out;
  PolyNF fm = f.monic();
  PolyNF d = fm.derivative();
  PolyNF a = poly_gcd(fm, d);
  PolyNF b = divmod(fm, a).first;
  PolyNF c = divmod(d, a).first;
  PolyNF e = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    PolyNF g = poly_gcd(b, e);
    PolyNF bn = divmod(b, g).first;
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    c = divmod(e, g).first;
    b = bn;
    e = c - b.derivative();
    ++i;
  }
  return out;
}

long shift_value(int attempt) { return attempt == 0 ? 0 : ((attempt % 2) ? (attempt + 1) / 2 : -attempt / 2); }

// Trager's norm method for a monic squarefree f over K.
std::vector<PolyNF> trager(const PolyNF& f, const FieldOptions& opts) {
  const NumberField& K = f.field();
  if (f.degree() <= 1) return {f};
  int N = K.degree() * f.degree();
  if (N > opts.factor.degree_cap)
    throw DegreeCapExceeded("norm in Trager factorization", N, opts.factor.degree_cap);
  FieldElement theta = K.generator();
  PolyNF g(K);
  PolyQ norm;
  long s = 0;
  bool found = false;
  for (int attempt = f.is_rational() ? 1 : 0; attempt < 40; ++attempt) {
    s = shift_value(attempt);
    g = s == 0 ? f : f.shifted(theta * Rational(-s));
    norm = poly_norm(g);
    if (poly_gcd(norm, norm.derivative()).degree() == 0) {
      found = true;
      break;
    }
  }
  if (!found) throw Error("no squarefree norm found in Trager factorization");
  auto fac = factor_over_Q(norm, opts.factor);
  if (fac.factors.size() == 1) return {f};
  std::vector<PolyNF> out;
  for (const auto& pf : fac.factors) {
    PolyNF Ni = PolyNF::from_q(K, pf.poly);
    PolyNF h = poly_gcd(g, Ni % g);
    if (h.degree() < 1) continue;
    out.push_back(s == 0 ? h : h.shifted(theta * Rational(s)));
  }
  return out;
}

std::vector<PolyNF> irreducible_factors(const PolyNF& f, const FieldOptions& opts) {
  const NumberField& K = f.field();
  if (K.is_rational() || f.is_rational()) {
    std::vector<PolyNF> out;
    for (const auto& pf : factor_over_Q(f.to_q(), opts.factor).factors) {
      if (K.is_rational() || pf.poly.degree() == 1) {
        out.push_back(PolyNF::from_q(K, pf.poly));
      } else {
        auto sub = trager(PolyNF::from_q(K, pf.poly), opts);
        out.insert(out.end(), sub.begin(), sub.end());
      }
    }
    return out;
  }
  return trager(f, opts);
}

}  // namespace

std::vector<PolyNFFactor> factor_over_nf(const PolyNF& f, const FieldOptions& opts) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  std::vector<PolyNFFactor> out;
  if (f.degree() < 1) return out;
  const NumberField& K = f.field();
  if (K.is_rational() || f.is_rational()) {
    for (const auto& pf : factor_over_Q(f.to_q(), opts.factor).factors) {
      for (auto& h : irreducible_factors(PolyNF::from_q(K, pf.poly), opts))
        out.push_back({h, pf.multiplicity});
    }
  } else {
    for (const auto& [g, mult] : squarefree_decomposition_nf(f))
      for (auto& h : trager(g, opts)) out.push_back({h, mult});
  }
  std::sort(out.begin(), out.end(), [](const PolyNFFactor& a, const PolyNFFactor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return polynf_less(a.poly, b.poly);
  });
  return out;
}

// -- Roots ------------------------------------------------------------------------------

namespace {

bool divides_den(std::uint64_t p, const PolyQ& f) {
  for (const auto& c : f.coeffs())
    if (mpz_divisible_ui_p(c.get_den_mpz_t(), p)) return true;
  return false;
}

// Necessary condition for an irreducible g to have a root in L: at each
// unramified prime, g mod p has a factor whose degree divides every residue degree.
bool local_root_possible(const PolyQ& g, const NumberField& L) {
  const auto& d = L.data();
  const PolyQ& m = d.defining_poly;
  int checked = 0;
  for (std::uint64_t p = 5; checked < 10 && p < 2000; p = modp::next_prime(p)) {
    if (mpz_divisible_ui_p(d.discriminant.get_num_mpz_t(), p) ||
        mpz_divisible_ui_p(d.discriminant.get_den_mpz_t(), p))
      continue;
    if (divides_den(p, m) || divides_den(p, g)) continue;
    auto gp = modp::reduce(g, p);
    auto mp = modp::reduce(m, p);
    if (!gp || !mp) continue;
    modp::Poly gm = modp::monic(*gp, p);
    if (!modp::is_squarefree(gm, p)) continue;
    ++checked;
    auto gdeg = modp::factor_degrees(gm, p);
    for (int f : modp::factor_degrees(modp::monic(*mp, p), p)) {
      bool ok = std::any_of(gdeg.begin(), gdeg.end(), [f](int e) { return f % e == 0; });
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<FieldElement> roots_in_field(const PolyQ& f, const NumberField& L, const FieldOptions& opts) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  std::vector<FieldElement> out;
  int n = L.degree();
  for (const auto& pf : factor_over_Q(f, opts.factor).factors) {
    const PolyQ& g = pf.poly;
    int d = g.degree();
    if (d == 1) {
      out.push_back(L.from_rational(-g.coeff(0)));
      continue;
    }
    if (n % d != 0) continue;
    if (!local_root_possible(g, L)) continue;
    for (const auto& h : trager(PolyNF::from_q(L, g), opts))
      if (h.degree() == 1) out.push_back(-h.coeff(0));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FieldElement> roots_in_field(const PolyNF& f, const FieldOptions& opts) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  if (f.is_rational()) return roots_in_field(f.to_q(), f.field(), opts);
  std::vector<FieldElement> out;
  for (const auto& pf : factor_over_nf(f, opts))
    if (pf.poly.degree() == 1) out.push_back(-pf.poly.coeff(0));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  Integer a, b;
  mpz_sqrt(a.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(b.get_mpz_t(), q.get_den_mpz_t());
  Rational r(a, b);
  r.canonicalize();
  return r;
}

// Residue test at degree-one primes: c must be a square modulo each.
bool residues_allow_square(const FieldElement& c) {
  const auto& d = c.field().data();
  std::mt19937_64 rng(17);
  int checked = 0;
  for (std::uint64_t p = 7; checked < 12 && p < 3000; p = modp::next_prime(p)) {
    if (mpz_divisible_ui_p(d.discriminant.get_num_mpz_t(), p) ||
        mpz_divisible_ui_p(d.discriminant.get_den_mpz_t(), p) ||
        mpz_divisible_ui_p(d.scale.get_mpz_t(), p) || mpz_divisible_ui_p(c.den().get_mpz_t(), p))
      continue;
    modp::Poly mz;
    for (const auto& v : d.scaled_poly) mz.push_back(mpz_fdiv_ui(v.get_mpz_t(), p));
    modp::trim(mz);
    auto rs = modp::roots(mz, p, rng);
    if (rs.empty()) continue;
    modp::Poly a;
    for (const auto& v : c.scaled_num()) a.push_back(mpz_fdiv_ui(v.get_mpz_t(), p));
    modp::trim(a);
    ++checked;
    // c = num/den has the square class of num * den.
    std::uint64_t dm = mpz_fdiv_ui(c.den().get_mpz_t(), p);
    for (auto r : rs) {
      std::uint64_t v = modp::mul(modp::eval(a, r, p), dm, p);
      if (v != 0 && modp::pow(v, (p - 1) / 2, p) != 1) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<FieldElement> is_square(const FieldElement& c, const FieldOptions& opts) {
  const NumberField& K = c.field();
  if (c.is_zero()) return K.zero();
  if (c.is_rational()) {
    if (auto r = rational_sqrt(c.to_rational())) return K.from_rational(*r);
    if (K.is_rational()) return std::nullopt;
  }
  if (!rational_sqrt(nf_norm(c))) return std::nullopt;
  if (!residues_allow_square(c)) return std::nullopt;
  PolyNF f(K, {-c, K.zero(), K.one()});
  for (const auto& h : irreducible_factors(f, opts)) {
    if (h.degree() != 1) continue;
    FieldElement w = -h.coeff(0);
    if (w * w == c) return w;
  }
  return std::nullopt;
}

// -- Embeddings and compositum --------------------------------------------------------------

Embedding::Embedding(NumberField source, NumberField target, FieldElement generator_image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(generator_image)) {
  if (image_.field() != target_) {
    if (!image_.field().is_rational()) throw DomainError("embedding image lies in the wrong field");
    image_ = target_.from_rational(image_.to_rational());
  }
  if (target_.degree() % source_.degree() != 0)
    throw DomainError("embedding degrees are not divisible");
  if (!PolyNF::from_q(target_, source_.defining_poly())(image_).is_zero())
    throw DomainError("embedding image is not a root of the source polynomial");
}

Embedding Embedding::identity(const NumberField& K) { return Embedding(K, K, K.generator(), true); }

Embedding Embedding::from_rationals(const NumberField& L) {
  return Embedding(NumberField(), L, L.zero(), true);
}

FieldElement Embedding::operator()(const FieldElement& a) const {
  if (a.field().is_rational()) return target_.from_rational(a.to_rational());
  if (a.field() != source_) throw DomainError("element does not belong to the embedding source");
  auto c = a.coords();
  FieldElement acc = target_.zero();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= image_;
    acc += target_.from_rational(*it);
  }
  return acc;
}

PolyNF Embedding::operator()(const PolyNF& f) const {
  std::vector<FieldElement> c;
  for (const auto& e : f.coeffs()) c.push_back((*this)(e));
  return PolyNF(target_, std::move(c));
}

Embedding Embedding::then(const Embedding& next) const {
  if (next.source_ != target_) throw DomainError("embedding composition mismatch");
  return Embedding(source_, next.target_, next(image_), true);
}

int extension_degree(const Embedding& e) {
  int a = e.source().degree(), b = e.target().degree();
  if (b % a != 0) throw DomainError("corrupted embedding: degrees not divisible");
  return b / a;
}

Compositum adjoin_root(const PolyNF& h0, const FieldOptions& opts) {
  PolyNF h = h0.monic();
  const NumberField& K = h.field();
  int e = h.degree();
  if (e < 1) throw DomainError("cannot adjoin a root of a constant");
  if (e == 1) return {K, Embedding::identity(K), -h.coeff(0)};
  int n = K.degree();
  if (n * e > opts.degree_cap) throw DegreeCapExceeded("compositum field", n * e, opts.degree_cap);
  if (K.is_rational()) {
    NumberField L = nf_create_trusted(h.to_q());
    return {L, Embedding::from_rationals(L), L.generator()};
  }
  FieldElement theta = K.generator();
  PolyQ norm;
  long s = 0;
  bool found = false;
  for (int attempt = h.is_rational() ? 1 : 0; attempt < 40; ++attempt) {
    s = shift_value(attempt);
    norm = poly_norm(s == 0 ? h : h.shifted(theta * Rational(-s)));
    if (poly_gcd(norm, norm.derivative()).degree() == 0) {
      found = true;
      break;
    }
  }
  if (!found) throw Error("no primitive element found for compositum");
  NumberField L = nf_create_trusted(norm);
  int N = n * e;
  // Tower K[y]/(h) with basis t^i y^j; gamma = y + s t.
  PolyNF gamma(K, {theta * Rational(s), K.one()});
  detail::Matrix A(static_cast<std::size_t>(N), std::vector<Rational>(static_cast<std::size_t>(N)));
  PolyNF power(K, {K.one()});
  auto put = [&](const PolyNF& v, std::vector<Rational>& col) {
    for (int j = 0; j < e; ++j) {
      auto c = v.coeff(j).coords();
      for (int i = 0; i < n; ++i) col[j * n + i] = c[i];
    }
  };
  std::vector<Rational> col(static_cast<std::size_t>(N));
  for (int k = 0; k < N; ++k) {
    put(power, col);
    for (int r = 0; r < N; ++r) A[r][k] = col[r];
    power = (power * gamma) % h;
  }
  std::vector<Rational> rhs_theta(static_cast<std::size_t>(N)), rhs_y(static_cast<std::size_t>(N));
  put(PolyNF(K, {theta}), rhs_theta);
  put(PolyNF(K, {K.zero(), K.one()}), rhs_y);
  auto sol = detail::solve(std::move(A), {rhs_theta, rhs_y});
  if (!sol) throw Error("compositum: powers of the primitive element are dependent");
  FieldElement theta_L = L.from_coords((*sol)[0]);
  FieldElement root = L.from_coords((*sol)[1]);
  Embedding emb(K, L, theta_L);
  return {L, emb, root};
}

Compositum compositum(const PolyNF& g, const FieldOptions& opts) {
  if (g.degree() < 1) throw DomainError("compositum needs a polynomial of degree >= 1");
  auto facs = factor_over_nf(g, opts);
  return adjoin_root(facs.front().poly, opts);
}

Compositum compositum(const NumberField& K, const PolyQ& g, const FieldOptions& opts) {
  return compositum(PolyNF::from_q(K, g), opts);
}

std::vector<FieldElement> automorphisms(const NumberField& K, const FieldOptions& opts) {
  if (K.is_rational()) return {K.zero()};
  return roots_in_field(K.defining_poly(), K, opts);
}

}  // namespace torsiongate
