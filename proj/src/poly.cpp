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


#include "torsiongate/poly.hpp"

#include <algorithm>
#include <sstream>

#include "torsiongate/errors.hpp"
#include "torsiongate/factor.hpp"

namespace torsiongate {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw DomainError("empty rational literal");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw DomainError("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw DomainError("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// -- PolyQ --------------------------------------------------------------------

PolyQ::PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

PolyQ::PolyQ(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

PolyQ PolyQ::constant(const Rational& c) { return PolyQ(std::vector<Rational>{c}); }

PolyQ PolyQ::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return PolyQ(std::move(v));
}

PolyQ PolyQ::linear_root(const Rational& r) {
  return PolyQ(std::vector<Rational>{-r, Rational(1)});
}

void PolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PolyQ::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& PolyQ::lc() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational PolyQ::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyQ PolyQ::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return PolyQ(std::move(v));
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return {};
  PolyQ r = *this;
  Rational inv = 1 / lc();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

PolyQ PolyQ::shifted(const Rational& c) const {
  // Horner in the shifted variable: ((a_n)(x+c) + a_{n-1})(x+c) + ...
  std::vector<Rational> r(coeffs_);
  int n = degree();
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) r[j] += c * r[j + 1];
  return PolyQ(std::move(r));
}

PolyQ PolyQ::scaled_argument(const Rational& c) const {
  std::vector<Rational> r(coeffs_);
  Rational p = 1;
  for (auto& a : r) {
    a *= p;
    p *= c;
  }
  return PolyQ(std::move(r));
}

PolyQ PolyQ::compose(const PolyQ& g) const {
  PolyQ acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= g;
    acc += PolyQ::constant(*it);
  }
  return acc;
}

PolyQ& PolyQ::operator+=(const PolyQ& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolyQ(std::move(r));
}

PolyQ& PolyQ::operator*=(const PolyQ& rhs) { return *this = *this * rhs; }

PolyQ& PolyQ::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

PolyQ operator-(PolyQ a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string PolyQ::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (a == 1) && i > 0;
    if (!unit) os << a.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// -- Division, gcd ------------------------------------------------------------

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  int db = b.degree();
  if (a.degree() < db) return {PolyQ{}, a};
  std::vector<Rational> r(a.coeffs());
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1);
  Rational inv = 1 / b.lc();
  const auto& bc = b.coeffs();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Rational t = r[i] * inv;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * bc[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return {PolyQ(std::move(q)), PolyQ(std::move(r))};
}

PolyQ operator%(const PolyQ& a, const PolyQ& b) { return divmod(a, b).second; }

PolyQ exact_quotient(const PolyQ& a, const PolyQ& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

namespace {

IntPoly to_intpoly_scaled(const PolyQ& f) { return primitive_part(f).second; }

int ideg(const IntPoly& f) { return static_cast<int>(f.size()) - 1; }

void itrim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// lc(b)^(deg a - deg b + 1) * a mod b, over Z.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  int db = ideg(b);
  const Integer& lb = b.back();
  int da = ideg(a);
  int e = da - db + 1;
  while (!a.empty() && ideg(a) >= db) {
    int d = ideg(a);
    Integer t = a.back();
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[d - db + j] -= t * b[j];
    itrim(a);
    --e;
  }
  if (e > 0) {
    Integer m;
    mpz_pow_ui(m.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : a) c *= m;
  }
  return a;
}

Integer ipow(const Integer& b, long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

PolyQ poly_gcd(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  // Primitive PRS over Z keeps coefficients small.
  IntPoly x = to_intpoly_scaled(a), y = to_intpoly_scaled(b);
  if (ideg(x) < ideg(y)) std::swap(x, y);
  while (!y.empty()) {
    IntPoly r = pseudo_rem(x, y);
    x = std::move(y);
    if (!r.empty()) {
      Integer c = int_content(r);
      for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    }
    y = std::move(r);
  }
  return to_polyq(x).monic();
}

ExtendedGcd poly_ext_gcd(const PolyQ& a, const PolyQ& b) {
  PolyQ r0 = a, r1 = b, s0 = PolyQ::constant(1), s1, t0, t1 = PolyQ::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    PolyQ s2 = s0 - q * s1;
    PolyQ t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {PolyQ{}, PolyQ{}, PolyQ{}};
  Rational inv = 1 / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

// -- Integer helpers -------------------------------------------------------------

std::pair<Rational, IntPoly> primitive_part(const PolyQ& f) {
  if (f.is_zero()) return {Rational(0), {}};
  Integer den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IntPoly v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(c.get_num() * (den / c.get_den()));
  Integer g = int_content(v);
  if (v.back() < 0) g = -g;
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  Rational content(g, den);
  content.canonicalize();
  return {content, v};
}

PolyQ to_polyq(const IntPoly& f) {
  std::vector<Rational> v;
  v.reserve(f.size());
  for (const auto& c : f) v.emplace_back(c);
  return PolyQ(std::move(v));
}

Integer int_content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& c : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Integer int_resultant(IntPoly a, IntPoly b) {
  itrim(a);
  itrim(b);
  if (a.empty() || b.empty()) throw DomainError("resultant of the zero polynomial");
  int da = ideg(a), db = ideg(b);
  if (da == 0) return ipow(a[0], db);
  if (db == 0) return ipow(b[0], da);
  Integer ca = int_content(a), cb = int_content(b);
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
  for (auto& c : b) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
  Integer t = ipow(ca, db) * ipow(cb, da);
  int s = 1;
  if (da < db) {
    std::swap(a, b);
    if ((da & 1) && (db & 1)) s = -1;
  }
  Integer g = 1, h = 1;
  while (true) {
    int dA = ideg(a), dB = ideg(b);
    int delta = dA - dB;
    if ((dA & 1) && (dB & 1)) s = -s;
    IntPoly r = pseudo_rem(a, b);
    if (r.empty()) return 0;
    a = std::move(b);
    Integer div = g * ipow(h, delta);
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
    b = std::move(r);
    g = a.back();
    // h = g^delta / h^(delta - 1)
    if (delta > 0) {
      Integer num = ipow(g, delta);
      Integer den = ipow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (ideg(b) == 0) {
      int dA2 = ideg(a);
      Integer num = ipow(b[0], dA2);
      Integer den = ipow(h, dA2 - 1);
      Integer hh;
      mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return s * t * hh;
    }
  }
}

Rational poly_resultant(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("resultant of the zero polynomial");
  auto [ca, pa] = primitive_part(a);
  auto [cb, pb] = primitive_part(b);
  Rational r(int_resultant(pa, pb));
  // Res(ca*A, cb*B) = ca^deg B * cb^deg A * Res(A, B)
  auto qpow = [](const Rational& q, int e) {
    Rational out(1);
    for (int i = 0; i < e; ++i) out *= q;
    return out;
  };
  return qpow(ca, b.degree()) * qpow(cb, a.degree()) * r;
}

Rational poly_discriminant(const PolyQ& f) {
  int n = f.degree();
  if (n < 2) throw DomainError("discriminant needs degree >= 2");
  Rational r = poly_resultant(f, f.derivative()) / f.lc();
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

// -- Squarefree ----------------------------------------------------------------

std::vector<std::pair<PolyQ, int>> squarefree_decomposition(const PolyQ& f) {
  std::vector<std::pair<PolyQ, int>> out;
  if (f.degree() < 1) return out;
  PolyQ fm = f.monic();
  PolyQ d = fm.derivative();
  PolyQ a = poly_gcd(fm, d);
  PolyQ b = exact_quotient(fm, a);
  PolyQ c = exact_quotient(d, a);
  PolyQ e = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    PolyQ g = poly_gcd(b, e);
    PolyQ bn = exact_quotient(b, g);
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    c = exact_quotient(e, g);
    b = bn;
    e = c - b.derivative();
    ++i;
  }
  return out;
}

PolyQ squarefree_part(const PolyQ& f) {
  if (f.degree() < 1) return PolyQ::constant(1);
  PolyQ fm = f.monic();
  return exact_quotient(fm, poly_gcd(fm, fm.derivative())).monic();
}

// -- Cyclotomic, roots, totient ------------------------------------------------------

PolyQ interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  std::size_t n = xs.size();
  if (ys.size() != n) throw DomainError("interpolation needs matching point lists");
  // Newton divided differences, then expansion by Horner.
  std::vector<Rational> c(ys);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
  PolyQ r;
  for (std::size_t i = n; i-- > 0;) {
    r *= PolyQ::linear_root(xs[i]);
    r += PolyQ::constant(c[i]);
  }
  return r;
}

long euler_phi(long m) {
  if (m <= 0) throw DomainError("totient of a non-positive integer");
  long r = m;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    r -= r / p;
  }
  if (m > 1) r -= r / m;
  return r;
}

PolyQ cyclotomic_poly(int m) {
  if (m <= 0) throw DomainError("cyclotomic polynomial index must be positive");
  // Phi_m = prod_{d | m} (x^d - 1)^mu(m/d)
  auto mobius = [](int n) {
    int r = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      r = -r;
    }
    if (n > 1) r = -r;
    return r;
  };
  PolyQ num = PolyQ::constant(1), den = PolyQ::constant(1);
  for (int d = 1; d <= m; ++d) {
    if (m % d) continue;
    int mu = mobius(m / d);
    if (mu == 0) continue;
    PolyQ t = PolyQ::monomial(1, d) - PolyQ::constant(1);
    (mu > 0 ? num : den) *= t;
  }
  return exact_quotient(num, den);
}

std::vector<Rational> rational_roots(const PolyQ& f) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  std::vector<Rational> roots;
  if (f.degree() < 1) return roots;
  for (const auto& fac : factor_over_Q(f).factors)
    if (fac.poly.degree() == 1) roots.push_back(-fac.poly.coeff(0));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace torsiongate
