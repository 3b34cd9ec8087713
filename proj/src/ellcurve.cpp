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


#include "torsiongate/ellcurve.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "torsiongate/errors.hpp"

namespace torsiongate {

// -- Points -----------------------------------------------------------------------------

bool operator<(const CurvePoint& a, const CurvePoint& b) {
  if (a.infinity || b.infinity) return a.infinity && !b.infinity;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

std::string CurvePoint::to_string() const {
  if (infinity) return "O";
  return "(" + x.to_string() + ", " + y.to_string() + ")";
}

// -- Curve ---------------------------------------------------------------------------------

namespace {

FieldElement in_field(const NumberField& K, const FieldElement& e) {
  if (e.field() == K) return e;
  if (e.field().is_rational()) return K.from_rational(e.to_rational());
  throw DomainError("curve coefficient from a different field");
}

}  // namespace

Curve::Curve(NumberField K, std::array<FieldElement, 5> a) : K_(std::move(K)), a_(std::move(a)) {
  for (auto& c : a_) c = in_field(K_, c);
  A_ = c4() * make_rational(-1, 48);
  B_ = c6() * make_rational(-1, 864);
  if (discriminant().is_zero()) throw DomainError("singular curve: discriminant is 0");
}

Curve Curve::over_Q(const std::array<Rational, 5>& a) {
  NumberField Q;
  return Curve(Q, {Q.from_rational(a[0]), Q.from_rational(a[1]), Q.from_rational(a[2]),
                   Q.from_rational(a[3]), Q.from_rational(a[4])});
}

Curve Curve::short_model(const NumberField& K, const FieldElement& A, const FieldElement& B) {
  return Curve(K, {K.zero(), K.zero(), K.zero(), A, B});
}

bool Curve::is_short() const { return a_[0].is_zero() && a_[1].is_zero() && a_[2].is_zero(); }

bool Curve::is_rational() const {
  return std::all_of(a_.begin(), a_.end(), [](const FieldElement& e) { return e.is_rational(); });
}

FieldElement Curve::b2() const { return a_[0] * a_[0] + a_[1] * Rational(4); }

FieldElement Curve::c4() const {
  FieldElement b2v = b2();
  FieldElement b4 = a_[3] * Rational(2) + a_[0] * a_[2];
  return b2v * b2v - b4 * Rational(24);
}

FieldElement Curve::c6() const {
  FieldElement b2v = b2();
  FieldElement b4 = a_[3] * Rational(2) + a_[0] * a_[2];
  FieldElement b6 = a_[2] * a_[2] + a_[4] * Rational(4);
  return -(b2v * b2v * b2v) + b2v * b4 * Rational(36) - b6 * Rational(216);
}

FieldElement Curve::discriminant() const {
  const auto& [a1, a2, a3, a4, a6] = a_;
  FieldElement b2v = b2();
  FieldElement b4 = a4 * Rational(2) + a1 * a3;
  FieldElement b6 = a3 * a3 + a6 * Rational(4);
  FieldElement b8 = a1 * a1 * a6 + a2 * a6 * Rational(4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -(b2v * b2v * b8) - b4 * b4 * b4 * Rational(8) - b6 * b6 * Rational(27) +
         b2v * b4 * b6 * Rational(9);
}

Curve Curve::to_short_weierstrass() const { return short_model(K_, A_, B_); }

PolyNF Curve::cubic() const { return PolyNF(K_, {B_, A_, K_.zero(), K_.one()}); }

Curve Curve::base_change(const Embedding& e) const {
  if (e.source() != K_) throw DomainError("base change: embedding source is not the curve field");
  std::array<FieldElement, 5> b;
  for (std::size_t i = 0; i < 5; ++i) b[i] = e(a_[i]);
  return Curve(e.target(), b);
}

std::pair<FieldElement, FieldElement> Curve::to_long(const CurvePoint& P) const {
  if (P.infinity) throw DomainError("the point at infinity has no affine coordinates");
  FieldElement X = P.x - b2() * make_rational(1, 12);
  FieldElement Y = P.y - (a_[0] * X + a_[2]) * make_rational(1, 2);
  return {X, Y};
}

CurvePoint Curve::from_long(const FieldElement& X, const FieldElement& Y) const {
  CurvePoint P = CurvePoint::affine(X + b2() * make_rational(1, 12), Y + (a_[0] * X + a_[2]) * make_rational(1, 2));
  if (!on_curve(*this, P)) throw DomainError("point is not on the curve");
  return P;
}

std::string Curve::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < 5; ++i) os << (i ? ", " : "") << a_[i].to_string();
  os << "]";
  if (!K_.is_rational()) os << " over " << K_.label();
  return os.str();
}

// -- Group law ---------------------------------------------------------------------------------

bool on_curve(const Curve& E, const CurvePoint& P) {
  if (P.infinity) return true;
  return P.y * P.y == P.x * P.x * P.x + E.short_a() * P.x + E.short_b();
}

CurvePoint negate(const Curve&, const CurvePoint& P) {
  if (P.infinity) return P;
  return CurvePoint::affine(P.x, -P.y);
}

CurvePoint add(const Curve& E, const CurvePoint& P, const CurvePoint& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  FieldElement lambda;
  if (P.x == Q.x) {
    if (P.y == -Q.y) return CurvePoint::at_infinity();
    lambda = (P.x * P.x * Rational(3) + E.short_a()) / (P.y * Rational(2));
  } else {
    lambda = (Q.y - P.y) / (Q.x - P.x);
  }
  FieldElement x3 = lambda * lambda - P.x - Q.x;
  FieldElement y3 = lambda * (P.x - x3) - P.y;
  return CurvePoint::affine(std::move(x3), std::move(y3));
}

CurvePoint mul_scalar(const Curve& E, long n, const CurvePoint& P) {
  if (n < 0) return negate(E, mul_scalar(E, -n, P));
  CurvePoint r = CurvePoint::at_infinity(), b = P;
  while (n) {
    if (n & 1) r = add(E, r, b);
    n >>= 1;
    if (n) b = add(E, b, b);
  }
  return r;
}

long point_order(const Curve& E, const CurvePoint& P, long bound) {
  CurvePoint Q = P;
  for (long k = 1; k <= bound; ++k) {
    if (Q.infinity) return k;
    Q = add(E, Q, P);
  }
  return 0;
}

CurvePoint map_point(const Embedding& e, const CurvePoint& P) {
  if (P.infinity) return P;
  return CurvePoint::affine(e(P.x), e(P.y));
}

// -- Division polynomials --------------------------------------------------------------------

namespace {

template <class P, class Const>
class PsiEngine {
 public:
  PsiEngine(P f, P x, P a, P b, Const constant) : f_(f), x_(x), a_(a), b_(b), c_(constant) {}

  const P& get(int n) {
    if (n < 0) throw DomainError("division polynomial index must be non-negative");
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    P r;
    if (n == 0) {
      r = c_(0);
    } else if (n == 1 || n == 2) {
      r = c_(1);
    } else if (n == 3) {
      P x2 = x_ * x_;
      r = c_(3) * x2 * x2 + c_(6) * a_ * x2 + c_(12) * b_ * x_ - a_ * a_;
    } else if (n == 4) {
      P x2 = x_ * x_, x3 = x2 * x_;
      r = c_(2) * (x3 * x3 + c_(5) * a_ * x2 * x2 + c_(20) * b_ * x3 - c_(5) * a_ * a_ * x2 -
                   c_(4) * a_ * b_ * x_ - c_(8) * b_ * b_ - a_ * a_ * a_);
    } else if (n % 2 == 1) {
      int m = (n - 1) / 2;
      P u = get(m + 2) * cube(get(m));
      P v = get(m - 1) * cube(get(m + 1));
      P ff = c_(16) * f_ * f_;
      r = (m % 2 == 0) ? ff * u - v : u - ff * v;
    } else {
      int m = n / 2;
      P s1 = get(m + 2) * get(m - 1) * get(m - 1);
      P s2 = get(m - 2) * get(m + 1) * get(m + 1);
      r = get(m) * (s1 - s2);
    }
    return memo_.emplace(n, std::move(r)).first->second;
  }

  P phi(int n) {
    const P& h = get(n);
    if (n % 2) return x_ * h * h - c_(4) * f_ * get(n + 1) * get(n - 1);
    return c_(4) * f_ * x_ * h * h - get(n + 1) * get(n - 1);
  }

  P psi_squared(int n) {
    const P& h = get(n);
    if (n % 2) return h * h;
    return c_(4) * f_ * h * h;
  }

  const P& f() const { return f_; }

 private:
  static P cube(const P& p) { return p * p * p; }
  P f_, x_, a_, b_;
  Const c_;
  std::map<int, P> memo_;  // node-based: references survive later inserts
};

struct QConst {
  PolyQ operator()(long v) const { return PolyQ::constant(v); }
};
struct NFConst {
  NumberField K;
  PolyNF operator()(long v) const { return PolyNF(K, {K.from_rational(v)}); }
};

PolyNF lift_q(const NumberField& K, const PolyQ& f) { return PolyNF::from_q(K, f); }

}  // namespace

struct DivisionPolynomialsImpl {
  std::optional<PsiEngine<PolyQ, QConst>> q;
  std::optional<PsiEngine<PolyNF, NFConst>> nf;
};

DivisionPolynomials::DivisionPolynomials(const Curve& E)
    : E_(E.to_short_weierstrass()), f_(E_.cubic()), impl_(std::make_shared<DivisionPolynomialsImpl>()) {
  if (E_.short_a().is_rational() && E_.short_b().is_rational()) {
    Rational a = E_.short_a().to_rational(), b = E_.short_b().to_rational();
    PolyQ f({b, a, Rational(0), Rational(1)});
    impl_->q.emplace(f, PolyQ{0, 1}, PolyQ::constant(a), PolyQ::constant(b), QConst{});
  } else {
    const NumberField& K = E_.field();
    impl_->nf.emplace(f_, PolyNF(K, {K.zero(), K.one()}), PolyNF(K, {E_.short_a()}), PolyNF(K, {E_.short_b()}),
                      NFConst{K});
  }
}

const PolyNF& DivisionPolynomials::psi_hat(int n) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = memo_.find(n);
  if (it == memo_.end()) {
    auto& eng = *impl_;
    it = memo_.emplace(n, eng.q ? lift_q(E_.field(), eng.q->get(n)) : eng.nf->get(n)).first;
  }
  return it->second;
}

PolyNF DivisionPolynomials::division_poly(int n) {
  if (n <= 0) throw DomainError("division polynomial index must be positive");
  if (n % 2) return psi_hat(n);
  return f_ * psi_hat(n);
}

PolyNF DivisionPolynomials::phi(int n) {
  std::lock_guard<std::mutex> lock(mu_);
  auto& eng = *impl_;
  return eng.q ? lift_q(E_.field(), eng.q->phi(n)) : eng.nf->phi(n);
}

PolyNF DivisionPolynomials::psi_squared(int n) {
  std::lock_guard<std::mutex> lock(mu_);
  auto& eng = *impl_;
  return eng.q ? lift_q(E_.field(), eng.q->psi_squared(n)) : eng.nf->psi_squared(n);
}

PolyNF DivisionPolynomials::division_by(int n, const FieldElement& xP) {
  PolyNF ph = phi(n), ps = psi_squared(n);
  if (xP.field() == E_.field() || xP.field().is_rational()) return ph - in_field(E_.field(), xP) * ps;
  throw DomainError("division_by: point coordinate outside the curve field");
}

PolyNF division_poly(int n, const Curve& E) {
  DivisionPolynomials dp(E);
  return dp.division_poly(n);
}

// -- Group structure ----------------------------------------------------------------------

std::vector<CurvePoint> generate_group(const Curve& E, const std::vector<CurvePoint>& gens, std::size_t cap) {
  std::set<CurvePoint> seen{CurvePoint::at_infinity()};
  std::vector<CurvePoint> queue{CurvePoint::at_infinity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      CurvePoint t = add(E, queue[i], g);
      if (seen.insert(t).second) {
        if (seen.size() > cap) throw EnumerationCapExceeded("point group exceeds enumeration cap");
        queue.push_back(t);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

TorsionData group_structure(const Curve& E, std::vector<CurvePoint> points) {
  std::sort(points.begin(), points.end());
  TorsionData t;
  t.field = E.field();
  long N = static_cast<long>(points.size());
  std::vector<long> orders;
  for (const auto& P : points) orders.push_back(point_order(E, P, N));
  long n = *std::max_element(orders.begin(), orders.end());
  t.n = n;
  t.m = N / n;
  t.points = points;
  std::size_t i1 = 0;
  while (orders[i1] != n) ++i1;
  const CurvePoint& P1 = points[i1];
  if (n > 1) t.generators.push_back(P1);
  if (t.m > 1) {
    auto cyc = generate_group(E, {P1});
    std::set<CurvePoint> c1(cyc.begin(), cyc.end());
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (orders[i] != t.m) continue;
      auto c2 = generate_group(E, {points[i]});
      bool trivial = std::all_of(c2.begin(), c2.end(),
                                 [&](const CurvePoint& Q) { return Q.infinity || !c1.count(Q); });
      if (trivial) {
        t.generators.push_back(points[i]);
        break;
      }
    }
    if (t.generators.size() != 2) throw Error("group structure: no complement generator found");
  }
  if (t.n % t.m != 0) throw Error("group structure: invariants do not divide");
  return t;
}

std::string TorsionData::structure() const {
  if (m == 1 && n == 1) return "trivial";
  if (m == 1) return "Z/" + std::to_string(n);
  return "Z/" + std::to_string(m) + " x Z/" + std::to_string(n);
}

// -- Torsion ----------------------------------------------------------------------------------

namespace {

struct TorsionContext {
  Curve E;   // short model over K
  Curve EL;  // short model over L
  const Embedding& emb;
  std::shared_ptr<DivisionPolynomials> dp;
  const FieldOptions& fopts;
  bool rational;
};

std::vector<CurvePoint> points_above(const TorsionContext& c, const FieldElement& x0) {
  FieldElement v = x0 * x0 * x0 + c.EL.short_a() * x0 + c.EL.short_b();
  if (v.is_zero()) return {CurvePoint::affine(x0, v)};
  auto w = is_square(v, c.fopts);
  if (!w) return {};
  return {CurvePoint::affine(x0, *w), CurvePoint::affine(x0, -*w)};
}

std::vector<FieldElement> roots_in_L(const TorsionContext& c, const PolyNF& fK) {
  if (fK.is_rational()) return roots_in_field(fK.to_q(), c.EL.field(), c.fopts);
  return roots_in_field(c.emb(fK), c.fopts);
}

std::optional<CurvePoint> divide_point(const TorsionContext& c, int ell, const CurvePoint& P) {
  PolyNF D(c.EL.field());
  if (P.x.is_rational()) {
    D = c.emb(c.dp->division_by(ell, c.E.field().from_rational(P.x.to_rational())));
  } else {
    D = c.emb(c.dp->phi(ell)) - P.x * c.emb(c.dp->psi_squared(ell));
  }
  std::vector<FieldElement> xs = D.is_rational() ? roots_in_field(D.to_q(), c.EL.field(), c.fopts)
                                                 : roots_in_field(D, c.fopts);
  for (const auto& x0 : xs) {
    for (const auto& Q : points_above(c, x0)) {
      CurvePoint R = mul_scalar(c.EL, ell, Q);
      if (R == P) return Q;
      if (R == negate(c.EL, P)) return negate(c.EL, Q);
    }
  }
  return std::nullopt;
}

TorsionContext make_context(const Curve& E, const Embedding& emb, const TorsionOptions& opts) {
  if (emb.source() != E.field()) throw DomainError("embedding source is not the curve field");
  Curve Es = E.to_short_weierstrass();
  Curve EL = Es.base_change(emb);
  std::shared_ptr<DivisionPolynomials> dp = opts.cache;
  if (!dp || !(dp->curve().short_a() == Es.short_a() && dp->curve().short_b() == Es.short_b()))
    dp = std::make_shared<DivisionPolynomials>(Es);
  bool rational = Es.short_a().is_rational() && Es.short_b().is_rational();
  return TorsionContext{Es, EL, emb, dp, opts.field, rational};
}

long ell_order(const Curve& E, const CurvePoint& P, int ell) {
  long ord = 1;
  CurvePoint Q = P;
  while (!Q.infinity) {
    Q = mul_scalar(E, ell, Q);
    ord *= ell;
    if (ord > (1L << 40)) throw Error("point is not of ell-power order");
  }
  return ord;
}

}  // namespace

TorsionData ell_power_torsion(const Curve& E, const Embedding& emb, int ell, int k,
                              const TorsionOptions& opts) {
  if (ell < 2 || !modp::is_prime(static_cast<std::uint64_t>(ell))) throw DomainError("ell must be prime");
  if (k < 1) throw DomainError("torsion level must be positive");
  TorsionContext c = make_context(E, emb, opts);
  std::vector<CurvePoint> group{CurvePoint::at_infinity()};
  for (const auto& x0 : roots_in_L(c, c.dp->division_poly(ell)))
    for (auto& P : points_above(c, x0)) group.push_back(P);
  std::sort(group.begin(), group.end());
  long level_order = ell;
  for (int level = 2; level <= k && group.size() > 1; ++level) {
    std::vector<CurvePoint> gens;
    std::vector<CurvePoint> current = group;
    std::set<CurvePoint> ell_multiples;
    auto refresh = [&]() {
      ell_multiples.clear();
      for (const auto& Q : current) ell_multiples.insert(mul_scalar(c.EL, ell, Q));
    };
    refresh();
    for (const auto& P : group) {
      if (P.infinity || ell_order(c.EL, P, ell) != level_order) continue;
      if (ell_multiples.count(P)) continue;
      if (auto Q = divide_point(c, ell, P)) {
        std::vector<CurvePoint> g(current.begin(), current.end());
        g.push_back(*Q);
        current = generate_group(c.EL, g);
        refresh();
      }
    }
    if (current.size() == group.size()) break;
    group = std::move(current);
    level_order *= ell;
  }
  return group_structure(c.EL, group);
}

TorsionData ell_primary_torsion(const Curve& E, const Embedding& emb, int ell, const TorsionOptions& opts) {
  Curve EL = E.base_change(emb);
  long B = torsion_bound(EL).bound;
  int k = 0;
  while (B % ell == 0) {
    B /= ell;
    ++k;
  }
  if (k == 0) {
    TorsionData t;
    t.field = emb.target();
    t.points = {CurvePoint::at_infinity()};
    return t;
  }
  return ell_power_torsion(E, emb, ell, k, opts);
}

TorsionData torsion_subgroup(const Curve& E, const Embedding& emb, const TorsionOptions& opts) {
  Curve EL = E.base_change(emb);
  long B = torsion_bound(EL).bound;
  std::vector<CurvePoint> gens;
  Curve ELs = EL.to_short_weierstrass();
  for (long ell = 2; ell <= B; ++ell) {
    if (B % ell || !modp::is_prime(static_cast<std::uint64_t>(ell))) continue;
    int k = 0;
    long b = B;
    while (b % ell == 0) {
      b /= ell;
      ++k;
    }
    auto part = ell_power_torsion(E, emb, static_cast<int>(ell), k, opts);
    gens.insert(gens.end(), part.generators.begin(), part.generators.end());
  }
  return group_structure(ELs, generate_group(ELs, gens));
}

// -- Reduction and point counting -------------------------------------------------------------

namespace {

constexpr std::uint64_t kMaxResidueField = 20000;

// F_q = F_p[t]/(g) with log tables; elements are integers in [0, q) read as
// base-p digit vectors.
class GFq {
 public:
  GFq(std::uint64_t p, const modp::Poly& g) : p_(p), g_(modp::monic(g, p)) {
    f_ = modp::degree(g_);
    q_ = 1;
    for (int i = 0; i < f_; ++i) q_ *= p;
    if (q_ > kMaxResidueField) throw EnumerationCapExceeded("residue field larger than 20000");
    log_.assign(q_, 0);
    exp_.assign(q_ - 1, 0);
    std::vector<std::uint64_t> primes;
    std::uint64_t n = q_ - 1;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        primes.push_back(d);
        while (n % d == 0) n /= d;
      }
    if (n > 1) primes.push_back(n);
    for (std::uint64_t cand = 1; cand < q_; ++cand) {
      modp::Poly c = to_poly(cand);
      if (c.empty()) continue;
      bool primitive = true;
      for (auto r : primes) {
        modp::Poly e = modp::powmod(c, Integer(static_cast<unsigned long>((q_ - 1) / r)), g_, p_);
        if (e == modp::Poly{1}) {
          primitive = false;
          break;
        }
      }
      if (!primitive) continue;
      modp::Poly cur{1};
      for (std::uint64_t i = 0; i < q_ - 1; ++i) {
        std::uint64_t idx = from_poly(cur);
        exp_[i] = idx;
        log_[idx] = i;
        cur = modp::rem(modp::mul(cur, c, p_), g_, p_);
      }
      return;
    }
    throw Error("no primitive element found in residue field");
  }

  std::uint64_t q() const { return q_; }

  std::uint64_t from_poly(const modp::Poly& a) const {
    std::uint64_t r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = r * p_ + a[i];
    return r;
  }
  modp::Poly to_poly(std::uint64_t v) const {
    modp::Poly a;
    while (v) {
      a.push_back(v % p_);
      v /= p_;
    }
    return a;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0, scale = 1;
    while (a || b) {
      r += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return r;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (!a || !b) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  /// 1 for nonzero squares, -1 for non-squares, 0 for zero.
  int chi(std::uint64_t a) const {
    if (!a) return 0;
    return (log_[a] % 2 == 0) ? 1 : -1;
  }

 private:
  std::uint64_t p_;
  modp::Poly g_;
  int f_;
  std::uint64_t q_;
  std::vector<std::uint64_t> log_, exp_;
};

// Image of a field element in F_p[t]/(g); nullopt if not p-integral.
std::optional<std::uint64_t> reduce_element(const FieldElement& a, std::uint64_t p, const modp::Poly& g,
                                            const GFq& F) {
  modp::Poly v;
  for (const auto& c : a.coords()) {
    auto r = modp::reduce(c, p);
    if (!r) return std::nullopt;
    v.push_back(*r);
  }
  modp::trim(v);
  return F.from_poly(modp::rem(v, modp::monic(g, p), p));
}

std::uint64_t count_short(const GFq& F, std::uint64_t A, std::uint64_t B) {
  std::uint64_t N = 1;
  long sum = 0;
  for (std::uint64_t x = 0; x < F.q(); ++x) {
    std::uint64_t v = F.add(F.add(F.mul(F.mul(x, x), x), F.mul(A, x)), B);
    sum += 1 + F.chi(v);
  }
  return N + static_cast<std::uint64_t>(sum);
}

// Reduced short model at (p, g), or nullopt when not integral / singular.
std::optional<std::pair<std::uint64_t, std::uint64_t>> reduce_short(const Curve& E, std::uint64_t p,
                                                                    const modp::Poly& g, const GFq& F) {
  auto A = reduce_element(E.short_a(), p, g, F);
  auto B = reduce_element(E.short_b(), p, g, F);
  if (!A || !B) return std::nullopt;
  // 4A^3 + 27B^2
  std::uint64_t four = 4 % p, tw7 = 27 % p;
  std::uint64_t d = F.add(F.mul(four, F.mul(F.mul(*A, *A), *A)), F.mul(tw7, F.mul(*B, *B)));
  if (d == 0) return std::nullopt;
  return std::make_pair(*A, *B);
}

}  // namespace

std::uint64_t count_points_at(const Curve& E, std::uint64_t p, const modp::Poly& g) {
  if (p < 5) throw DomainError("residue characteristic must be at least 5");
  GFq F(p, g);
  auto ab = reduce_short(E, p, g, F);
  if (!ab) throw DomainError("bad reduction at p = " + std::to_string(p));
  return count_short(F, ab->first, ab->second);
}

namespace {

modp::Poly irreducible_of_degree(std::uint64_t p, int f) {
  if (f == 1) return {0, 1};
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(f), 0);
  while (true) {
    modp::Poly g(digits.begin(), digits.end());
    g.push_back(1);
    if (g[0] != 0 && modp::factor_degrees(g, p) == std::vector<int>{f}) return g;
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) throw Error("no irreducible polynomial found");
  }
}

}  // namespace

std::uint64_t count_points(const Curve& E, std::uint64_t p, int f) {
  if (!E.field().is_rational()) throw DomainError("count_points expects a curve over Q");
  if (!modp::is_prime(p)) throw DomainError("p must be prime");
  if (p >= 5) return count_points_at(E, p, irreducible_of_degree(p, f));
  if (f != 1) throw DomainError("extension counting needs p >= 5");
  // Small characteristic: brute force on the long model.
  std::array<std::uint64_t, 5> a{};
  for (std::size_t i = 0; i < 5; ++i) {
    auto r = modp::reduce(E.a_invariants()[i].to_rational(), p);
    if (!r) throw DomainError("long model not integral at p = " + std::to_string(p));
    a[i] = *r;
  }
  auto disc = modp::reduce(E.discriminant().to_rational(), p);
  if (!disc || *disc == 0) throw DomainError("bad reduction at p = " + std::to_string(p));
  std::uint64_t N = 1;
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y) {
      std::uint64_t lhs = (y * y + a[0] * x * y + a[2] * y) % p;
      std::uint64_t rhs = (x * x * x + a[1] * x * x + a[3] * x + a[4]) % p;
      if (lhs == rhs) ++N;
    }
  return N;
}

long frobenius_trace(const Curve& E, std::uint64_t p) {
  return static_cast<long>(p) + 1 - static_cast<long>(count_points(E, p, 1));
}

TorsionBound torsion_bound(const Curve& E) {
  const NumberField& L = E.field();
  const auto& d = L.data();
  TorsionBound tb;
  long g = 0;
  std::mt19937_64 rng(99);
  for (std::uint64_t p = 5; tb.primes.size() < 5; p = modp::next_prime(p)) {
    if (p > 5000) throw Error("torsion bound: fewer than five admissible primes below 5000");
    if (mpz_divisible_ui_p(d.discriminant.get_num_mpz_t(), p) ||
        mpz_divisible_ui_p(d.discriminant.get_den_mpz_t(), p))
      continue;
    auto mp = modp::reduce(d.defining_poly, p);
    if (!mp) continue;
    std::vector<modp::Poly> primes_above =
        L.is_rational() ? std::vector<modp::Poly>{{0, 1}} : modp::factor_squarefree(*mp, p, rng);
    bool used = false;
    for (const auto& gp : primes_above) {
      std::uint64_t q = 1;
      for (int i = 0; i < modp::degree(gp); ++i) q *= p;
      if (q > kMaxResidueField) continue;
      GFq F(p, gp);
      auto ab = reduce_short(E, p, gp, F);
      if (!ab) continue;
      long N = static_cast<long>(count_short(F, ab->first, ab->second));
      g = std::gcd(g, N);
      used = true;
    }
    if (used) tb.primes.push_back(p);
  }
  tb.bound = g;
  return tb;
}

// -- Saturation ---------------------------------------------------------------------------------

namespace {

struct Tower {
  NumberField F;
  std::shared_ptr<Embedding> from_base;  // K -> F
  Curve EF;                              // short model over F
  std::vector<CurvePoint> points;        // points to carry along

  void extend(const Compositum& c) {
    Embedding step = c.embedding;
    for (auto& P : points) P = map_point(step, P);
    from_base = std::make_shared<Embedding>(from_base->then(step));
    EF = EF.base_change(step);
    F = c.field;
  }
};

PolyNF div_exact_nf(const PolyNF& a, const PolyNF& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("internal: inexact division of polynomials");
  return q;
}

// Adjoins a root of the smallest irreducible factor of D and a matching y.
CurvePoint adjoin_point(Tower& t, const PolyNF& D, const FieldOptions& fo) {
  auto facs = factor_over_nf(D, fo);
  if (facs.empty()) throw Error("internal: nothing to adjoin");
  const PolyNF& h = facs.front().poly;
  FieldElement x0;
  if (h.degree() == 1) {
    x0 = -h.coeff(0);
  } else {
    auto c = adjoin_root(h, fo);
    t.extend(c);
    x0 = c.root;
  }
  FieldElement v = x0 * x0 * x0 + t.EF.short_a() * x0 + t.EF.short_b();
  if (v.is_zero()) return CurvePoint::affine(x0, v);
  if (auto w = is_square(v, fo)) return CurvePoint::affine(x0, *w);
  auto c = adjoin_root(PolyNF(t.F, {-v, t.F.zero(), t.F.one()}), fo);
  t.extend(c);
  x0 = c.embedding(x0);
  return CurvePoint::affine(x0, c.root);
}

}  // namespace

TorsionBasis torsion_basis(const Curve& E, int ell, const TorsionOptions& opts) {
  if (ell < 2 || !modp::is_prime(static_cast<std::uint64_t>(ell))) throw DomainError("ell must be prime");
  const NumberField& K = E.field();
  const FieldOptions& fo = opts.field;
  Tower t{K, std::make_shared<Embedding>(Embedding::identity(K)), E.to_short_weierstrass(), {}};
  CurvePoint T1 = adjoin_point(t, DivisionPolynomials(t.EF).division_poly(ell), fo);
  t.points.push_back(T1);
  // Remove the x-coordinates of the multiples of T1; what remains carries the rest of E[ell].
  PolyNF D = DivisionPolynomials(t.EF).division_poly(ell);
  std::set<FieldElement> xs;
  for (long i = 1; i < ell; ++i) xs.insert(mul_scalar(t.EF, i, T1).x);
  for (const auto& x : xs) D = div_exact_nf(D, PolyNF(t.F, {-x, t.F.one()}));
  CurvePoint T2 = adjoin_point(t, D, fo);
  return TorsionBasis{t.F, t.from_base, t.EF, t.points.front(), T2};
}

Saturation saturate(const Curve& E, int ell, int k, const TorsionOptions& opts) {
  if (k < 0) throw DomainError("saturation level must be non-negative");
  const NumberField& K = E.field();
  Embedding id = Embedding::identity(K);
  TorsionData T0 = ell_primary_torsion(E, id, ell, opts);
  if (k == 0) {
    Curve Es = E.to_short_weierstrass();
    return Saturation{E, ell, 0, T0.generators, K, std::make_shared<Embedding>(id), Es};
  }
  const FieldOptions& fo = opts.field;
  TorsionBasis B = torsion_basis(E, ell, opts);
  Tower t{B.field, B.embedding, B.curve, {B.P, B.Q}};
  for (const auto& g : T0.generators) t.points.push_back(map_point(*B.embedding, g));
  const std::size_t nbase = 2;  // t.points[0..1] is a basis of E[ell]
  for (int level = 1; level <= k; ++level) {
    std::size_t nold = t.points.size() - nbase;
    for (std::size_t i = 0; i < nold; ++i) {
      // Old generator i sits at t.points[nbase + i]; extensions remap it in place.
      CurvePoint g = t.points[nbase + i];
      DivisionPolynomials dp(t.EF);
      PolyNF D = dp.phi(ell) - g.x * dp.psi_squared(ell);
      CurvePoint Q = adjoin_point(t, D, fo);
      g = t.points[nbase + i];
      CurvePoint R = mul_scalar(t.EF, ell, Q);
      if (R == negate(t.EF, g)) Q = negate(t.EF, Q);
      else if (R != g) throw Error("internal: division point does not divide");
      t.points.push_back(Q);
    }
    // Keep the basis and the new lifts.
    t.points.erase(t.points.begin() + static_cast<long>(nbase), t.points.begin() + static_cast<long>(nbase + nold));
  }
  Saturation s{E, ell, k, {}, t.F, t.from_base, t.EF};
  s.generators = group_structure(t.EF, generate_group(t.EF, t.points)).generators;
  return s;
}

}  // namespace torsiongate
