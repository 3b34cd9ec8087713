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


#include "torsiongate/modp.hpp"

#include <algorithm>

#include "torsiongate/errors.hpp"

namespace torsiongate::modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw DomainError("inverse of zero modulo p");
  // extended Euclid on signed values
  long long t = 0, nt = 1, r = static_cast<long long>(p), nr = static_cast<long long>(a);
  while (nr) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  ++n;
  while (!is_prime(n)) ++n;
  return n;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  // Accumulate a few products before reducing: each product < 2^62.
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, std::uint64_t c, std::uint64_t p) {
  Poly r(a);
  for (auto& v : r) v = v * c % p;
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p) {
  if (b.empty()) throw DomainError("polynomial division by zero modulo p");
  int db = degree(b);
  if (degree(a) < db) return {Poly{}, a};
  Poly r(a), q(static_cast<std::size_t>(degree(a) - db) + 1, 0);
  std::uint64_t il = inv(b.back(), p);
  for (int i = degree(a); i >= db; --i) {
    std::uint64_t t = r[i] * il % p;
    if (t == 0) continue;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + (p - t) * b[j]) % p;
  }
  r.resize(static_cast<std::size_t>(db));
  trim(r);
  trim(q);
  return {q, r};
}

Poly rem(const Poly& a, const Poly& b, std::uint64_t p) {
  int db = degree(b);
  if (db < 0) throw DomainError("polynomial division by zero modulo p");
  if (degree(a) < db) return a;
  Poly r(a);
  std::uint64_t il = inv(b.back(), p);
  for (int i = degree(a); i >= db; --i) {
    std::uint64_t t = r[i] * il % p;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + (p - t) * b[j]) % p;
  }
  r.resize(static_cast<std::size_t>(db));
  trim(r);
  return r;
}

Poly monic(const Poly& a, std::uint64_t p) {
  if (a.empty()) return a;
  return scale(a, inv(a.back(), p), p);
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

void ext_gcd(const Poly& a, const Poly& b, std::uint64_t p, Poly& g, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    g = s = t = {};
    return;
  }
  std::uint64_t il = inv(r0.back(), p);
  g = scale(r0, il, p);
  s = scale(s0, il, p);
  t = scale(t0, il, p);
}

Poly derivative(const Poly& a, std::uint64_t p) {
  if (a.size() < 2) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
  trim(r);
  return r;
}

Poly powmod(const Poly& base, const Integer& e, const Poly& m, std::uint64_t p) {
  Poly r{1 % p};
  trim(r);
  r = rem(r, m, p);
  Poly b = rem(base, m, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = rem(mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, b, p), m, p);
  }
  return r;
}

std::uint64_t eval(const Poly& f, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % p;
  return acc;
}

std::optional<std::uint64_t> reduce(const Rational& q, std::uint64_t p) {
  unsigned long d = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (d == 0) return std::nullopt;
  unsigned long n = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  return static_cast<std::uint64_t>(n) * inv(d, p) % p;
}

std::optional<Poly> reduce(const PolyQ& f, std::uint64_t p) {
  Poly r;
  r.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    auto v = reduce(c, p);
    if (!v) return std::nullopt;
    r.push_back(*v);
  }
  trim(r);
  return r;
}

bool is_squarefree(const Poly& f, std::uint64_t p) {
  if (degree(f) < 1) return true;
  return degree(gcd(f, derivative(f, p), p)) == 0;
}

std::vector<std::pair<int, Poly>> distinct_degree(const Poly& f0, std::uint64_t p) {
  std::vector<std::pair<int, Poly>> out;
  Poly f = monic(f0, p);
  Poly x{0, 1};
  Poly h = rem(x, f, p);
  Integer P(static_cast<unsigned long>(p));
  for (int d = 1; degree(f) >= 2 * d; ++d) {
    h = powmod(h, P, f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (degree(g) > 0) {
      out.emplace_back(d, g);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.emplace_back(degree(f), f);
  return out;
}

namespace {

void equal_degree(const Poly& g, int d, std::uint64_t p, std::mt19937_64& rng,
                  std::vector<Poly>& out) {
  int n = degree(g);
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer e = 1;
  Integer P(static_cast<unsigned long>(p));
  for (int i = 0; i < d; ++i) e *= P;
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  while (true) {
    Poly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Poly b = powmod(a, e, g, p);
    b = sub(b, Poly{1}, p);
    Poly h = gcd(g, b, p);
    if (degree(h) > 0 && degree(h) < n) {
      equal_degree(h, d, p, rng, out);
      equal_degree(divmod(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t p, std::mt19937_64& rng) {
  if (p == 2) throw DomainError("equal-degree splitting needs an odd prime");
  std::vector<Poly> out;
  for (auto& [d, g] : distinct_degree(f, p)) equal_degree(g, d, p, rng, out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<int> factor_degrees(const Poly& f, std::uint64_t p) {
  std::vector<int> degs;
  for (auto& [d, g] : distinct_degree(f, p))
    for (int i = 0; i < degree(g) / d; ++i) degs.push_back(d);
  std::sort(degs.begin(), degs.end());
  return degs;
}

std::vector<std::uint64_t> roots(const Poly& f0, std::uint64_t p, std::mt19937_64& rng) {
  Poly f = monic(f0, p);
  if (degree(f) < 1) return {};
  std::vector<std::uint64_t> out;
  if (p < 64) {
    for (std::uint64_t x = 0; x < p; ++x)
      if (eval(f, x, p) == 0) out.push_back(x);
    return out;
  }
  Poly x{0, 1};
  Poly g = gcd(f, sub(powmod(x, Integer(static_cast<unsigned long>(p)), f, p), x, p), p);
  if (degree(g) < 1) return out;
  std::vector<Poly> lin;
  equal_degree(g, 1, p, rng, lin);
  for (auto& l : lin) out.push_back((p - l[0]) % p);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace torsiongate::modp
