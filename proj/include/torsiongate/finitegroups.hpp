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


// Finite matrix groups over F_l and permutation groups, enumerated explicitly.

#ifndef TORSIONGATE_FINITEGROUPS_HPP
#define TORSIONGATE_FINITEGROUPS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "torsiongate/errors.hpp"

namespace torsiongate {

inline constexpr std::size_t kDefaultEnumerationCap = 1000000;

namespace detail {
inline int mod(long v, int p) {
  long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}
inline int inv_mod(int a, int p) {
  int r = 1, b = mod(a, p);
  for (int e = p - 2; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}
inline bool small_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
inline std::size_t hash_mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }
}  // namespace detail

// -- Elements -----------------------------------------------------------------------------

/// (a b; c d) over F_ell.
struct GL2Elt {
  int ell = 2;
  int a = 1, b = 0, c = 0, d = 1;

  static GL2Elt make(int ell, long a, long b, long c, long d) {
    if (!detail::small_prime(ell)) throw DomainError("GL2: modulus must be prime");
    GL2Elt g{ell, detail::mod(a, ell), detail::mod(b, ell), detail::mod(c, ell), detail::mod(d, ell)};
    if (g.det() == 0) throw DomainError("GL2: singular matrix");
    return g;
  }
  static GL2Elt identity(int ell) { return make(ell, 1, 0, 0, 1); }
  static GL2Elt unipotent(int ell) { return make(ell, 1, 1, 0, 1); }
  static GL2Elt diag(int ell, long x, long y) { return make(ell, x, 0, 0, y); }

  int det() const { return detail::mod(static_cast<long>(a) * d - static_cast<long>(b) * c, ell); }
  bool is_upper_triangular() const { return c == 0; }
  bool is_scalar() const { return b == 0 && c == 0 && a == d; }

  friend GL2Elt operator*(const GL2Elt& x, const GL2Elt& y) {
    int p = x.ell;
    return GL2Elt{p, detail::mod(x.a * y.a + x.b * y.c, p), detail::mod(x.a * y.b + x.b * y.d, p),
                  detail::mod(x.c * y.a + x.d * y.c, p), detail::mod(x.c * y.b + x.d * y.d, p)};
  }
  friend GL2Elt inverse(const GL2Elt& x) {
    int p = x.ell, di = detail::inv_mod(x.det(), p);
    return GL2Elt{p, detail::mod(x.d * di, p), detail::mod(-x.b * di, p), detail::mod(-x.c * di, p),
                  detail::mod(x.a * di, p)};
  }
  friend GL2Elt identity_like(const GL2Elt& x) { return GL2Elt{x.ell, 1, 0, 0, 1}; }
  friend bool operator==(const GL2Elt& x, const GL2Elt& y) {
    return x.ell == y.ell && x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const GL2Elt& x, const GL2Elt& y) { return !(x == y); }
  friend bool operator<(const GL2Elt& x, const GL2Elt& y) {
    return std::tie(x.ell, x.a, x.b, x.c, x.d) < std::tie(y.ell, y.a, y.b, y.c, y.d);
  }
  std::array<int, 4> entries() const { return {a, b, c, d}; }
  std::string to_string() const {
    return "[" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + "," + std::to_string(d) + "]";
  }
};

/// Permutation of {0..n-1}; (p*q)(i) = p(q(i)).
struct Perm {
  std::vector<std::uint8_t> img;

  static Perm identity(int n) {
    Perm p;
    p.img.resize(static_cast<std::size_t>(n));
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
  }
  /// Product of disjoint cycles, 1-based as written by hand: {{1,2},{3,4,5}}.
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Perm p = identity(n);
    for (const auto& cyc : cycles)
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        int from = cyc[i] - 1, to = cyc[(i + 1) % cyc.size()] - 1;
        if (from < 0 || from >= n || to < 0 || to >= n) throw DomainError("cycle entry out of range");
        p.img[static_cast<std::size_t>(from)] = static_cast<std::uint8_t>(to);
      }
    return p;
  }
  int degree() const { return static_cast<int>(img.size()); }
  /// Sorted cycle lengths, fixed points included.
  std::vector<int> cycle_type() const {
    std::vector<int> out;
    std::vector<bool> seen(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = img[j]) {
        seen[j] = true;
        ++len;
      }
      out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
  }
  int sign() const {
    int s = 1;
    for (int len : cycle_type())
      if (len % 2 == 0) s = -s;
    return s;
  }

  friend Perm operator*(const Perm& p, const Perm& q) {
    Perm r;
    r.img.resize(q.img.size());
    for (std::size_t i = 0; i < q.img.size(); ++i) r.img[i] = p.img[q.img[i]];
    return r;
  }
  friend Perm inverse(const Perm& p) {
    Perm r;
    r.img.resize(p.img.size());
    for (std::size_t i = 0; i < p.img.size(); ++i) r.img[p.img[i]] = static_cast<std::uint8_t>(i);
    return r;
  }
  friend Perm identity_like(const Perm& p) { return identity(p.degree()); }
  friend bool operator==(const Perm& p, const Perm& q) { return p.img == q.img; }
  friend bool operator!=(const Perm& p, const Perm& q) { return p.img != q.img; }
  friend bool operator<(const Perm& p, const Perm& q) { return p.img < q.img; }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < img.size(); ++i) s += (i ? " " : "") + std::to_string(img[i] + 1);
    return s + ")";
  }
};

}  // namespace torsiongate

template <>
struct std::hash<torsiongate::GL2Elt> {
  std::size_t operator()(const torsiongate::GL2Elt& g) const noexcept {
    return static_cast<std::size_t>(((g.a * 131 + g.b) * 131 + g.c) * 131 + g.d);
  }
};
template <>
struct std::hash<torsiongate::Perm> {
  std::size_t operator()(const torsiongate::Perm& p) const noexcept {
    std::size_t h = p.img.size();
    for (auto v : p.img) h = torsiongate::detail::hash_mix(h, v);
    return h;
  }
};

namespace torsiongate {

// -- Groups ---------------------------------------------------------------------------------

/// An enumerated group: sorted element list plus the generators it came from.
template <class E>
class Group {
 public:
  Group() = default;
  Group(std::vector<E> elements, std::vector<E> generators)
      : elements_(std::move(elements)), generators_(std::move(generators)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    members_.insert(elements_.begin(), elements_.end());
  }
  const std::vector<E>& elements() const { return elements_; }
  const std::vector<E>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const E& e) const { return members_.count(e) > 0; }
  const E& identity() const { return *std::find_if(elements_.begin(), elements_.end(), [this](const E& e) {
    return e * e == e;
  }); }
  friend bool operator==(const Group& x, const Group& y) { return x.elements_ == y.elements_; }
  friend bool operator<(const Group& x, const Group& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements_ < y.elements_;
  }

 private:
  std::vector<E> elements_;
  std::vector<E> generators_;
  std::unordered_set<E> members_;
};

using MatGroup = Group<GL2Elt>;
using PermGroup = Group<Perm>;

/// Smallest group containing gens; `one` supplies the identity when gens is empty.
template <class E>
Group<E> closure(const std::vector<E>& gens, const E& one, std::size_t cap = kDefaultEnumerationCap) {
  std::unordered_set<E> seen{one};
  std::vector<E> queue{one};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      E t = queue[i] * g;
      if (seen.insert(t).second) {
        if (seen.size() > cap) throw EnumerationCapExceeded("group closure exceeds enumeration cap");
        queue.push_back(std::move(t));
      }
    }
  return Group<E>(std::move(queue), gens);
}

inline MatGroup mat_closure(int ell, const std::vector<GL2Elt>& gens, std::size_t cap = kDefaultEnumerationCap) {
  for (const auto& g : gens)
    if (g.ell != ell) throw DomainError("generator over the wrong field");
  return closure(gens, GL2Elt::identity(ell), cap);
}

inline PermGroup perm_closure(int n, const std::vector<Perm>& gens, std::size_t cap = kDefaultEnumerationCap) {
  for (const auto& g : gens)
    if (g.degree() != n) throw DomainError("permutation of the wrong degree");
  return closure(gens, Perm::identity(n), cap);
}

template <class E>
bool is_subset(const Group<E>& H, const Group<E>& G) {
  return std::all_of(H.elements().begin(), H.elements().end(), [&](const E& h) { return G.contains(h); });
}

template <class E>
std::vector<E> generators_or_elements(const Group<E>& G) {
  if (!G.generators().empty() || G.order() == 1) return G.generators();
  return G.elements();
}

/// Smallest normal subgroup of G containing the given elements.
template <class E>
Group<E> normal_closure(const std::vector<E>& seeds, const Group<E>& G, std::size_t cap = kDefaultEnumerationCap) {
  E one = G.elements().front() * inverse(G.elements().front());
  auto conj = generators_or_elements(G);
  Group<E> N = closure<E>({}, one, cap);
  std::vector<E> gens;
  std::vector<E> pending(seeds.begin(), seeds.end());
  while (!pending.empty()) {
    E x = pending.back();
    pending.pop_back();
    if (N.contains(x)) continue;
    gens.push_back(x);
    N = closure(gens, one, cap);
    for (const auto& g : conj) pending.push_back(g * x * inverse(g));
  }
  return N;
}

template <class E>
Group<E> commutator_subgroup(const Group<E>& G) {
  auto gens = generators_or_elements(G);
  std::vector<E> comms;
  for (const auto& x : gens)
    for (const auto& y : gens) comms.push_back(x * y * inverse(x) * inverse(y));
  return normal_closure(comms, G);
}

template <class E>
bool is_normal(const Group<E>& H, const Group<E>& G) {
  if (!is_subset(H, G)) throw DomainError("is_normal: H is not contained in G");
  for (const auto& g : generators_or_elements(G)) {
    E gi = inverse(g);
    for (const auto& h : H.elements())
      if (!H.contains(g * h * gi)) return false;
  }
  return true;
}

/// True iff the set product G'H is all of G.
template <class E>
bool no_abelian_subextension_criterion(const Group<E>& G, const Group<E>& H) {
  if (!is_subset(H, G)) throw DomainError("criterion: H is not contained in G");
  Group<E> D = commutator_subgroup(G);
  if (D.order() * H.order() < G.order()) return false;
  std::unordered_set<E> prod;
  for (const auto& d : D.elements())
    for (const auto& h : H.elements()) prod.insert(d * h);
  return prod.size() == G.order();
}

/// G/G' is abelian: commutators of coset representatives land in G'.
template <class E>
bool quotient_is_abelian(const Group<E>& G, const Group<E>& N) {
  for (const auto& x : G.elements())
    for (const auto& y : G.elements())
      if (!N.contains(x * y * inverse(x) * inverse(y))) return false;
  return true;
}

template <class E>
long element_order(const E& g) {
  E one = g * inverse(g);
  E x = g;
  long k = 1;
  while (x != one) {
    x = x * g;
    ++k;
  }
  return k;
}

template <class E>
bool is_abelian(const Group<E>& G) {
  auto gens = generators_or_elements(G);
  for (const auto& x : gens)
    for (const auto& y : gens)
      if (x * y != y * x) return false;
  return true;
}

// -- Subgroup lattice ----------------------------------------------------------------------

/// Cayley table over an enumerated group; subgroups as bitsets over element indices.
template <class E>
class IndexedGroup {
 public:
  using Bits = std::vector<std::uint64_t>;

  explicit IndexedGroup(const Group<E>& G) : elems_(G.elements()) {
    n_ = elems_.size();
    for (std::size_t i = 0; i < n_; ++i) index_[elems_[i]] = static_cast<std::uint32_t>(i);
    table_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) table_[i * n_ + j] = index_.at(elems_[i] * elems_[j]);
    for (std::size_t i = 0; i < n_; ++i)
      if (elems_[i] * elems_[i] == elems_[i]) one_ = static_cast<std::uint32_t>(i);
  }

  std::size_t size() const { return n_; }
  const E& element(std::uint32_t i) const { return elems_[i]; }
  std::uint32_t index(const E& e) const { return index_.at(e); }
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const { return table_[i * n_ + j]; }

  Bits empty_bits() const { return Bits((n_ + 63) / 64, 0); }
  static bool test(const Bits& b, std::uint32_t i) { return (b[i / 64] >> (i % 64)) & 1ULL; }
  static void set(Bits& b, std::uint32_t i) { b[i / 64] |= 1ULL << (i % 64); }
  static std::size_t count(const Bits& b) {
    std::size_t c = 0;
    for (auto w : b) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  static bool subset(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] & ~b[i]) return false;
    return true;
  }

  Bits generate(const std::vector<std::uint32_t>& gens) const {
    Bits b = empty_bits();
    std::vector<std::uint32_t> queue{one_};
    set(b, one_);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (auto g : gens) {
        auto t = mul(queue[i], g);
        if (!test(b, t)) {
          set(b, t);
          queue.push_back(t);
        }
      }
    return b;
  }

  Group<E> to_group(const Bits& b, std::vector<E> gens = {}) const {
    std::vector<E> out;
    for (std::uint32_t i = 0; i < n_; ++i)
      if (test(b, i)) out.push_back(elems_[i]);
    return Group<E>(std::move(out), std::move(gens));
  }

  struct Subgroup {
    Bits bits;
    std::vector<std::uint32_t> gens;
    std::size_t order;
  };

  /// All subgroups: cyclic ones, then joins with cyclic subgroups until nothing new appears.
  std::vector<Subgroup> subgroups() const {
    struct BitsHash {
      std::size_t operator()(const Bits& b) const {
        std::size_t h = 0;
        for (auto w : b) h = detail::hash_mix(h, static_cast<std::size_t>(w));
        return h;
      }
    };
    std::unordered_map<Bits, std::size_t, BitsHash> seen;
    std::vector<Subgroup> all;
    auto add = [&](Bits b, std::vector<std::uint32_t> gens) {
      if (seen.count(b)) return false;
      seen.emplace(b, all.size());
      std::size_t ord = count(b);
      all.push_back({std::move(b), std::move(gens), ord});
      return true;
    };
    std::vector<std::pair<Bits, std::uint32_t>> cyclic;
    for (std::uint32_t g = 0; g < n_; ++g) {
      Bits b = generate({g});
      if (add(b, g == one_ ? std::vector<std::uint32_t>{} : std::vector<std::uint32_t>{g})) cyclic.push_back({b, g});
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (const auto& [cb, cg] : cyclic) {
        if (subset(cb, all[i].bits)) continue;
        auto gens = all[i].gens;
        gens.push_back(cg);
        Bits j = generate(gens);
        add(std::move(j), std::move(gens));
      }
    }
    std::sort(all.begin(), all.end(), [](const Subgroup& x, const Subgroup& y) {
      if (x.order != y.order) return x.order < y.order;
      return x.bits < y.bits;
    });
    return all;
  }

 private:
  std::vector<E> elems_;
  std::size_t n_ = 0;
  std::unordered_map<E, std::uint32_t> index_;
  std::vector<std::uint32_t> table_;
  std::uint32_t one_ = 0;
};

/// Every subgroup of G (|G| <= 1000), sorted by order then elements.
template <class E>
std::vector<Group<E>> enumerate_subgroups(const Group<E>& G, std::size_t max_order = 1000) {
  if (G.order() > max_order) throw EnumerationCapExceeded("subgroup enumeration limited to |G| <= 1000");
  IndexedGroup<E> IG(G);
  std::vector<Group<E>> out;
  for (const auto& s : IG.subgroups()) {
    std::vector<E> gens;
    for (auto g : s.gens) gens.push_back(IG.element(g));
    out.push_back(IG.to_group(s.bits, std::move(gens)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// -- GL2(F_l) structure -------------------------------------------------------------------

inline MatGroup gl2(int ell) {
  std::vector<GL2Elt> all;
  for (int a = 0; a < ell; ++a)
    for (int b = 0; b < ell; ++b)
      for (int c = 0; c < ell; ++c)
        for (int d = 0; d < ell; ++d)
          if (detail::mod(a * d - b * c, ell) != 0) all.push_back(GL2Elt{ell, a, b, c, d});
  return MatGroup(std::move(all), {});
}

inline MatGroup sl2(int ell) {
  std::vector<GL2Elt> all;
  MatGroup G = gl2(ell);
  for (const auto& g : G.elements())
    if (g.det() == 1) all.push_back(g);
  return MatGroup(std::move(all), {});
}

/// Upper-triangular matrices.
inline MatGroup borel(int ell) {
  std::vector<GL2Elt> all;
  for (int a = 1; a < ell; ++a)
    for (int b = 0; b < ell; ++b)
      for (int d = 1; d < ell; ++d) all.push_back(GL2Elt{ell, a, b, 0, d});
  return MatGroup(std::move(all), {});
}

/// Determinant image as a sorted subset of (Z/l)^*.
inline std::vector<int> det_image(const MatGroup& H) {
  std::set<int> d;
  for (const auto& h : H.elements()) d.insert(h.det());
  return {d.begin(), d.end()};
}

/// Determinant image equal to {1, -1} (or {1} when l = 2).
inline bool det_is_pm1(const MatGroup& H) {
  if (H.order() == 0) return false;
  int ell = H.elements().front().ell;
  std::vector<int> pm{1, ell - 1};
  if (ell == 2) pm = {1};
  return det_image(H) == pm;
}

/// Normal iff U is in H or every element of H has equal diagonal entries.
inline bool borel_normality_criterion(const MatGroup& H, const MatGroup& G) {
  if (G.order() == 0) throw DomainError("empty group");
  int ell = G.elements().front().ell;
  for (const auto& g : G.elements())
    if (!g.is_upper_triangular()) throw DomainError("criterion needs an upper-triangular group");
  if (G.order() % static_cast<std::size_t>(ell) != 0) throw DomainError("criterion needs l to divide |G|");
  if (!is_subset(H, G)) throw DomainError("criterion: H is not contained in G");
  if (H.contains(GL2Elt::unipotent(ell))) return true;
  return std::all_of(H.elements().begin(), H.elements().end(), [](const GL2Elt& h) { return h.a == h.d; });
}

struct CartanStructures {
  int ell;
  MatGroup split, split_normalizer, nonsplit, nonsplit_normalizer;
};

namespace detail {
inline int nonresidue(int ell) {
  for (int e = 2; e < ell; ++e) {
    bool square = false;
    for (int x = 1; x < ell && !square; ++x) square = (x * x) % ell == e;
    if (!square) return e;
  }
  return -1;
}
}  // namespace detail

inline CartanStructures cartan_structures(int ell) {
  if (!detail::small_prime(ell)) throw DomainError("cartan_structures: l must be prime");
  if (ell > 13) throw EnumerationCapExceeded("cartan_structures supports l <= 13");
  CartanStructures cs{ell, {}, {}, {}, {}};
  std::vector<GL2Elt> split, split_n, ns, ns_n;
  for (int a = 1; a < ell; ++a)
    for (int d = 1; d < ell; ++d) {
      split.push_back(GL2Elt{ell, a, 0, 0, d});
      split_n.push_back(GL2Elt{ell, a, 0, 0, d});
      split_n.push_back(GL2Elt{ell, 0, a, d, 0});
    }
  GL2Elt sigma;
  for (int a = 0; a < ell; ++a)
    for (int b = 0; b < ell; ++b) {
      if (a == 0 && b == 0) continue;
      if (ell == 2) {
        ns.push_back(GL2Elt{2, a, b, b, (a + b) % 2});
      } else {
        int eps = detail::nonresidue(ell);
        ns.push_back(GL2Elt{ell, a, detail::mod(eps * b, ell), b, a});
      }
    }
  // Frobenius of F_{l^2} in the basis used above.
  sigma = ell == 2 ? GL2Elt{2, 1, 1, 0, 1} : GL2Elt::diag(ell, 1, -1);
  for (const auto& g : ns) {
    ns_n.push_back(g);
    ns_n.push_back(g * sigma);
  }
  cs.split = MatGroup(split, {});
  cs.split_normalizer = MatGroup(split_n, {});
  cs.nonsplit = MatGroup(ns, {});
  cs.nonsplit_normalizer = MatGroup(ns_n, {});
  return cs;
}

namespace detail {

/// F_{l^2} = F_l[s]/(s^2 - alpha - beta s), elements u + v s.
struct Fl2 {
  int ell, alpha, beta;
  explicit Fl2(int p) : ell(p) {
    if (p == 2) {
      alpha = 1;
      beta = 1;
    } else {
      alpha = nonresidue(p);
      beta = 0;
    }
  }
  using El = std::pair<int, int>;
  El mul(El x, El y) const {
    long uu = static_cast<long>(x.first) * y.first, vv = static_cast<long>(x.second) * y.second;
    long uv = static_cast<long>(x.first) * y.second + static_cast<long>(x.second) * y.first;
    return {mod(uu + vv * alpha, ell), mod(uv + vv * beta, ell)};
  }
  El add(El x, El y) const { return {mod(x.first + y.first, ell), mod(x.second + y.second, ell)}; }
  El pow(El x, long e) const {
    El r{1, 0};
    for (; e > 0; e >>= 1, x = mul(x, x))
      if (e & 1) r = mul(r, x);
    return r;
  }
  El inv(El x) const { return pow(x, static_cast<long>(ell) * ell - 2); }
  El frob(El x) const { return pow(x, ell); }
  /// z -> (c + d z) / (a + b z): action of g on the point (1 : z).
  El act(const GL2Elt& g, El z) const {
    El num = add({g.c, 0}, mul({g.d, 0}, z));
    El den = add({g.a, 0}, mul({g.b, 0}, z));
    return mul(num, inv(den));
  }
};

/// Lines of F_l^2 as normalized vectors: (1, t) for t < l, then (0, 1) as index l.
inline int line_image(const GL2Elt& g, int line) {
  int ell = g.ell;
  int x = line < ell ? 1 : 0, y = line < ell ? line : 1;
  int u = mod(g.a * x + g.b * y, ell), v = mod(g.c * x + g.d * y, ell);
  if (u == 0) return ell;
  return mod(static_cast<long>(v) * inv_mod(u, ell), ell);
}

inline std::vector<GL2Elt> gens_of(const MatGroup& H) {
  return H.generators().empty() ? H.elements() : H.generators();
}

// Projective image: matrices scaled so the first nonzero entry of the top row is 1.
inline GL2Elt projective_normalize(const GL2Elt& g) {
  int lead = g.a != 0 ? g.a : g.b;
  int s = inv_mod(lead, g.ell);
  return GL2Elt{g.ell, mod(g.a * s, g.ell), mod(g.b * s, g.ell), mod(g.c * s, g.ell), mod(g.d * s, g.ell)};
}

}  // namespace detail

inline bool has_stable_line(const MatGroup& H) {
  int ell = H.elements().front().ell;
  auto gens = detail::gens_of(H);
  for (int L = 0; L <= ell; ++L)
    if (std::all_of(gens.begin(), gens.end(), [&](const GL2Elt& g) { return detail::line_image(g, L) == L; }))
      return true;
  return false;
}

inline bool in_split_cartan_normalizer_conjugate(const MatGroup& H) {
  int ell = H.elements().front().ell;
  auto gens = detail::gens_of(H);
  for (int L1 = 0; L1 <= ell; ++L1)
    for (int L2 = L1 + 1; L2 <= ell; ++L2) {
      bool ok = std::all_of(gens.begin(), gens.end(), [&](const GL2Elt& g) {
        int i1 = detail::line_image(g, L1), i2 = detail::line_image(g, L2);
        return (i1 == L1 && i2 == L2) || (i1 == L2 && i2 == L1);
      });
      if (ok) return true;
    }
  return false;
}

inline bool in_nonsplit_cartan_normalizer_conjugate(const MatGroup& H) {
  int ell = H.elements().front().ell;
  detail::Fl2 F(ell);
  auto gens = detail::gens_of(H);
  for (int u = 0; u < ell; ++u)
    for (int v = 1; v < ell; ++v) {
      detail::Fl2::El z{u, v}, zb = F.frob(z);
      bool ok = std::all_of(gens.begin(), gens.end(), [&](const GL2Elt& g) {
        auto w = F.act(g, z);
        return w == z || w == zb;
      });
      if (ok) return true;
    }
  return false;
}

/// Orders of elements in the image of H in PGL2, as (order -> count).
inline std::map<long, long> projective_order_statistics(const std::vector<GL2Elt>& image) {
  std::map<long, long> stats;
  for (const auto& g : image) {
    GL2Elt x = g;
    long k = 1;
    while (!x.is_scalar()) {
      x = x * g;
      ++k;
    }
    ++stats[k];
  }
  return stats;
}

/// Label of the projective image when it is A4, S4 or A5; empty otherwise.
inline std::string exceptional_projective_type(const MatGroup& H) {
  std::set<GL2Elt> img;
  for (const auto& h : H.elements()) img.insert(detail::projective_normalize(h));
  std::vector<GL2Elt> image(img.begin(), img.end());
  std::size_t n = image.size();
  if (n != 12 && n != 24 && n != 60) return {};
  auto stats = projective_order_statistics(image);
  std::map<long, long> want;
  long k = 0;
  std::string label;
  if (n == 12) {
    want = {{1, 1}, {2, 3}, {3, 8}};
    k = 3;
    label = "A4";
  } else if (n == 24) {
    want = {{1, 1}, {2, 9}, {3, 8}, {4, 6}};
    k = 4;
    label = "S4";
  } else {
    want = {{1, 1}, {2, 15}, {3, 20}, {5, 24}};
    k = 5;
    label = "A5";
  }
  if (stats != want) return {};
  // Presentation check: a^2 = b^3 = (ab)^k = 1 with <a, b> the whole image.
  auto porder = [](const GL2Elt& g) {
    GL2Elt x = g;
    long m = 1;
    while (!x.is_scalar()) {
      x = x * g;
      ++m;
    }
    return m;
  };
  for (const auto& a : image) {
    if (porder(a) != 2) continue;
    for (const auto& b : image) {
      if (porder(b) != 3 || porder(a * b) != k) continue;
      std::set<GL2Elt> gen{detail::projective_normalize(GL2Elt::identity(a.ell))};
      std::vector<GL2Elt> queue(gen.begin(), gen.end());
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (const auto& g : {a, b}) {
          GL2Elt t = detail::projective_normalize(queue[i] * g);
          if (gen.insert(t).second) queue.push_back(t);
        }
      if (gen.size() == n) return label;
    }
  }
  return {};
}

/// Cases A (contains SL2), B (Borel, l | |H|), C (Cartan normalizer), D (exceptional image).
inline std::set<char> classify_subgroup(const MatGroup& H) {
  if (H.order() == 0) throw DomainError("empty group");
  int ell = H.elements().front().ell;
  std::set<char> out;
  long sl = static_cast<long>(ell) * (static_cast<long>(ell) * ell - 1);
  long det1 = std::count_if(H.elements().begin(), H.elements().end(), [](const GL2Elt& g) { return g.det() == 1; });
  if (det1 == sl) out.insert('A');
  if (H.order() % static_cast<std::size_t>(ell) == 0 && has_stable_line(H)) out.insert('B');
  if (in_split_cartan_normalizer_conjugate(H) || in_nonsplit_cartan_normalizer_conjugate(H)) out.insert('C');
  if (!exceptional_projective_type(H).empty()) out.insert('D');
  return out;
}

// -- Symmetric groups ------------------------------------------------------------------------

inline PermGroup symmetric_group(int n) {
  if (n < 1 || n > 10) throw DomainError("symmetric_group supports 1 <= n <= 10");
  if (n == 1) return perm_closure(1, {});
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  return perm_closure(n, {Perm::from_cycles(n, {{1, 2}}), Perm::from_cycles(n, {all})});
}

inline PermGroup alternating_group(int n) {
  std::vector<Perm> even;
  PermGroup S = symmetric_group(n);
  for (const auto& p : S.elements())
    if (p.sign() == 1) even.push_back(p);
  return PermGroup(std::move(even), {});
}

/// Stabilizer of the last point.
inline PermGroup point_stabilizer(const PermGroup& G) {
  std::vector<Perm> out;
  for (const auto& p : G.elements())
    if (p.img.back() == p.img.size() - 1) out.push_back(p);
  return PermGroup(std::move(out), {});
}

/// Sufficient test that a transitive group with these cycle types is the full S_n.
/// Needs an n-cycle, primitivity (n prime, or a p-cycle power with n/2 < p < n), and
/// either a transposition power or a Jordan p-cycle (p <= n-3, or p = 3) with an odd type.
inline bool certify_Sn(const std::vector<std::vector<int>>& cycle_types, int n, bool strict = false) {
  if (n < 5) {
    if (strict) throw DomainError("certify_Sn needs n >= 5");
    return false;
  }
  bool ncycle = false, transposition = false, odd = false, primitive = detail::small_prime(n), jordan = false;
  for (auto t : cycle_types) {
    std::sort(t.rbegin(), t.rend());
    if (std::accumulate(t.begin(), t.end(), 0) != n) throw DomainError("cycle type is not a partition of n");
    if (t.size() == 1) ncycle = true;
    int evens = static_cast<int>(std::count_if(t.begin(), t.end(), [](int x) { return x % 2 == 0; }));
    if (evens % 2 == 1) odd = true;
    if (std::count(t.begin(), t.end(), 2) == 1 && evens == 1) transposition = true;
    // A part p occurring once, all other parts prime to p: a power of the element is a p-cycle.
    for (int p : t) {
      if (p < 2 || !detail::small_prime(p) || std::count(t.begin(), t.end(), p) != 1) continue;
      if (!std::all_of(t.begin(), t.end(), [p](int x) { return x == p || x % p != 0; })) continue;
      if (2 * p > n && p < n) primitive = true;
      if (p <= n - 3 || p == 3) jordan = true;
    }
  }
  if (!ncycle || !primitive) return false;
  return transposition || (jordan && odd);
}

}  // namespace torsiongate

#endif  // TORSIONGATE_FINITEGROUPS_HPP
