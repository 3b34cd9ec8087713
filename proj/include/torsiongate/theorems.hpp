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


#ifndef TORSIONGATE_THEOREMS_HPP
#define TORSIONGATE_THEOREMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "torsiongate/ellcurve.hpp"
#include "torsiongate/finitegroups.hpp"
#include "torsiongate/galois.hpp"
#include "torsiongate/numfield.hpp"

namespace torsiongate {

/// Relation claimed between the l-primary torsion of E over K and over L.
enum class Claim {
  none,
  primary_equal,  // E(L)[l^inf] = E(K)[l^inf]
  ell_trivial,    // E(L)[l] = O
};

std::string to_string(Claim c);

/// A predicate outcome. `curve`, `extension` and `ell` are kept so the claim
/// can be re-derived by brute force.
struct Verdict {
  std::string result_id;
  bool applicable = false;
  Claim claim = Claim::none;
  nlohmann::json conclusion = nlohmann::json::object();
  nlohmann::json witnesses = nlohmann::json::object();
  std::string reason;

  std::optional<Curve> curve;
  std::optional<PolyNF> extension;  // irreducible over the curve's field
  int ell = 0;

  nlohmann::json to_json() const;
};

/// Extension L/K of prime degree p >= 3, not normal; E over K.
Verdict thm_nongal_p(const Curve& E, const PolyNF& g, int ell, const TorsionOptions& opts = {});
Verdict thm_nongal_p(const Curve& E, const PolyQ& g, int ell, const TorsionOptions& opts = {});

/// Base Q only. Same hypotheses as the prime-degree theorem with l >= 5.
Verdict cor_overQ(const Curve& E, const PolyQ& g, int ell, const TorsionOptions& opts = {});
/// Symbolic form over Q(mu_inf): cyclotomic image forced to {1}. Nothing is
/// computed; the caller supplies p and whether E[l] has a rational point.
Verdict cor_overQmu(int p, int ell, bool base_has_ell_torsion);

struct VerificationReport {
  Verdict verdict;
  nlohmann::json brute_force = nlohmann::json::object();
  bool agrees = false;
  bool partial = false;  // a degree cap stopped the computation
  std::string error;
  nlohmann::json cost = nlohmann::json::object();

  nlohmann::json to_json(bool timings = true) const;
};

/// Recomputes both sides of an applicable verdict. Throws DomainError when
/// there is nothing to verify.
VerificationReport verify_verdict(const Verdict& v, const TorsionOptions& opts = {});

/// Membership in the list of torsion structures possible over a non-normal cubic field.
bool najman_allowed(long m, long n);
/// Checks `t` (computed over Q[x]/(g)) against that list. Throws DomainError
/// unless g is a cubic with non-normal splitting and t lives on a cubic field.
bool najman_check(const TorsionData& t, const PolyQ& g);

struct CheckResult {
  std::string id;
  std::string status;  // pass | fail | not_applicable | cap_exceeded
  std::string reason;
  nlohmann::json detail = nlohmann::json::object();

  bool ok() const { return status != "fail"; }
  nlohmann::json to_json() const;
};

/// Automorphisms of L fixing the image of K, as images of L's generator.
struct RelativeAutomorphisms {
  Embedding embedding;
  std::vector<FieldElement> images;
  int degree = 1;  // [L:K]
  bool is_galois() const { return static_cast<int>(images.size()) == degree; }
};
RelativeAutomorphisms relative_automorphisms(const Embedding& e, const FieldOptions& opts = {});

/// Group structure data of a Galois group given by generator images.
struct AutGroupInfo {
  bool abelian = true;
  long order = 1;
  long exponent = 1;
  long ell_rank_bound = 0;  // number of elements killed by ell
};
AutGroupInfo aut_group_info(const RelativeAutomorphisms& A, int ell);

/// Checks (a), (c), (d), (e) of the saturation lemma for E over K at level r.
/// `P` (a point of E(K)[l^inf]) picks the base of the division points used in (c);
/// when absent the first point giving a non-rational division point is used.
std::vector<CheckResult> lemma21_suite(const Curve& E, int ell, int r,
                                       const std::optional<CurvePoint>& P = std::nullopt,
                                       const TorsionOptions& opts = {});
CheckResult lemma21_a(const Curve& E, int ell, int r, const TorsionOptions& opts = {});
CheckResult lemma21_c(const Curve& E, int ell, int r, const std::optional<CurvePoint>& P = std::nullopt,
                      const TorsionOptions& opts = {});
CheckResult lemma21_d(const Curve& E, int ell, int r, const TorsionOptions& opts = {});
CheckResult lemma21_e(const Curve& E, int ell, int r, const TorsionOptions& opts = {});

/// For growth of l-primary torsion over L/K with [L:K] <= 3 and E(K)[l^inf] != O:
/// either L/K has a nontrivial cyclic subextension, or L(zeta_l)/K(zeta_l) has a
/// cyclic subextension of degree l and [L:K] is l or l^2. Throws DomainError when
/// the preconditions fail.
CheckResult growth_structure_check(const Curve& E, const PolyNF& g, int ell, const TorsionOptions& opts = {});

/// Exhaustive matrix-group checks for each l in the list (l <= 13).
nlohmann::json groupside_suite(const std::vector<int>& ells);
CheckResult borel_normality_sweep(int ell);
CheckResult classification_totality(int ell);
CheckResult cartan_s3_determinants(int ell);
CheckResult borel_s3_determinants(int ell);

/// E(K(T_k))[l^inf] = T_k for E(K) containing full l^m-torsion, l^m >= 3.
CheckResult thm_Tk_check(const Curve& E, int ell, int m, int k, const TorsionOptions& opts = {});

/// Certifies Gal(f/Q) = S_n from Frobenius cycle types.
Verdict thm_Sn_hypothesis(const PolyQ& f, int n);
/// G'H = G for G = S_n, H = <(1 2)>, and the normal subgroups of S_n (orders).
struct SnSkeleton {
  int n = 0;
  bool commutator_times_transposition = false;
  std::vector<std::size_t> normal_subgroup_orders;  // ascending
};
SnSkeleton sn_skeleton(int n);

}  // namespace torsiongate

#endif  // TORSIONGATE_THEOREMS_HPP
