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


// torsiongate command-line front end.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "torsiongate/galois.hpp"
#include "torsiongate/harness.hpp"
#include "torsiongate/io.hpp"
#include "torsiongate/theorems.hpp"

using namespace torsiongate;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2 };

struct Globals {
  int degree_cap = 0;  // 0: environment or default
  bool no_timings = false;
  std::string output;
  std::string format = "json";
  int jobs = 1;
};

TorsionOptions torsion_options(const Globals& g) {
  TorsionOptions o;
  o.field.degree_cap = g.degree_cap > 0 ? g.degree_cap : degree_cap_from_env(64);
  return o;
}

NumberField load_field(const std::string& spec, const FieldOptions& fo) {
  if (spec == "Q") return NumberField();
  return field_from_json(read_json_file(spec), fo, spec);
}

PolyQ load_ext_poly(const std::string& path) {
  json j = read_json_file(path);
  if (j.is_array()) return poly_from_json(j, path);
  if (!j.is_object() || !j.contains("defining_poly")) throw SpecError(path + ".defining_poly: missing");
  return poly_from_json(j["defining_poly"], path + ".defining_poly");
}

Curve load_curve(const std::string& path, const std::string& base, const FieldOptions& fo) {
  Curve E = curve_from_json(read_json_file(path), fo, path);
  if (!base.empty() && load_field(base, fo) != E.field())
    throw SpecError(path + ".field: curve field differs from --base");
  return E;
}

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw SpecError(g.output + ": cannot write");
  out << text;
}

void emit_json(const Globals& g, const json& j) { emit(g, j.dump(2) + "\n"); }

int emit_report(const Globals& g, const Report& r) {
  emit(g, g.format == "text" ? r.to_text() : r.to_json(!g.no_timings).dump(2) + "\n");
  return r.has_failures() ? kFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion of elliptic curves over number fields: verdicts and brute-force checks"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--degree-cap", g.degree_cap, "Largest field degree a construction may reach")->check(CLI::PositiveNumber);
  app.add_flag("--no-timings", g.no_timings, "Omit timings from JSON output");
  app.add_option("--output", g.output, "Write to this file instead of stdout");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "text"}));

  std::string curve, base, ext, name, input;
  int ell = 0, level = 1, m = 1;
  bool verify = false;

  auto* torsion = app.add_subcommand("torsion", "Torsion subgroup of a curve over an extension");
  torsion->add_option("--curve", curve, "Curve spec (JSON)")->required();
  torsion->add_option("--ext,--field", ext, "Extension field spec over the curve's field (omit for the base)");
  torsion->add_option("--ell", ell, "Restrict to the l-primary part")->check(CLI::PositiveNumber);

  auto* cyc = app.add_subcommand("cyc-image", "Order of the mod-l cyclotomic character image");
  cyc->add_option("--base", base, "Field spec or Q")->default_val("Q");
  cyc->add_option("--ell", ell, "Prime l")->required();

  auto* gal = app.add_subcommand("galois", "Galois data of a polynomial over Q");
  gal->add_option("--ext", ext, "Field spec or coefficient array")->required();

  auto* check = app.add_subcommand("check", "Prime-degree verdict for (E, L, l)");
  check->add_option("--curve", curve, "Curve spec (JSON)")->required();
  check->add_option("--base", base, "Field spec or Q; must match the curve");
  check->add_option("--ext", ext, "Extension spec over the base")->required();
  check->add_option("--ell", ell, "Prime l")->required();
  check->add_flag("--verify", verify, "Recompute both sides by brute force");

  auto* lemmas = app.add_subcommand("lemmas", "Exhaustive and desk-scale lemma checks");
  lemmas->add_option("--name", name, "Check to run")
      ->required()
      ->check(CLI::IsMember({"borel", "totality", "cartan", "groupside", "sn", "lemma21", "tk"}));
  lemmas->add_option("--ell", ell, "Prime l (or n for sn)");
  lemmas->add_option("--curve", curve, "Curve spec for lemma21 and tk");
  lemmas->add_option("--level", level, "Level r (lemma21) or k (tk)")->check(CLI::NonNegativeNumber);
  lemmas->add_option("--m", m, "Full torsion level m (tk)")->check(CLI::PositiveNumber);

  auto* batch = app.add_subcommand("batch", "Run the verdict harness over a corpus");
  batch->add_option("--input", input, "Corpus JSON")->required();
  batch->add_flag("--verify", verify, "Verify applicable verdicts");
  batch->add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);

  for (auto* sub : {torsion, cyc, gal, check, lemmas, batch}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    TorsionOptions opts = torsion_options(g);
    const FieldOptions& fo = opts.field;

    if (*torsion) {
      Curve E = load_curve(curve, "", fo);
      Embedding emb = Embedding::identity(E.field());
      if (!ext.empty()) emb = compositum(PolyNF::from_q(E.field(), load_ext_poly(ext)), fo).embedding;
      TorsionData t = ell ? ell_primary_torsion(E, emb, ell, opts) : torsion_subgroup(E, emb, opts);
      emit_json(g, torsion_to_json(t));
      return kOk;
    }
    if (*cyc) {
      CycImage c = cyclotomic_character_image(load_field(base, fo), ell, fo);
      emit_json(g, {{"ell", c.ell}, {"order", c.order}, {"is_pm1", c.is_pm1()}, {"is_trivial", c.is_trivial()}});
      return kOk;
    }
    if (*gal) {
      PolyQ f = load_ext_poly(ext);
      json out{{"polynomial", poly_to_json(f)}};
      if (f.degree() == 3) {
        auto v = cubic_galois_group(f.monic(), fo);
        out["cubic"] = {{"kind", v.kind}, {"witness", v.witness}};
      }
      json pats = json::array();
      for (const auto& p : dedekind_patterns(f).patterns) pats.push_back({{"prime", p.prime}, {"degrees", p.degrees}});
      out["dedekind_patterns"] = pats;
      if (f.degree() >= 5) out["symmetric"] = thm_Sn_hypothesis(f, f.degree()).to_json();
      emit_json(g, out);
      return kOk;
    }
    if (*check) {
      Curve E = load_curve(curve, base, fo);
      Verdict v = thm_nongal_p(E, load_ext_poly(ext), ell, opts);
      Report r;
      TaskResult t{"check", v.result_id, v.applicable ? "pass" : "not_applicable", {{"verdict", v.to_json()}}};
      if (!v.applicable) t.body["reason"] = v.reason;
      if (v.applicable && verify) {
        VerificationReport rep = verify_verdict(v, opts);
        t.body["verification"] = rep.to_json(!g.no_timings);
        t.body["verification"].erase("verdict");
        t.status = rep.partial ? "cap_exceeded" : rep.agrees ? "pass" : "fail";
      }
      r.tasks.push_back(t);
      return emit_report(g, r);
    }
    if (*lemmas) {
      Report r;
      auto need_ell = [&] {
        if (ell <= 0) throw SpecError("--ell is required for --name " + name);
      };
      if (name == "borel") {
        need_ell();
        r.tasks.push_back(task_from_check("borel l=" + std::to_string(ell), borel_normality_sweep(ell)));
      } else if (name == "totality") {
        need_ell();
        r.tasks.push_back(task_from_check("totality l=" + std::to_string(ell), classification_totality(ell)));
      } else if (name == "cartan") {
        need_ell();
        r.tasks.push_back(task_from_check("cartan l=" + std::to_string(ell), cartan_s3_determinants(ell)));
      } else if (name == "groupside") {
        need_ell();
        json rep = groupside_suite({ell});
        for (const auto& c : rep["checks"])
          r.tasks.push_back({c["id"].get<std::string>() + " l=" + std::to_string(ell), c["id"], c["status"], c});
      } else if (name == "sn") {
        need_ell();
        SnSkeleton s = sn_skeleton(ell);
        std::size_t nf = 1;
        for (int i = 2; i <= ell; ++i) nf *= static_cast<std::size_t>(i);
        bool ok = s.commutator_times_transposition &&
                  (ell < 5 || s.normal_subgroup_orders == std::vector<std::size_t>{1, nf / 2, nf});
        r.tasks.push_back({"sn n=" + std::to_string(ell), "thm_Sn_hyp", ok ? "pass" : "fail",
                           {{"commutator_times_transposition", s.commutator_times_transposition},
                            {"normal_subgroup_orders", s.normal_subgroup_orders}}});
      } else {
        need_ell();
        if (curve.empty()) throw SpecError("--curve is required for --name " + name);
        Curve E = load_curve(curve, "", fo);
        if (name == "lemma21") {
          for (const auto& c : lemma21_suite(E, ell, level, std::nullopt, opts))
            r.tasks.push_back(task_from_check(c.id + " r=" + std::to_string(level), c));
        } else {
          r.tasks.push_back(task_from_check("tk m=" + std::to_string(m) + " k=" + std::to_string(level),
                                            thm_Tk_check(E, ell, m, level, opts)));
        }
      }
      return emit_report(g, r);
    }
    if (*batch) {
      HarnessOptions h;
      h.jobs = g.jobs;
      h.verify = verify;
      h.torsion = opts;
      Report r = run_corpus(corpus_from_json(read_json_file(input), fo), h);
      return emit_report(g, r);
    }
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegreeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
